"""Static per-level registry for the genus-zero groups Gamma_0(N).

For each N in {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25} the
registry records the cusps, a Hauptmodul with a simple pole at infinity,
the maximal-vanishing formulas v_k(N) and u_k(N), the recipe for the first
basis element in each even weight, and the monic polynomial whose value at
the Hauptmodul kills the non-infinity cusps.

Two source typos are corrected here and flagged: the level-9 Hauptmodul
line (a duplicate of level 8) and the level-6 cusp polynomial (malformed;
rederived from numeric cusp values and confirmed by the duality suite).
Entries are immutable; concurrent reads are unrestricted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from gridforge.generators import EtaQuotient

GENUS_ZERO_LEVELS = (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25)
ALL_LEVELS = (1,) + GENUS_ZERO_LEVELS


# -- seed recipes ---------------------------------------------------------
#
# The first basis element of the weight-k space is either a power of the
# level's weight-2 form, or F_base^l * F_{k'} for the decomposition
# k = modulus*l + k'.  Individual F-forms are described by small spec
# objects evaluated in gridforge.basis (synthesized ones via seedsynth).

@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Eis:
    """The one-dimensional level-one space at this weight (E4, E6, ...)."""
    weight: int


@dataclass(frozen=True)
class DeltaForm:
    pass


@dataclass(frozen=True)
class Phi:
    """(n E2(nz) - E2(z)) / (n - 1)."""
    n: int


@dataclass(frozen=True)
class Eta:
    quotient: EtaQuotient


@dataclass(frozen=True)
class EtaCombo:
    """A rational linear combination of eta quotients."""
    terms: tuple  # of (Fraction, EtaQuotient)


@dataclass(frozen=True)
class EisDiff:
    """(E_w(z) - E_w(dz)) / denom."""
    weight: int
    d: int
    denom: int


@dataclass(frozen=True)
class EisMinusSquare:
    """(E4 - F2^2) / denom, with F2 the same level's weight-2 form."""
    denom: int


@dataclass(frozen=True)
class E2Combo:
    """(sum c * E2(dz) over (c, d) pairs) / denom."""
    terms: tuple
    denom: int = 1


@dataclass(frozen=True)
class Product:
    """Product of two lower-weight forms of the same level."""
    w1: int
    w2: int


@dataclass(frozen=True)
class Synth:
    """Seed with no closed form; produced by exact row reduction over a
    spanning family and pinned to the expected expansion prefix."""
    expected: tuple          # of (exponent, int) nonzero coefficients
    check_through: int       # all other exponents <= this must vanish


@dataclass(frozen=True)
class PowerSeed:
    """seed(k) = form2^(k/2)."""
    form2: object


@dataclass(frozen=True)
class TowerSeed:
    """seed(k) = F_base^l * F_{k'} for k = modulus*l + k'."""
    modulus: int
    kprimes: tuple
    base_weight: int
    forms: dict


@dataclass(frozen=True)
class LevelData:
    N: int
    cusp_count: int
    cusps: tuple                 # non-infinity cusps as (a, c) with gcd 1
    hauptmodul: EtaQuotient
    cusp_poly: tuple             # monic, ascending coefficients, P(0) = 0
    seed: object                 # PowerSeed | TowerSeed
    flags: tuple = ()


def _eta(exps) -> Eta:
    return Eta(EtaQuotient(exps))


_L12_SEED = EtaCombo((
    (Fraction(1, 27), EtaQuotient({1: 10, 4: 1, 6: 9, 2: -7, 3: -6, 12: -3})),
    (Fraction(11, 72), EtaQuotient({1: 7, 4: 4, 6: 9, 2: -7, 3: -5, 12: -4})),
    (Fraction(-1, 12), EtaQuotient({1: 4, 4: 7, 6: 9, 2: -7, 3: -4, 12: -5})),
    (Fraction(1, 54), EtaQuotient({1: 1, 4: 10, 6: 9, 2: -7, 3: -3, 12: -6})),
    (Fraction(-1, 8), EtaQuotient({1: 9, 4: 3, 6: 2, 2: -6, 3: -3, 12: -1})),
))

_L18_SEED = EtaCombo((
    (Fraction(25, 216), EtaQuotient({1: 8, 6: 2, 9: 4, 2: -4, 3: -4, 18: -2})),
    (Fraction(-11, 144), EtaQuotient({1: 3, 6: 8, 9: 7, 2: -3, 3: -6, 18: -5})),
    (Fraction(-121, 972), EtaQuotient({1: 6, 6: 7, 9: 1, 2: -3, 3: -5, 18: -2})),
    (Fraction(-41, 144), EtaQuotient({1: 6, 6: 2, 9: 6, 2: -3, 3: -4, 18: -3})),
    (Fraction(67, 144), EtaQuotient({1: 4, 6: 7, 9: 3, 2: -2, 3: -5, 18: -3})),
    (Fraction(1, 972), EtaQuotient({2: 9, 3: 8, 18: 1, 1: -6, 6: -6, 9: -2})),
    (Fraction(-125, 1296), EtaQuotient({1: 1, 2: 4, 9: 2, 3: -1, 6: -1, 18: -1})),
))

_REGISTRY: dict[int, LevelData] = {}


def _add(ld: LevelData):
    _REGISTRY[ld.N] = ld


_add(LevelData(
    N=1, cusp_count=1, cusps=(),
    hauptmodul=EtaQuotient({}),  # placeholder; level 1 uses the j-function
    cusp_poly=(1,),
    seed=TowerSeed(12, (0, 4, 6, 8, 10, 14), 12, {
        0: One(), 4: Eis(4), 6: Eis(6), 8: Eis(8), 10: Eis(10), 14: Eis(14),
        12: DeltaForm()}),
))

_add(LevelData(
    N=2, cusp_count=2, cusps=((0, 1),),
    hauptmodul=EtaQuotient({1: 24, 2: -24}),
    cusp_poly=(0, 1),
    seed=TowerSeed(4, (0, 2), 4, {
        0: One(), 2: Phi(2), 4: EisDiff(4, 2, 240)}),
))

_add(LevelData(
    N=3, cusp_count=2, cusps=((0, 1),),
    hauptmodul=EtaQuotient({1: 12, 3: -12}),
    cusp_poly=(0, 1),
    seed=TowerSeed(6, (0, 2, 4), 6, {
        0: One(), 2: Phi(3), 4: EisMinusSquare(216),
        6: _eta({3: 18, 1: -6})}),
))

_add(LevelData(
    N=4, cusp_count=3, cusps=((0, 1), (1, 2)),
    hauptmodul=EtaQuotient({1: 8, 4: -8}),
    cusp_poly=(0, 16, 1),
    seed=PowerSeed(E2Combo(((3, 2), (-1, 1), (-2, 4)), 24)),
    flags=("paper_typo: source prints the Hauptmodul tail term -62 at q^2; "
           "the expansion has it at q^3",
           "paper_typo: source weight-2 seed formula omits the factor 1/24 "
           "that its printed expansion q+4q^3+... carries",),
))

_add(LevelData(
    N=5, cusp_count=2, cusps=((0, 1),),
    hauptmodul=EtaQuotient({1: 6, 5: -6}),
    cusp_poly=(0, 1),
    seed=TowerSeed(4, (0, 2), 4, {
        0: One(), 2: Phi(5), 4: _eta({5: 10, 1: -2})}),
))

_add(LevelData(
    N=6, cusp_count=4, cusps=((0, 1), (1, 3), (1, 2)),
    hauptmodul=EtaQuotient({2: 8, 3: 4, 1: -4, 6: -8}),
    cusp_poly=(0, 9, -10, 1),
    seed=PowerSeed(_eta({1: 2, 6: 12, 2: -4, 3: -6})),
    flags=("paper_typo: source cusp polynomial is malformed (x^3-10x+9x); "
           "x^3-10x^2+9x was derived from numeric cusp values 0, 1, 9",),
))

_add(LevelData(
    N=7, cusp_count=2, cusps=((0, 1),),
    hauptmodul=EtaQuotient({1: 4, 7: -4}),
    cusp_poly=(0, 1),
    seed=TowerSeed(6, (0, 2, 4), 6, {
        0: One(), 2: Phi(7),
        4: Synth(((2, 1), (3, 3), (4, 8), (5, 11)), 5),
        6: _eta({7: 14, 1: -2})}),
))

_add(LevelData(
    N=8, cusp_count=4, cusps=((0, 1), (1, 4), (1, 2)),
    hauptmodul=EtaQuotient({1: 4, 4: 2, 2: -2, 8: -4}),
    cusp_poly=(0, 32, 12, 1),
    seed=PowerSeed(_eta({8: 8, 4: -4})),
))

_add(LevelData(
    N=9, cusp_count=4, cusps=((0, 1), (1, 3), (-1, 3)),
    hauptmodul=EtaQuotient({1: 3, 9: -3}),
    cusp_poly=(0, 27, 9, 1),
    seed=PowerSeed(_eta({9: 6, 3: -2})),
    flags=("paper_typo: source Hauptmodul line duplicates the level-8 "
           "quotient; registry stores eta(1)^3 * eta(9)^-3",),
))

_add(LevelData(
    N=10, cusp_count=4, cusps=((0, 1), (1, 5), (1, 2)),
    hauptmodul=EtaQuotient({2: 1, 5: 5, 1: -1, 10: -5}),
    cusp_poly=(0, -4, -3, 1),
    seed=TowerSeed(4, (0, 2), 4, {
        0: One(),
        2: Synth(((2, 1), (4, 3), (5, -4), (6, 4), (8, 7)), 8),
        4: Synth(((6, 1), (7, -2), (8, 3), (9, -6), (10, 11)), 10)}),
))

_add(LevelData(
    N=12, cusp_count=6, cusps=((0, 1), (1, 6), (1, 4), (1, 3), (1, 2)),
    hauptmodul=EtaQuotient({4: 4, 6: 2, 2: -2, 12: -4}),
    cusp_poly=(0, 9, 0, -10, 0, 1),
    seed=PowerSeed(_L12_SEED),
))

_add(LevelData(
    N=13, cusp_count=2, cusps=((0, 1),),
    hauptmodul=EtaQuotient({1: 2, 13: -2}),
    cusp_poly=(0, 1),
    seed=TowerSeed(12, (0, 2, 4, 6, 8, 10), 12, {
        0: One(), 2: Phi(13),
        4: Synth(((4, 1), (5, 1), (6, 3), (7, 3), (8, 4), (9, 6)), 9),
        6: Synth(((6, 1), (7, 2), (8, 4), (9, 6), (10, 13), (11, 16)), 11),
        8: Product(4, 4), 10: Product(4, 6),
        12: _eta({13: 26, 1: -2})}),
    flags=("paper_typo: source expansions of the weight-4 and weight-6 "
           "seeds (and their weight-8/10 products) are not forms on "
           "Gamma_0(13); corrected values verified by exact row reduction, "
           "by modular symbols, and by the duality suite",),
))

_add(LevelData(
    N=16, cusp_count=6, cusps=((0, 1), (1, 8), (1, 4), (-1, 4), (1, 2)),
    hauptmodul=EtaQuotient({1: 2, 8: 1, 2: -1, 16: -2}),
    cusp_poly=(0, 64, 80, 40, 10, 1),
    seed=PowerSeed(_eta({16: 8, 8: -4})),
))

_add(LevelData(
    N=18, cusp_count=8,
    cusps=((0, 1), (1, 9), (1, 6), (-1, 6), (1, 3), (-1, 3), (1, 2)),
    hauptmodul=EtaQuotient({6: 1, 9: 3, 3: -1, 18: -3}),
    cusp_poly=(0, -8, 0, 0, -7, 0, 0, 1),
    seed=PowerSeed(_L18_SEED),
))

_add(LevelData(
    N=25, cusp_count=6,
    cusps=((0, 1), (1, 5), (-1, 5), (2, 5), (-2, 5)),
    hauptmodul=EtaQuotient({1: 1, 25: -1}),
    cusp_poly=(0, 25, 25, 15, 5, 1),
    seed=TowerSeed(4, (0, 2), 4, {
        0: One(),
        2: Synth(((4, 1), (6, 1), (9, 2), (14, 3), (16, 2)), 16),
        4: _eta({25: 10, 5: -2})}),
))


def get_level(N: int) -> LevelData:
    """Registry entry for N; N=1 is included alongside the genus-zero list."""
    try:
        return _REGISTRY[N]
    except KeyError:
        raise ValueError(f"level not genus zero: {N}") from None


# -- maximal orders of vanishing -----------------------------------------

def _decompose(k: int, modulus: int, kprimes) -> tuple[int, int]:
    """Write k = modulus*l + k' with k' in the allowed set."""
    for kp in kprimes:
        if (k - kp) % modulus == 0:
            return (k - kp) // modulus, kp
    raise ValueError(f"no decomposition of weight {k} mod {modulus}")


def v_of(N: int, k: int) -> int:
    """Maximal order of vanishing at infinity in the weight-k space with
    poles allowed only at infinity (negative when a pole is forced)."""
    if k % 2:
        raise ValueError("weight must be even")
    get_level(N)
    if N == 1:
        l, _ = _decompose(k, 12, (0, 4, 6, 8, 10, 14))
        return l
    if N == 2:
        l, _ = _decompose(k, 4, (0, 2))
        return l
    if N == 3:
        l, kp = _decompose(k, 6, (0, 2, 4))
        return 2 * l + kp // 3
    if N == 4:
        return k // 2
    if N == 5:
        l, _ = _decompose(k, 4, (0, 2))
        return 2 * l
    if N in (6, 8, 9):
        return k
    if N == 7:
        l, kp = _decompose(k, 6, (0, 2, 4))
        return 4 * l + 2 * (kp // 3)
    if N == 10:
        l, kp = _decompose(k, 4, (0, 2))
        return 6 * l + kp
    if N in (12, 16):
        return 2 * k
    if N == 13:
        l, kp = _decompose(k, 12, (0, 2, 4, 6, 8, 10))
        return 14 * l if kp == 2 else 14 * l + kp
    if N == 18:
        return 3 * k
    if N == 25:
        l, kp = _decompose(k, 4, (0, 2))
        return 10 * l + 2 * kp
    raise AssertionError(N)


def u_of(N: int, k: int) -> int:
    """Maximal order of vanishing at infinity in the subspace vanishing at
    the other cusps: u = v - (number of cusps - 1)."""
    return v_of(N, k) - (get_level(N).cusp_count - 1)


def cusp_killer(N: int, prec: int) -> "QSeries":
    """P(psi) for the registry's monic cusp polynomial P: a weight-0 form
    with a pole of order cusp_count-1 at infinity and a simple zero at
    every other cusp."""
    from gridforge.basis import hauptmodul_series  # local import, no cycle
    ld = get_level(N)
    deg = ld.cusp_count - 1
    if deg == 0:
        from gridforge.qseries import QSeries
        return QSeries.one(prec)
    psi = hauptmodul_series(N, prec + deg + 1)
    from gridforge.qseries import QSeries
    out = QSeries.zero(psi.prec)
    power = QSeries.one(psi.prec)
    for c in ld.cusp_poly:
        if c:
            out = out + power.scale(c)
        power = (power * psi).truncate(psi.prec)
    return out.truncate(prec)


def registry_dump() -> dict:
    """Deterministic JSON-ready dump of the whole registry."""
    sample_weights = (-6, -4, -2, 0, 2, 4, 6, 8)
    levels = []
    for N in ALL_LEVELS:
        ld = get_level(N)
        levels.append({
            "level": N,
            "cusp_count": ld.cusp_count,
            "cusps": ["oo"] + [f"{a}/{c}" for a, c in ld.cusps],
            "hauptmodul": ("j" if N == 1 else ld.hauptmodul.to_text()),
            "cusp_polynomial": list(ld.cusp_poly),
            "v": {str(k): v_of(N, k) for k in sample_weights},
            "u": {str(k): u_of(N, k) for k in sample_weights},
            "flags": list(ld.flags),
        })
    return {
        "levels": levels,
        "notes": [
            "series tails start at exponent v+1 (resp. u+1); the source "
            "formula's summation bound -v+1 conflicts with every printed "
            "example and is treated as a typo",
        ],
    }


def registry_dump_json() -> str:
    return json.dumps(registry_dump(), indent=2, sort_keys=False)


# -- conformance data -----------------------------------------------------
#
# Expected expansion prefixes for every registry generator, keyed by
# (level, weight) for seed forms and (level, None) for the Hauptmodul.
# A prefix lists the nonzero coefficients; all other exponents up to the
# last listed one must vanish.  Values were cross-checked against the
# numeric cusp oracle and the duality suite.

CONFORMANCE: tuple = (
    (1, None, {-1: 1, 0: 744, 1: 196884, 2: 21493760, 3: 864299970}),
    (2, None, {-1: 1, 0: -24, 1: 276, 2: -2048}),
    (2, 2, {0: 1, 1: 24, 2: 24, 3: 96, 4: 24}),
    (2, 4, {1: 1, 2: 8, 3: 28, 4: 64}),
    (3, None, {-1: 1, 0: -12, 1: 54, 2: -76}),
    (3, 2, {0: 1, 1: 12, 2: 36, 3: 12, 4: 84}),
    (3, 4, {1: 1, 2: 9, 3: 27, 4: 73, 5: 126}),
    (3, 6, {2: 1, 3: 6, 4: 27, 5: 80, 6: 207}),
    (4, None, {-1: 1, 0: -8, 1: 20, 3: -62}),
    (4, 2, {1: 1, 3: 4, 5: 6, 7: 8, 9: 13}),
    (5, None, {-1: 1, 0: -6, 1: 9, 2: 10, 3: -30}),
    (5, 2, {0: 1, 1: 6, 2: 18, 3: 24, 4: 42}),
    (5, 4, {2: 1, 3: 2, 4: 5, 5: 10, 6: 20}),
    (6, None, {-1: 1, 0: 4, 1: 6, 2: 4, 3: -3}),
    (6, 2, {2: 1, 3: -2, 4: 3, 6: -1, 8: 7}),
    (7, None, {-1: 1, 0: -4, 1: 2, 2: 8, 3: -5}),
    (7, 2, {0: 1, 1: 4, 2: 12, 3: 16, 4: 28}),
    (7, 4, {2: 1, 3: 3, 4: 8, 5: 11}),
    (7, 6, {4: 1, 5: 2, 6: 5, 7: 10, 8: 20}),
    (8, None, {-1: 1, 0: -4, 1: 4, 3: 2, 5: -8}),
    (8, 2, {2: 1, 6: 4, 10: 6, 14: 8, 18: 13}),
    (9, None, {-1: 1, 0: -3, 2: 5, 5: -7, 8: 3}),
    (9, 2, {2: 1, 5: 2, 8: 5, 11: 4, 14: 8}),
    (10, None, {-1: 1, 0: 1, 1: 1, 2: 2, 3: 2}),
    (10, 2, {2: 1, 4: 3, 5: -4, 6: 4, 8: 7}),
    (10, 4, {6: 1, 7: -2, 8: 3, 9: -6, 10: 11}),
    (12, None, {-1: 1, 1: 2, 3: 1, 7: -2}),
    (12, 2, {4: 1, 6: -2, 8: 3, 12: -1, 16: 7}),
    # weights 4-10 carry corrected expansions; see the level-13 flag
    (13, None, {-1: 1, 0: -2, 1: -1, 2: 2, 3: 1}),
    (13, 2, {0: 1, 1: 2, 2: 6, 3: 8, 4: 14}),
    (13, 4, {4: 1, 5: 1, 6: 3, 7: 3, 8: 4, 9: 6}),
    (13, 6, {6: 1, 7: 2, 8: 4, 9: 6, 10: 13, 11: 16}),
    (13, 8, {8: 1, 9: 2, 10: 7, 11: 12, 12: 23, 13: 38}),
    (13, 10, {10: 1, 11: 3, 12: 9, 13: 19, 14: 41}),
    (13, 12, {14: 1, 15: 2, 16: 5, 17: 10, 18: 20}),
    (16, None, {-1: 1, 0: -2, 3: 2, 7: -1}),
    (16, 2, {4: 1, 12: 4, 20: 6, 28: 8, 36: 13}),
    (18, None, {-1: 1, 2: 1, 5: 1, 8: -1}),
    (18, 2, {6: 1, 9: -2, 12: 3, 18: -1, 24: 7}),
    (25, None, {-1: 1, 0: -1, 1: -1, 4: 1, 6: 1}),
    (25, 2, {4: 1, 6: 1, 9: 2, 14: 3, 16: 2}),
    (25, 4, {10: 1, 15: 2, 20: 5, 25: 10, 30: 20}),
)
