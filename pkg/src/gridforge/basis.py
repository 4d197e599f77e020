"""Row-reduced canonical bases and modular grids.

The weight-k space with poles only at infinity has basis elements
f_{k,m} = q^-m + O(q^{v+1}) for m >= -v; the subspace vanishing at the
other cusps has g_{k,m} = q^-m + O(q^{u+1}) for m >= -u.  Elements are
built recursively: multiply the previous element by the Hauptmodul, then
subtract earlier elements (and the constant, where present) to clear
every coefficient between the leading term and the gap bound.

Completed bases are immutable and cached per (level, weight, space);
distinct bases may be built concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gridforge import leveldata
from gridforge.generators import (
    delta,
    eisenstein,
    eta_quotient_expand,
    j_function,
    level_one_form,
    phi,
)
from gridforge.leveldata import (
    DeltaForm,
    E2Combo,
    Eis,
    EisDiff,
    EisMinusSquare,
    Eta,
    EtaCombo,
    One,
    Phi,
    PowerSeed,
    Product,
    Synth,
    TowerSeed,
    get_level,
    u_of,
    v_of,
)
from gridforge.qseries import DEFAULT_PREC, PrecisionError, QSeries

INF = "inf"
HAT = "hat"


def _check_space(space: str) -> str:
    if space not in (INF, HAT):
        raise ValueError(f"space must be {INF!r} or {HAT!r}, got {space!r}")
    return space


_haupt_cache: dict[int, QSeries] = {}


def hauptmodul_series(N: int, prec: int) -> QSeries:
    """q-expansion of the level's Hauptmodul (the j-function for N=1)."""
    cached = _haupt_cache.get(N)
    if cached is not None and cached.prec >= prec:
        return cached.truncate(prec)
    ld = get_level(N)
    s = j_function(prec) if N == 1 else ld.hauptmodul.expand(prec)
    if s.valuation() != -1 or s.coeff(-1) != 1:
        raise AssertionError(f"Hauptmodul for level {N} is not monic q^-1")
    _haupt_cache[N] = s
    return s


def _eval_form(N: int, spec, prec: int) -> QSeries:
    """Expand one seed-form descriptor from the level registry."""
    if isinstance(spec, One):
        return QSeries.one(prec)
    if isinstance(spec, Eis):
        return level_one_form(spec.weight, prec)
    if isinstance(spec, DeltaForm):
        return delta(prec)
    if isinstance(spec, Phi):
        return phi(spec.n, prec)
    if isinstance(spec, Eta):
        return eta_quotient_expand(spec.quotient, prec)
    if isinstance(spec, EtaCombo):
        total = QSeries.zero(prec)
        for c, eq in spec.terms:
            total = total + eta_quotient_expand(eq, prec).scale(c)
        return total
    if isinstance(spec, EisDiff):
        diff = eisenstein(spec.weight, prec) - eisenstein(
            spec.weight, prec, scale=spec.d)
        return diff.scale(Fraction(1, spec.denom))
    if isinstance(spec, EisMinusSquare):
        f2 = level_form(N, 2, prec)
        return ((eisenstein(4, prec) - f2 * f2)
                .truncate(prec).scale(Fraction(1, spec.denom)))
    if isinstance(spec, E2Combo):
        total = QSeries.zero(prec)
        for c, d in spec.terms:
            total = total + eisenstein(2, prec, scale=d).scale(c)
        return total.scale(Fraction(1, spec.denom))
    if isinstance(spec, Product):
        a = level_form(N, spec.w1, prec)
        b = level_form(N, spec.w2, prec)
        return (a * b).truncate(prec)
    if isinstance(spec, Synth):
        from gridforge.seedsynth import synthesize_seed
        return synthesize_seed(N, spec_weight_of(N, spec), prec)
    raise TypeError(f"unknown form spec {spec!r}")


def spec_weight_of(N: int, spec: Synth) -> int:
    seed = get_level(N).seed
    for w, s in seed.forms.items():
        if s is spec:
            return w
    raise AssertionError("synth spec not found in seed plan")


def level_form(N: int, weight: int, prec: int = DEFAULT_PREC) -> QSeries:
    """The registry's named weight-`weight` form for this level (the F-forms
    of tower levels, or the weight-2 base of power levels)."""
    seed = get_level(N).seed
    if isinstance(seed, TowerSeed):
        if weight not in seed.forms:
            raise ValueError(f"level {N} has no registry form in weight {weight}")
        return _eval_form(N, seed.forms[weight], prec)
    if weight != 2:
        raise ValueError(f"level {N} has no registry form in weight {weight}")
    return _eval_form(N, seed.form2, prec)


def first_element(N: int, k: int, space: str,
                  prec: int = DEFAULT_PREC) -> QSeries:
    """The basis element of maximal vanishing order: the seed recipe for
    the full space, times the cusp-killing polynomial for the subspace."""
    _check_space(space)
    if k % 2:
        raise ValueError("weight must be even")
    ld = get_level(N)
    v = v_of(N, k)
    if space == HAT:
        deg = ld.cusp_count - 1
        work = prec + deg + max(0, -v) + 1
        inf = first_element(N, k, INF, work)
        out = (inf * leveldata.cusp_killer(N, work)).truncate(prec)
        expect = u_of(N, k)
    else:
        seed = ld.seed
        if isinstance(seed, PowerSeed):
            power, v_base, v_rest = k // 2, v_of(N, 2), 0
        else:
            power, kp = leveldata._decompose(k, seed.modulus, seed.kprimes)
            v_base = v_of(N, seed.base_weight)
            v_rest = v_of(N, kp)
        # raising the base to a negative power costs (1-power)*v_base terms
        work = prec + 8 + max(0, (1 - power) * v_base - v_rest)
        if isinstance(seed, PowerSeed):
            base = _eval_form(N, seed.form2, work)
            out = (base ** power).truncate(prec)
        else:
            fb = _eval_form(N, seed.forms[seed.base_weight], work)
            fk = _eval_form(N, seed.forms[kp], work)
            out = ((fb ** power) * fk).truncate(prec)
        expect = v
    if out.prec < prec:
        raise PrecisionError(
            f"first element of level {N} weight {k} only determined mod "
            f"q^{out.prec}; need {prec}")
    if out.valuation() != expect or out.coeff(expect) != 1:
        raise AssertionError(
            f"seed for level {N} weight {k} {space} is not monic q^{expect}")
    return out


@dataclass(frozen=True)
class CanonicalBasis:
    """Ordered family of basis elements m0, m0+1, ... at uniform precision."""
    N: int
    k: int
    space: str
    m0: int
    gap_bound: int
    prec: int
    elements: tuple

    @property
    def count(self) -> int:
        return len(self.elements)

    @property
    def indices(self) -> range:
        return range(self.m0, self.m0 + len(self.elements))

    def element(self, m: int) -> QSeries:
        if m not in self.indices:
            raise IndexError(
                f"basis index {m} outside built range {self.indices}")
        return self.elements[m - self.m0]

    def coefficient(self, m: int, n: int) -> Fraction:
        """a_k(m, n) resp. b_k(m, n): the q^n coefficient of element m."""
        return self.element(m).coeff(n)


def required_prec(N: int, k: int, space: str, count: int) -> int:
    """Minimal working precision accepted by build_basis."""
    b = v_of(N, k) if space == INF else u_of(N, k)
    return count + abs(b) + 5


_basis_cache: dict[tuple, CanonicalBasis] = {}


def build_basis(N: int, k: int, space: str, count: int,
                prec: int = DEFAULT_PREC) -> CanonicalBasis:
    """Build elements m0 .. m0+count-1, each exact modulo q^prec."""
    _check_space(space)
    if count < 1:
        raise ValueError("count must be >= 1")
    need = required_prec(N, k, space, count)
    if prec < need:
        raise PrecisionError(
            f"insufficient precision for level {N} weight {k} {space} with "
            f"count {count}: need prec >= {need}, got {prec}")
    key = (N, k, space)
    cached = _basis_cache.get(key)
    if cached is not None and cached.count >= count and cached.prec >= prec:
        return CanonicalBasis(N, k, space, cached.m0, cached.gap_bound, prec,
                              tuple(e.truncate(prec)
                                    for e in cached.elements[:count]))

    B = v_of(N, k) if space == INF else u_of(N, k)
    m0 = -B
    work = prec + count + 6
    psi = hauptmodul_series(N, work + count + abs(m0) + 2)
    elements = [first_element(N, k, space, work)]
    for m in range(m0 + 1, m0 + count):
        p = psi * elements[-1]
        for s in range(-(m - 1), B + 1):
            c = p.coeff(s)
            if c:
                p = p - elements[-s - m0].scale(c)
        if p.valuation() != -m or p.coeff(-m) != 1:
            raise AssertionError(
                f"recursion lost the leading term at level {N} weight {k} "
                f"{space} index {m}")
        elements.append(p)
    built = CanonicalBasis(N, k, space, m0, B, work,
                           tuple(e.truncate(work) for e in elements))
    _verify_gap_form(built)
    _basis_cache[key] = built
    return CanonicalBasis(N, k, space, m0, B, prec,
                          tuple(e.truncate(prec) for e in built.elements))


def _verify_gap_form(basis: CanonicalBasis):
    for m in basis.indices:
        e = basis.element(m)
        for s in range(-m + 1, basis.gap_bound + 1):
            if e.coeff(s):
                raise AssertionError(
                    f"gap form violated at level {basis.N} weight {basis.k} "
                    f"{basis.space} index {m}, exponent {s}")


@dataclass(frozen=True)
class ModularGrid:
    """Paired bases: weight k with poles at infinity only, against
    weight 2-k vanishing at the other cusps."""
    N: int
    k: int
    fside: CanonicalBasis
    gside: CanonicalBasis


def build_grid(N: int, k: int, count: int,
               prec: int | None = None) -> ModularGrid:
    """Build both sides of the weight-(k, 2-k) grid with `count` elements.

    The default precision is chosen so that a count-by-count duality box
    is fully determined on both sides.
    """
    v = v_of(N, k)
    u = u_of(N, 2 - k)
    if prec is None:
        prec = max(required_prec(N, k, INF, count),
                   required_prec(N, 2 - k, HAT, count),
                   v + count + 6, -v + count + 6)
    fside = build_basis(N, k, INF, count, prec)
    gside = build_basis(N, 2 - k, HAT, count, prec)
    if gside.m0 != v + 1 or fside.m0 != u + 1:
        raise AssertionError("index ranges of the two sides fail to align")
    return ModularGrid(N, k, fside, gside)


def duality_residual(grid: ModularGrid, m_max: int, n_max: int) -> Fraction:
    """max |a_k(m,n) + b_{2-k}(n,m)| over the box of the first m_max
    f-indices against the first n_max g-indices; exact zero iff duality
    holds there."""
    if m_max < 0 or n_max < 0:
        raise ValueError("box dimensions must be nonnegative")
    if m_max > grid.fside.count or n_max > grid.gside.count:
        raise PrecisionError(
            f"duality box {m_max}x{n_max} exceeds built count "
            f"({grid.fside.count}, {grid.gside.count})")
    worst = Fraction(0)
    f_ind = list(grid.fside.indices)[:m_max]
    g_ind = list(grid.gside.indices)[:n_max]
    for m in f_ind:
        fm = grid.fside.element(m)
        for n in g_ind:
            r = abs(fm.coeff(n) + grid.gside.element(n).coeff(m))
            if r > worst:
                worst = r
    return worst
