"""Level-lowering trace operators on canonical basis elements.

A trace from level N to M | N is computed purely by principal-part
matching: when the relevant holomorphic space at level M is trivial, the
trace of a basis element is the unique level-M combination with the same
coefficients at every exponent up to the level-M gap bound.  On the full
space at weight 0 the holomorphic constants survive, so traces there are
canonical representatives normalized to the row-reduced gap form.

The module also classifies when the trace preserves grid duality, lists
the obstruction pairs of the generating-function identities, and verifies
those identities on truncated double expansions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from gridforge.basis import HAT, INF, build_basis
from gridforge.leveldata import get_level, u_of, v_of
from gridforge.qseries import DEFAULT_PREC, QSeries


def mk_trivial(M: int, k: int) -> bool:
    """Whether the holomorphic weight-k space at level M is zero."""
    get_level(M)
    if M == 1:
        return k == 2 or k < 0
    return k < 0


def sk_trivial(M: int, k: int) -> bool:
    """Whether the weight-k cusp space at level M is zero."""
    get_level(M)
    if M == 1:
        return k == 14 or k < 12
    if M == 2:
        return k < 8
    if M == 3:
        return k < 6
    return k < 4


def _check_pair(N: int, M: int):
    get_level(N)
    get_level(M)
    if N % M:
        raise ValueError(f"{M} does not divide {N}")


@dataclass(frozen=True)
class TraceReport:
    from_level: int
    to_level: int
    weight: int
    space: str
    index: int
    applicable: bool
    method: str
    reason: str | None = None
    combination: tuple = ()      # of (level-M index, Fraction)
    expansion: QSeries | None = None

    def to_json_dict(self) -> dict:
        return {
            "from": self.from_level,
            "to": self.to_level,
            "weight": self.weight,
            "space": self.space,
            "index": self.index,
            "applicable": self.applicable,
            "method": self.method,
            "reason": self.reason,
            "combination": [[i, str(c)] for i, c in self.combination],
            "expansion": (None if self.expansion is None
                          else self.expansion.to_json_dict()),
        }


def _trace_applicable(M: int, k: int, space: str) -> tuple[bool, str, str]:
    """(ok, method, reason) for tracing into level M."""
    if space == INF:
        if mk_trivial(M, k):
            return True, "principal_part", ""
        if k == 0:
            # The weight-0 space at level M contains the constants, so the
            # principal part pins the trace only up to an additive constant;
            # the row-reduced gap form fixes the canonical representative.
            return True, "principal_part_mod_constants", ""
        return (False, "none",
                f"trace not determined by principal part: M_{k}({M}) != 0")
    if sk_trivial(M, k):
        return True, "principal_part", ""
    return (False, "none",
            f"trace not determined by principal part: S_{k}({M}) != 0")


def trace(N: int, M: int, k: int, space: str, m: int,
          prec: int = DEFAULT_PREC) -> TraceReport:
    """Trace of the index-m basis element of the level-N weight-k space
    down to level M, expressed in the level-M canonical basis."""
    _check_pair(N, M)
    if space not in (INF, HAT):
        raise ValueError(f"space must be {INF!r} or {HAT!r}")
    if k % 2:
        raise ValueError("weight must be even")

    b_n = v_of(N, k) if space == INF else u_of(N, k)
    if m < -b_n:
        raise ValueError(f"no basis element of index {m} at level {N}")

    if M == N:
        basis = _basis_for(N, k, space, m, prec)
        return TraceReport(N, M, k, space, m, True, "identity",
                           combination=((m, Fraction(1)),),
                           expansion=basis.element(m).truncate(prec))

    ok, method, reason = _trace_applicable(M, k, space)
    if not ok:
        return TraceReport(N, M, k, space, m, False, method, reason=reason)

    b_m = v_of(M, k) if space == INF else u_of(M, k)
    src_prec = max(prec, b_m + 2)
    src = _basis_for(N, k, space, m, src_prec).element(m)

    combo = []
    for j in range(src.valuation(), b_m + 1):
        c = src.coeff(j)
        if c:
            combo.append((-j, c))
    if not combo:
        return TraceReport(N, M, k, space, m, True, method,
                           combination=(), expansion=QSeries.zero(prec))

    top = max(i for i, _ in combo)
    target = _basis_for(M, k, space, top, prec)
    out = QSeries.zero(prec)
    for i, c in combo:
        out = out + target.element(i).scale(c)
    return TraceReport(N, M, k, space, m, True, method,
                       combination=tuple(combo),
                       expansion=out.truncate(prec))


def _basis_for(N: int, k: int, space: str, max_index: int, prec: int):
    """Basis covering indices up to max_index at >= prec, over-allocated
    in rounded steps so repeated sweeps reuse the cache."""
    from gridforge.basis import required_prec

    b = v_of(N, k) if space == INF else u_of(N, k)
    count = max(max_index + b + 1, 1)
    count = ((count + 7) // 8) * 8
    p = max(prec, required_prec(N, k, space, count))
    p = ((p + 15) // 16) * 16
    return build_basis(N, k, space, count, p)


# -- duality preservation -------------------------------------------------

@dataclass(frozen=True)
class Classification:
    from_level: int
    to_level: int
    weight: int
    preserved: bool
    case: str | None = None      # "f-side" | "g-side" when not preserved

    def to_json_dict(self) -> dict:
        return {"from": self.from_level, "to": self.to_level,
                "weight": self.weight, "preserved": self.preserved,
                "case": self.case}


def classify(N: int, M: int, k: int) -> Classification:
    """Whether tracing the weight-(k, 2-k) grid from N to M preserves
    duality: exactly when both maximal-vanishing orders agree (always for
    M = N)."""
    _check_pair(N, M)
    if k % 2:
        raise ValueError("weight must be even")
    if M == N:
        return Classification(N, M, k, True)
    dv = v_of(N, k) - v_of(M, k)
    du = u_of(N, 2 - k) - u_of(M, 2 - k)
    if dv == 0 and du == 0:
        return Classification(N, M, k, True)
    case = "f-side" if dv < 0 else "g-side"
    return Classification(N, M, k, False, case)


def theorem_list_preserved(N: int, M: int, k: int) -> bool:
    """The explicit classification list: k=0 always; k=-2 for N in
    {2,3,4}; k=-4 for (N,M)=(2,1); and the identity trace."""
    if M == N:
        return True
    if k == 0:
        return True
    if k == -2 and N in (2, 3, 4):
        return True
    if k == -4 and (N, M) == (2, 1):
        return True
    return False


# -- obstruction pairs ----------------------------------------------------

@dataclass(frozen=True)
class ObstructionPair:
    side: str                    # "f" (weight-k identity) or "g"
    f_level: int
    f_weight: int
    f_index: int
    f: QSeries
    g_level: int
    g_weight: int
    g_index: int
    g: QSeries

    def to_json_dict(self) -> dict:
        return {
            "side": self.side,
            "f": {"level": self.f_level, "weight": self.f_weight,
                  "index": self.f_index, "series": self.f.to_json_dict()},
            "g": {"level": self.g_level, "weight": self.g_weight,
                  "index": self.g_index, "series": self.g.to_json_dict()},
        }


@dataclass(frozen=True)
class ObstructionList:
    from_level: int
    to_level: int
    weight: int
    pairs: tuple = field(default=())

    @property
    def is_empty(self) -> bool:
        return not self.pairs

    def to_json_dict(self) -> dict:
        return {"from": self.from_level, "to": self.to_level,
                "weight": self.weight,
                "pairs": [p.to_json_dict() for p in self.pairs]}


def obstructions(N: int, M: int, k: int,
                 prec: int = DEFAULT_PREC) -> ObstructionList:
    """The product pairs obstructing the traced generating-function
    identities; empty exactly when the trace preserves duality."""
    _check_pair(N, M)
    if M == N:
        return ObstructionList(N, M, k)
    pairs = []
    v_n, v_m = v_of(N, k), v_of(M, k)
    if v_n <= v_m and (mk_trivial(M, k) or v_n == v_m):
        for x in range(1, v_m - v_n + 1):
            j = v_n + x
            fb = _basis_for(M, k, INF, -j, prec)
            gb = _basis_for(N, 2 - k, HAT, j, prec)
            pairs.append(ObstructionPair(
                "f", M, k, -j, fb.element(-j).truncate(prec),
                N, 2 - k, j, gb.element(j).truncate(prec)))
    u_n, u_m = u_of(N, 2 - k), u_of(M, 2 - k)
    if u_n <= u_m and (sk_trivial(M, 2 - k) or u_n == u_m):
        for x in range(1, u_m - u_n + 1):
            j = u_n + x
            fb = _basis_for(N, k, INF, j, prec)
            gb = _basis_for(M, 2 - k, HAT, -j, prec)
            pairs.append(ObstructionPair(
                "g", N, k, j, fb.element(j).truncate(prec),
                M, 2 - k, -j, gb.element(-j).truncate(prec)))
    return ObstructionList(N, M, k, tuple(pairs))


# -- generating-function identities ---------------------------------------

def genfun_check(N: int, M: int, k: int, P: int, side: str = "both") -> bool:
    """Verify the traced generating-function identities coefficientwise on
    the truncated double expansion, for all index pairs below P.

    side "k" checks the weight-k (z-variable) identity, side "dual" the
    weight-(2-k) (tau-variable) identity, "both" checks both.
    """
    _check_pair(N, M)
    if side not in ("k", "dual", "both"):
        raise ValueError("side must be 'k', 'dual' or 'both'")
    ok = True
    if side in ("k", "both"):
        ok = ok and _genfun_check_fside(N, M, k, P)
    if side in ("dual", "both"):
        ok = ok and _genfun_check_gside(N, M, k, P)
    return ok


def _genfun_check_fside(N: int, M: int, k: int, P: int) -> bool:
    """Traces of the weight-k family against the level-M family minus the
    obstruction products, compared per power of the second variable."""
    if M != N:
        ok, _, reason = _trace_applicable(M, k, INF)
        if not ok:
            raise ValueError(f"weight-k identity not checkable: {reason}")
    v_n, v_m = v_of(N, k), v_of(M, k)
    prec = P + 2
    xs = range(1, v_m - v_n + 1)
    gN = {j: _basis_for(N, 2 - k, HAT, j, max(prec, P + 2))
          for j in (v_n + x for x in xs)}
    for m in range(-v_m, P):
        lhs = (trace(N, M, k, INF, m, prec).expansion
               if m >= -v_n else QSeries.zero(prec))
        rhs = _basis_for(M, k, INF, m, prec).element(m).truncate(prec) \
            if m >= -v_m else QSeries.zero(prec)
        for x in xs:
            j = v_n + x
            c = gN[j].element(j).coeff(m)
            if c:
                fb = _basis_for(M, k, INF, -j, prec)
                rhs = rhs - fb.element(-j).scale(c)
        if not lhs.agrees(rhs.truncate(prec)):
            return False
    return True


def _genfun_check_gside(N: int, M: int, k: int, P: int) -> bool:
    """Traces of the weight-(2-k) family, compared per power of the first
    variable; the obstruction products enter with the opposite sign."""
    if M != N:
        ok, _, reason = _trace_applicable(M, 2 - k, HAT)
        if not ok:
            raise ValueError(f"weight-(2-k) identity not checkable: {reason}")
    u_n, u_m = u_of(N, 2 - k), u_of(M, 2 - k)
    prec = P + 2
    xs = range(1, u_m - u_n + 1)
    fN = {j: _basis_for(N, k, INF, j, max(prec, P + 2))
          for j in (u_n + x for x in xs)}
    for n in range(-u_m, P):
        lhs = (trace(N, M, 2 - k, HAT, n, prec).expansion.scale(-1)
               if n >= -u_n else QSeries.zero(prec))
        rhs = (_basis_for(M, 2 - k, HAT, n, prec).element(n)
               .truncate(prec).scale(-1)
               if n >= -u_m else QSeries.zero(prec))
        for x in xs:
            j = u_n + x
            c = fN[j].element(j).coeff(n)
            if c:
                gb = _basis_for(M, 2 - k, HAT, -j, prec)
                rhs = rhs + gb.element(-j).scale(c)
        if not lhs.agrees(rhs.truncate(prec)):
            return False
    return True


def genfun_level4_closed_form(k: int, P: int) -> bool:
    """Verify the level-4 closed form: the grid generating function times
    (f_{0,1}(tau) - f_{0,1}(z)) equals f_{k,-l}(z) g_{2-k,l+1}(tau), as a
    truncated identity checked against both expansions of the grid."""
    if k % 2:
        raise ValueError("weight must be even")
    ell = k // 2
    prec = P + abs(ell) + 4
    count = P + abs(ell) + 4
    fb = _basis_for(4, k, INF, max(P + 1, -v_of(4, k)), prec + count)
    gb = _basis_for(4, 2 - k, HAT, max(P + 1, -u_of(4, 2 - k)), prec + count)
    f01 = _basis_for(4, 0, INF, 1, prec + count).element(1)
    num_f = fb.element(-ell)
    num_g = gb.element(ell + 1)

    # (A) expand via sum_m f_{k,m}(z) p^m: compare coefficients of p^r.
    v = v_of(4, k)
    for r in range(-v - 1, P):
        lhs = QSeries.zero(prec)
        for j, c in f01.items():
            m = r - j
            if m >= -v and m <= fb.m0 + fb.count - 1:
                lhs = lhs + fb.element(m).scale(c)
        if r >= -v:
            lhs = lhs - (f01 * fb.element(r)).truncate(prec)
        rhs = num_f.scale(num_g.coeff(r)) if r < num_g.prec else None
        if rhs is None or not lhs.truncate(P).agrees(rhs.truncate(P)):
            return False

    # (B) expand via -sum_n g_{2-k,n}(tau) q^n: compare coefficients of q^n.
    u = u_of(4, 2 - k)
    for n in range(-u - 1, P):
        lhs = QSeries.zero(prec)
        if n >= -u:
            lhs = lhs - (f01 * gb.element(n)).truncate(prec)
        for e, c in f01.items():
            idx = n - e
            if idx >= -u and idx <= gb.m0 + gb.count - 1:
                lhs = lhs + gb.element(idx).scale(c)
        rhs = num_g.scale(num_f.coeff(n)) if n < num_f.prec else None
        if rhs is None or not lhs.truncate(P).agrees(rhs.truncate(P)):
            return False
    return True


# -- empirical duality of traced grids ------------------------------------

def empirical_preserves(N: int, M: int, k: int, box: int = 12,
                        prec: int = DEFAULT_PREC) -> bool | None:
    """Direct duality check of the traced families on a box-by-box grid of
    coefficients; None when principal-part matching does not apply on both
    sides."""
    _check_pair(N, M)
    if M == N:
        return True
    if not (mk_trivial(M, k) and sk_trivial(M, 2 - k)):
        return None
    v_n = v_of(N, k)
    u_n = u_of(N, 2 - k)
    f_indices = range(-v_n, -v_n + box)
    g_indices = range(-u_n, -u_n + box)
    need = max(prec, -u_n + box + 2, -v_n + box + 2)
    tf = {m: trace(N, M, k, INF, m, need).expansion for m in f_indices}
    tg = {n: trace(N, M, 2 - k, HAT, n, need).expansion for n in g_indices}
    for m in f_indices:
        for n in g_indices:
            if tf[m].coeff(n) + tg[n].coeff(m) != 0:
                return False
    return True
