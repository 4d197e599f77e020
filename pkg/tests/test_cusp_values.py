"""Numeric oracle for the registry cusp polynomials.

The Hauptmodul is evaluated near each non-infinity cusp with a
high-precision Dedekind eta (reduced to the fundamental domain via the
modular transformations); the monic polynomial with those roots must
round exactly to the registry's integer cusp polynomial.  This is the
independent derivation of the level-6 polynomial, whose printed source
form is malformed.
"""

import mpmath as mp
import pytest

from gridforge.leveldata import GENUS_ZERO_LEVELS, get_level

mp.mp.dps = 50


def eta_numeric(tau):
    fac = mp.mpc(1)
    tau = mp.mpc(tau)
    while True:
        n = mp.nint(tau.real)
        if n != 0:
            tau -= n
            fac *= mp.e ** (1j * mp.pi * n / 12)
        if abs(tau) < 1:
            fac /= mp.sqrt(-1j * tau)
            tau = -1 / tau
        else:
            break
    q = mp.e ** (2j * mp.pi * tau)
    prod = mp.mpc(1)
    qn = q
    tiny = mp.mpf(10) ** (-mp.mp.dps - 8)
    while abs(qn) > tiny:
        prod *= 1 - qn
        qn *= q
    return fac * mp.e ** (1j * mp.pi * tau / 12) * prod


def scaling_matrix(a, c):
    """An integer matrix of determinant 1 sending infinity to a/c."""
    def egcd(x, y):
        if y == 0:
            return (x, 1, 0)
        g, u, v = egcd(y, x % y)
        return (g, v, u - (x // y) * v)

    g, d, minus_b = egcd(a, c)
    assert abs(g) == 1
    if g < 0:
        d, minus_b = -d, -minus_b
    b = -minus_b
    assert a * d - b * c == 1
    return a, b, c, d


def hauptmodul_value_at_cusp(N, a, c, Y=100):
    exps = get_level(N).hauptmodul.exps
    a0, b0, c0, d0 = scaling_matrix(a, c)
    tau = (a0 * 1j * Y + b0) / (c0 * 1j * Y + d0)
    val = mp.mpc(1)
    for d, r in exps.items():
        val *= eta_numeric(d * tau) ** r
    return val


@pytest.mark.parametrize("N", GENUS_ZERO_LEVELS)
def test_cusp_polynomial_matches_numeric_roots(N):
    ld = get_level(N)
    roots = [hauptmodul_value_at_cusp(N, a, c) for a, c in ld.cusps]
    poly = [mp.mpc(1)]
    for r in roots:
        poly = [mp.mpc(0)] + poly
        for i in range(len(poly) - 1):
            poly[i] -= r * poly[i + 1]
    assert len(poly) == len(ld.cusp_poly)
    for got, want in zip(poly, ld.cusp_poly):
        assert abs(got - want) < 1e-8, (N, got, want)


def test_level_six_derived_values():
    vals = sorted(round(float(hauptmodul_value_at_cusp(6, a, c).real))
                  for a, c in get_level(6).cusps)
    assert vals == [0, 1, 9]


def test_level_four_printed_values():
    vals = sorted(round(float(hauptmodul_value_at_cusp(4, a, c).real))
                  for a, c in get_level(4).cusps)
    assert vals == [-16, 0]
