import json
import random
from fractions import Fraction

import pytest

from gridforge.qseries import DEFAULT_PREC, PrecisionError, QSeries


def qs(d, prec=DEFAULT_PREC):
    return QSeries(d, prec)


def test_add_identity():
    a = qs({-1: 1, 1: 2})
    assert (a + QSeries.zero()) == a


def test_add_min_precision():
    s = qs({0: 1, 1: 1}, 5) + qs({0: -1, 1: 1}, 3)
    assert s == qs({1: 2}, 3)
    assert s.prec == 3


def test_add_principal_parts():
    s = qs({-2: 1, 0: 3}) + qs({-2: 1, 0: -3})
    assert s == qs({-2: 2})


def test_mul_identity():
    a = qs({-3: 5, 2: 7})
    assert (a * QSeries.one()).agrees(a)


def test_mul_example():
    m = qs({-1: 1, 0: 2}, 20) * qs({1: 1, 0: 3}, 20)
    assert [m.coeff(i) for i in (-1, 0, 1)] == [3, 7, 2]


def test_mul_telescoping():
    geo = qs({i: 1 for i in range(10)}, 10)
    p = qs({0: 1, 1: -1}, 10) * geo
    assert p.agrees(QSeries.one(10))


def test_invert_geometric():
    inv = qs({0: 1, 1: -1}, 50).inverse(5)
    assert inv == qs({i: 1 for i in range(5)}, 5)


def test_invert_monomial():
    assert QSeries.monomial(1, 1, 50).inverse(5) == qs({-1: 1}, 4)


def test_invert_level_two_prefix():
    a = qs({1: 1, 2: 8, 3: 28, 4: 64}, 5)
    prod = a.inverse() * a
    p = prod.agreement_prec(QSeries.one(3))
    assert p >= 3
    assert prod.truncate(3).agrees(QSeries.one(3))


def test_invert_zero_raises():
    with pytest.raises(ValueError, match="invert zero"):
        QSeries.zero().inverse()


def test_pow_zero_and_monomials():
    a = qs({2: 3, 5: 1})
    assert (a ** 0).coeff(0) == 1
    cube = QSeries.monomial(-1) ** 3
    assert cube.items() == ((-3, 1),)
    assert cube.valuation() == -3


def test_pow_binomial():
    p = qs({0: 1, 1: 1}, 3) ** 2
    assert [p.coeff(i) for i in range(3)] == [1, 2, 1]


def test_pow_negative_of_zero_raises():
    with pytest.raises(ValueError, match="negative power"):
        QSeries.zero() ** -1


def test_derive():
    assert qs({0: 9}).derive().is_zero
    assert qs({-1: 1, 0: 5, 3: 7}).derive() == qs({-1: -1, 3: 21})
    assert qs({2: 1}).derive().derive() == qs({2: 4})


def test_coeff_guard():
    a = qs({-1: 1, 1: 196884}, 2)
    assert a.coeff(1) == 196884
    assert a.coeff(0) == 0
    with pytest.raises(PrecisionError):
        a.coeff(2)


def test_valuation_truncate_scale():
    assert qs({-3: 1, 4: 2}).valuation() == -3
    with pytest.raises(ValueError):
        QSeries.zero().valuation()
    t = qs({0: 1, 1: 1, 5: 1}, 10).truncate(3)
    assert t == qs({0: 1, 1: 1}, 3)
    a = QSeries.monomial(-1)
    assert a.scale(-1) == a * Fraction(-1)


def test_agreement():
    a = qs({0: 1, 1: 2}, 10)
    b = qs({0: 1, 1: 2, 7: 9}, 5)
    assert a.agrees(b)
    assert a.agreement_prec(b) == 5
    assert not a.agrees(qs({0: 1, 1: 3}, 5))


def test_json_roundtrip():
    a = qs({-2: 1, -1: 8, 0: -224, 1: Fraction(3, 2)}, 5)
    doc = json.loads(json.dumps(a.to_json_dict()))
    assert doc["prec"] == 5
    assert doc["coeffs"][0] == [-2, "1"]
    assert QSeries.from_json_dict(doc) == a


def test_text_form():
    s = str(qs({-2: 1, -1: 8, 0: -224, 1: 2144}, 5))
    assert s == "q^-2 + 8*q^-1 - 224 + 2144*q + O(q^5)"
    assert str(QSeries.zero(7)) == "0 + O(q^7)"


def _random_series(rng, prec):
    n = rng.randrange(0, 8)
    return QSeries(
        {rng.randrange(-20, 21): Fraction(rng.randrange(-1000, 1001))
         for _ in range(n)}, prec)


def _dense_mul_oracle(a, b):
    """Independent convolution over dense arrays."""
    if a.is_zero or b.is_zero:
        return None
    va, vb = a.valuation(), b.valuation()
    la = [a.coeff(va + i) for i in range(a.prec - va)]
    lb = [b.coeff(vb + i) for i in range(b.prec - vb)]
    prec = min(a.prec + vb, b.prec + va)
    out = [Fraction(0)] * (prec - va - vb)
    for i, x in enumerate(la):
        for j, y in enumerate(lb):
            if i + j < len(out):
                out[i + j] += x * y
    return QSeries(((va + vb + i, c) for i, c in enumerate(out)), prec)


def test_mul_against_dense_oracle():
    rng = random.Random(20260810)
    for _ in range(1000):
        a = _random_series(rng, rng.randrange(25, 41))
        b = _random_series(rng, rng.randrange(25, 41))
        expect = _dense_mul_oracle(a, b)
        got = a * b
        if expect is None:
            assert got.is_zero
        else:
            assert got == expect


def test_ring_axioms():
    rng = random.Random(7)
    for _ in range(200):
        a = _random_series(rng, 40)
        b = _random_series(rng, 40)
        c = _random_series(rng, 40)
        assert (a * b).agrees(b * a)
        lhs = a * (b + c)
        rhs = a * b + a * c
        assert lhs.agrees(rhs)


def test_inversion_property():
    rng = random.Random(11)
    for _ in range(60):
        a = _random_series(rng, 40)
        if a.is_zero:
            continue
        prod = a * a.inverse()
        bound = a.prec - 2 * abs(a.valuation())
        if bound > 0:
            assert prod.truncate(bound).agrees(QSeries.one(bound))


def test_leibniz():
    rng = random.Random(13)
    for _ in range(100):
        a = _random_series(rng, 40)
        b = _random_series(rng, 40)
        lhs = (a * b).derive()
        rhs = a.derive() * b + a * b.derive()
        assert lhs.agrees(rhs)
