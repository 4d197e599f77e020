import json

import pytest

from gridforge.basis import hauptmodul_series
from gridforge.leveldata import (
    ALL_LEVELS,
    GENUS_ZERO_LEVELS,
    cusp_killer,
    get_level,
    registry_dump,
    registry_dump_json,
    u_of,
    v_of,
)


def test_registry_membership():
    assert get_level(6).cusp_count == 4
    assert get_level(1).cusp_count == 1
    with pytest.raises(ValueError, match="level not genus zero"):
        get_level(11)
    with pytest.raises(ValueError):
        get_level(26)


def test_cusp_counts_match_cusp_lists():
    for N in ALL_LEVELS:
        ld = get_level(N)
        assert ld.cusp_count == len(ld.cusps) + 1


def test_hauptmoduln_have_simple_pole():
    for N in ALL_LEVELS:
        s = hauptmodul_series(N, 5)
        assert s.valuation() == -1 and s.coeff(-1) == 1


def test_cusp_polynomials_are_monic_with_zero_root():
    for N in GENUS_ZERO_LEVELS:
        ld = get_level(N)
        assert len(ld.cusp_poly) == ld.cusp_count
        assert ld.cusp_poly[-1] == 1
        assert ld.cusp_poly[0] == 0


def test_v_examples():
    assert v_of(13, 4) == 4
    assert v_of(2, -6) == -2
    assert u_of(2, 8) == 1
    assert u_of(18, 8) == 3 * 8 - 7
    assert v_of(1, 0) == 0 and v_of(1, 2) == -1
    assert v_of(13, 2) == 0 and v_of(13, 14) == 14
    assert v_of(25, 2) == 4 and v_of(10, 2) == 2
    with pytest.raises(ValueError):
        v_of(5, 3)


def test_uv_alignment():
    for N in ALL_LEVELS:
        for k in range(-20, 22, 2):
            assert u_of(N, 2 - k) == -v_of(N, k) - 1, (N, k)


def test_uv_monotonicity_genus_zero_divisors():
    for N in GENUS_ZERO_LEVELS:
        for M in [m for m in GENUS_ZERO_LEVELS if N % m == 0]:
            for k in range(-20, 22, 2):
                assert abs(v_of(N, k)) >= abs(v_of(M, k)), (N, M, k)
                assert abs(u_of(N, k)) >= abs(u_of(M, k)), (N, M, k)


def test_cusp_killer_level_five_is_hauptmodul():
    assert cusp_killer(5, 12).agrees(hauptmodul_series(5, 12))


def test_cusp_killer_valuations():
    for N in GENUS_ZERO_LEVELS:
        ck = cusp_killer(N, 8)
        assert ck.valuation() == -(get_level(N).cusp_count - 1), N


def test_cusp_killer_level_eight_polynomial():
    # x^3 + 12x^2 + 32x applied to the Hauptmodul
    psi = hauptmodul_series(8, 14)
    expect = ((psi * psi * psi) + (psi * psi).scale(12) + psi.scale(32))
    assert cusp_killer(8, 8).agrees(expect.truncate(8))


def test_cusp_killer_level_25_polynomial():
    psi = hauptmodul_series(25, 20)
    p2 = (psi * psi).truncate(12)
    p3 = (p2 * psi).truncate(12)
    p4 = (p3 * psi).truncate(12)
    p5 = (p4 * psi).truncate(12)
    expect = p5 + p4.scale(5) + p3.scale(15) + p2.scale(25) + psi.scale(25)
    assert cusp_killer(25, 10).agrees(expect.truncate(10))


def test_registry_dump():
    dump = registry_dump()
    assert len(dump["levels"]) == 15
    by_level = {lv["level"]: lv for lv in dump["levels"]}
    l2 = by_level[2]
    for k in (-6, -4, -2, 0, 2, 4, 6, 8):
        assert l2["u"][str(k)] == l2["v"][str(k)] - 1
    assert any("paper_typo" in f for f in by_level[9]["flags"])
    assert any("paper_typo" in f for f in by_level[6]["flags"])
    assert by_level[9]["hauptmodul"] == "eta(1)^3 * eta(9)^-3"
    # deterministic and JSON-round-trippable
    assert registry_dump_json() == registry_dump_json()
    assert json.loads(registry_dump_json()) == dump
