from itertools import product

import pytest
from hypothesis import given, strategies as st

from rsospaths.errors import ParameterError
from rsospaths.paths import (
    PEAK_DOWN,
    PEAK_UP,
    STRAIGHT_UP,
    FamilyParams,
    Path,
    enumerate_paths,
    gf,
    gf_restricted,
    gf_restricted_table,
    reflect,
    vertex_class,
    weight_alt,
    weight_II,
    weight_III,
    weight_III_normalized,
    xy,
)
from rsospaths.qlaurent import LaurentPoly
from rsospaths.striking import c_for

WORKED = (3, 4, 5, 4, 5, 4, 3, 2, 3, 2, 1, 2)
Q = LaurentPoly.monomial(4)


def families(max_p=6, max_L=8):
    for p in range(3, max_p + 1):
        for a in range(1, p):
            for b in range(1, p):
                for c in (b - 1, b + 1):
                    if not 1 <= c <= p - 1:
                        continue
                    for L in range(abs(a - b), max_L + 1, 2):
                        yield p, a, b, c, L


def all_step_paths(p, a, b, L):
    """Independent enumeration: every +-1 step word, filtered."""
    out = []
    for steps in product((-1, 1), repeat=L):
        h = [a]
        for s in steps:
            h.append(h[-1] + s)
        if h[-1] == b and all(1 <= x <= p - 1 for x in h):
            out.append(tuple(h))
    return sorted(out)


def test_enumerate_small_family():
    paths = list(enumerate_paths(3, 1, 1, 2))
    assert [h.heights for h in paths] == [(1, 2, 1)]


def test_enumerate_seed():
    assert [h.heights for h in enumerate_paths(2, 1, 1, 0)] == [(1,)]


def test_enumerate_contains_worked_path():
    assert WORKED in {h.heights for h in enumerate_paths(6, 3, 2, 11)}


@pytest.mark.parametrize("p", [3, 4, 5, 6])
def test_enumeration_matches_step_words(p):
    for a in range(1, p):
        for b in range(1, p):
            for L in range(0, 9):
                if (L + a - b) % 2:
                    continue
                got = [h.heights for h in enumerate_paths(p, a, b, L)]
                assert got == all_step_paths(p, a, b, L)


def test_invalid_params_name_the_constraint():
    with pytest.raises(ParameterError, match="a=0"):
        list(enumerate_paths(4, 0, 1, 1))
    with pytest.raises(ParameterError, match="even"):
        list(enumerate_paths(4, 1, 1, 1))
    with pytest.raises(ParameterError, match="c=4"):
        list(enumerate_paths(4, 2, 3, 1, c=4))
    with pytest.raises(ParameterError):
        Path(4, (1, 3))


def test_vertex_classes():
    h = Path(6, WORKED, 3)
    assert vertex_class(h, 2) == PEAK_UP
    assert vertex_class(h, 10) == PEAK_DOWN
    assert vertex_class(Path(4, (1, 2, 3)), 1) == STRAIGHT_UP
    with pytest.raises(ParameterError):
        vertex_class(Path(4, (1, 2, 3)), 2)  # needs c


def test_xy_coordinates():
    h = Path(6, WORKED, 3)
    assert [xy(h, i) for i in range(8)] == [(0, 0), (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 3), (4, 3)]
    assert xy(h, 8) == (4, 4)


def test_weight_examples():
    assert weight_alt(Path(6, WORKED, 3)) == 14
    h = Path(3, (1, 2, 1), 2)
    assert weight_alt(h) == 1
    assert weight_III(h) == 0
    assert weight_II(h) == 6  # 3/2 in quarters
    assert weight_III_normalized(h) == 0
    assert weight_III_normalized(Path(5, (2, 3, 4), 3)) == 0
    assert weight_alt(Path(4, (2,), 3)) == 0
    assert weight_III_normalized(Path(4, (2,), 3)) == 0


def test_gf_examples():
    assert gf(FamilyParams(3, 1, 1, 2, 2), "alt") == Q
    assert gf(FamilyParams(3, 1, 1, 2, 2), "III_normalized") == LaurentPoly.one()
    assert gf(FamilyParams(3, 2, 2, 0, 1), "alt") == LaurentPoly.one()


def test_gf_counts_paths():
    for p, a, b, c, L in families(5, 8):
        n = sum(1 for _ in enumerate_paths(p, a, b, L, c))
        for kind in ("alt", "II", "III", "III_normalized"):
            poly = gf(FamilyParams(p, a, b, L, c), kind)
            assert poly.evaluate_at_one() == n
            assert all(v > 0 for v in poly.terms.values())


def test_gf_restricted_examples():
    for p in (2, 3, 5):
        for a in range(1, p):
            assert gf_restricted(p, a, a, 0, 0, 0, 0) == LaurentPoly.one()
            assert gf_restricted(p, a, a, 1, 1, 0, 0) == LaurentPoly.one()
            assert gf_restricted(p, a, a, 0, 1, 0, 1) == LaurentPoly.one()
    worked = gf_restricted(6, 3, 2, 0, 0, 11, 5)
    assert worked.coeff(4 * 14) >= 1
    assert gf_restricted(6, 3, 2, 0, 0, 11, 4) == LaurentPoly.zero()  # wrong parity


def test_gf_restricted_sums_to_gf():
    for p, a, b, c, L in families(6, 9):
        f = 1 if c == b - 1 else 0
        full = gf(FamilyParams(p, a, b, L, c), "alt")
        for e in (0, 1):
            table = gf_restricted_table(p, a, b, e, f, L)
            assert all((m - L - e - f) % 2 == 0 for m in table)
            total = LaurentPoly.zero()
            for poly in table.values():
                total += poly
            assert total == full


def test_weight_complementarity():
    for p, a, b, c, L in families(6, 10):
        for h in enumerate_paths(p, a, b, L, c):
            assert weight_II(h) + weight_III(h) == L * (L + 1)


def test_para_abf_duality():
    for p, a, b, c, L in families(6, 10):
        x = gf(FamilyParams(p, a, b, L, c), "II")
        X = gf(FamilyParams(p, a, b, L, c), "III")
        assert x == X.invert_q().shift(L * (L + 1))


def test_renormalised_parafermion():
    for p, a, b, c, L in families(6, 10):
        sign = 1 if c == b + 1 else -1
        x = gf(FamilyParams(p, a, b, L, c), "II")
        assert gf(FamilyParams(p, a, b, L, c), "alt") == x.shift(-(L + sign * (a - b)))


def test_reflection_symmetry():
    for p, a, b, c, L in families(6, 10):
        lhs = gf(FamilyParams(p, a, b, L, c), "alt")
        assert lhs == gf(FamilyParams(p, p - a, p - b, L, p - c), "alt")


@st.composite
def paths_with_c(draw):
    p = draw(st.integers(3, 8))
    h = [draw(st.integers(1, p - 1))]
    for _ in range(draw(st.integers(0, 14))):
        steps = [s for s in (-1, 1) if 1 <= h[-1] + s <= p - 1]
        h.append(h[-1] + draw(st.sampled_from(steps)))
    cs = [c for c in (h[-1] - 1, h[-1] + 1) if 1 <= c <= p - 1]
    return Path(p, tuple(h), draw(st.sampled_from(cs)))


@given(paths_with_c())
def test_reflect_is_weight_preserving_involution(h):
    r = reflect(h)
    assert reflect(r) == h
    assert weight_alt(r) == weight_alt(h)
    assert weight_II(h) + weight_III(h) == h.L * (h.L + 1)


@given(paths_with_c())
def test_normalized_weights_are_nonnegative(h):
    assert weight_alt(h) >= 0
    assert weight_III_normalized(h) >= 0
    assert c_for(h.b, 0) == h.b + 1
