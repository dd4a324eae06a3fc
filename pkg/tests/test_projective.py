"""Cross-ratio, 6-point ratio, Klein-four labels and the anharmonic action."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polylie.field import INF, IndeterminateError, RatFunc, is_inf, rf, rfvar
from polylie.projective import (
    S3,
    PERM_BY_NAME,
    CrossRatioLabel,
    anharmonic,
    cross_ratio,
    hexa_ratio,
    v4_canonical,
)

Z = rfvar("z")
ONE = RatFunc.one()
ZERO = RatFunc.zero()


def test_anharmonic_frame_rows():
    assert cross_ratio(Z, ZERO, ONE, INF) == Z
    assert cross_ratio(ONE, ZERO, Z, INF) == Z.inv()
    table = {
        "id": Z,
        "(12)": Z / (Z - ONE),
        "(13)": Z.inv(),
        "(23)": ONE - Z,
        "(123)": (ONE - Z).inv(),
        "(132)": (Z - ONE) / Z,
    }
    for name, want in table.items():
        assert anharmonic(PERM_BY_NAME[name], Z) == want, name


def test_cross_ratio_coincidences():
    a, b, c = rf(2), rf(3), rf(5)
    assert cross_ratio(a, a, b, c) == ZERO
    assert cross_ratio(b, c, a, a) == ZERO
    assert is_inf(cross_ratio(b, a, a, c))
    assert is_inf(cross_ratio(a, b, c, a))
    assert cross_ratio(a, b, a, c) == ONE
    assert cross_ratio(a, b, c, b) == ONE
    with pytest.raises(IndeterminateError):
        cross_ratio(a, a, b, b)
    with pytest.raises(IndeterminateError):
        cross_ratio(a, a, a, b)


def test_cross_ratio_at_infinity_matches_limit():
    a, b, c = rf(7), rf(1), rf(4)
    assert cross_ratio(a, b, c, INF) == (a - b) / (c - b)
    assert is_inf(cross_ratio(INF, b, c, INF))


def test_hexa_ratio_product_identity():
    xs = {i: rfvar(f"x{i}") for i in range(2, 8)}
    lhs = hexa_ratio(xs[3], xs[4], xs[5], xs[6], xs[7], xs[2])
    rhs = cross_ratio(xs[3], xs[4], xs[5], xs[6]) * cross_ratio(xs[3], xs[6], xs[7], xs[2])
    assert lhs == rhs


def test_hexa_ratio_values():
    pts = [rf(v) for v in (0, 2, 5, 9, 11, 17)]
    a, b, c, d, e, f = pts
    want = -(a - b) * (c - d) * (e - f) / ((b - c) * (d - e) * (f - a))
    assert hexa_ratio(*pts) == want
    assert hexa_ratio(a, a, c, d, e, f) == ZERO
    assert is_inf(hexa_ratio(a, b, b, d, e, f))


rational_points = st.integers(min_value=-6, max_value=6).map(lambda n: rf(Fraction(n)))


@given(st.lists(rational_points, min_size=4, max_size=4))
@settings(max_examples=100, deadline=None)
def test_cross_ratio_v4_invariance(pts):
    a, b, c, d = pts
    if len({p.num.const_value() for p in pts}) < 4:
        return
    base = cross_ratio(a, b, c, d)
    assert cross_ratio(b, a, d, c) == base
    assert cross_ratio(c, d, a, b) == base
    assert cross_ratio(d, c, b, a) == base


@given(st.lists(rational_points, min_size=4, max_size=4))
@settings(max_examples=100, deadline=None)
def test_cross_ratio_inverse_is_rotation(pts):
    a, b, c, d = pts
    if len({p.num.const_value() for p in pts}) < 4:
        return
    base = cross_ratio(a, b, c, d)
    rot = cross_ratio(d, a, b, c)
    if base.is_zero() or is_inf(base):
        assert rot.is_zero() or is_inf(rot)
    else:
        assert rot == base.inv()


@given(st.sampled_from(S3), st.sampled_from(S3), st.integers(min_value=2, max_value=9))
@settings(max_examples=100, deadline=None)
def test_anharmonic_left_action(sigma, tau, n):
    z = rf(Fraction(n, 11))  # avoid 0 and 1
    assert anharmonic(sigma.then(tau), z) == anharmonic(sigma, anharmonic(tau, z))


def test_perm3_signs_and_inverse():
    assert PERM_BY_NAME["id"].sign == 1
    assert PERM_BY_NAME["(12)"].sign == -1
    assert PERM_BY_NAME["(123)"].sign == 1
    for p in S3:
        assert p.then(p.inverse()).name == "id"
    assert anharmonic(PERM_BY_NAME["(123)"].then(PERM_BY_NAME["(132)"]), Z) == Z


def test_labels_canonical_and_round_trip():
    lab = CrossRatioLabel.parse("2q4p")
    assert lab == CrossRatioLabel.of("q", "2", "p", "4")
    assert v4_canonical(("d", "c", "b", "a")) == ("a", "b", "c", "d")
    pts = {"2": rf(2), "q": rf(3), "4": rf(7), "p": rf(10)}
    want = cross_ratio(rf(2), rf(3), rf(7), rf(10))
    assert lab.value(pts) == want
    assert lab.inv().value(pts) == want.inv()
