import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polylie.coalgebra import (
    WedgePair,
    cobracket,
    verify_tensor_zero,
    verify_zero_mod_products,
)
from polylie.field import INF, is_inf, rf, rfvar
from polylie.specialise import (
    CrossArg,
    LabelLi,
    LimitPlan,
    SpecContext,
    analytic_check,
    cross_value,
    curve_limit_cross_ratio,
    degenerate,
    label_li,
    label_var,
    materialise,
    parse_curve,
    spec_cor,
    spec_tuple,
    spec_value,
    subst,
)
from polylie.terms import CorTerm, LinComb, LiTerm, li

A = rfvar("a")
B = rfvar("b")
C = rfvar("c")
LAM = rfvar("lam")


# --------------------------------------------------------------------------
# the valuation-based map on values and tuples


def test_spec_value():
    assert spec_value((A + LAM * B) / (C - LAM), "lam") == (0, A / C)
    assert spec_value(LAM * LAM * (A + B), "lam") == (2, A + B)
    assert spec_value(rf(3) / LAM, "lam") == (-1, rf(3))
    m, lead = spec_value(rf(0), "lam")
    assert m == math.inf and lead == rf(0)


def test_spec_tuple_keeps_minimal_valuation():
    ctx = SpecContext("lam")
    assert spec_tuple((A + LAM * B, C, rf(0)), ctx) == (A, C, rf(0))
    # entries above the minimal valuation are zeroed, not rescaled
    assert spec_tuple((LAM * A, LAM * B, C), ctx) == (rf(0), rf(0), C)
    # a tuple of uniformly positive valuation is rescaled as a whole
    assert spec_tuple((LAM * A, LAM * B), ctx) == (A, B)
    with pytest.raises(ValueError):
        spec_tuple((rf(0), rf(0)), ctx)


def test_spec_tuple_to_infinity():
    ctx = SpecContext("lam", to_infinity=True)
    assert spec_tuple((LAM, A, B), ctx) == (rf(1), rf(0), rf(0))
    # the resulting configuration (1, 0, 0) is a dead correlator
    t = CorTerm.make((LAM, A, B))
    assert spec_cor(t, ctx) == LinComb()


def test_subst_guards_zero_denominator():
    f = rf(1) / (A - B)
    with pytest.raises(ZeroDivisionError):
        subst(f, {"a": B})


# --------------------------------------------------------------------------
# specialisation is a term-level chain map for the cobracket


def _as_tensors(w):
    return w.map_linear(
        lambda wp: LinComb(
            {(wp.left, wp.right): Fraction(1), (wp.right, wp.left): Fraction(-1)}
        )
    )


def _spec_wedge(wp, ctx):
    left = CorTerm.make(spec_tuple(wp.left.points, ctx))
    right = CorTerm.make(spec_tuple(wp.right.points, ctx))
    if left is None or right is None:
        return LinComb()
    sign, wedge = WedgePair.make(left, right)
    if wedge is None:
        return LinComb()
    return LinComb.term(wedge, sign)


def _check_spec_commutes(points):
    ctx = SpecContext("lam")
    t = CorTerm.make(points)
    if t is None:
        return
    spec_first = spec_cor(t, ctx)
    after = LinComb.total(c * cobracket(u) for u, c in spec_first.items())
    before = cobracket(t).map_linear(lambda wp: _spec_wedge(wp, ctx))
    diff = _as_tensors(after - before)
    if diff.is_zero():
        return
    assert verify_tensor_zero(diff)["pass"]


_POOL = [rf(0), A, B, A + LAM * B, LAM * A, LAM * B, A - LAM * B, LAM * (A + B)]


@pytest.mark.parametrize(
    "points",
    [
        (rf(0), A, LAM * B),
        (A, rf(0), LAM * B, B),
        (rf(0), LAM * A, LAM * B, A),
        (A, LAM * A, LAM * B),
        (rf(0), A, LAM * B, LAM * A),
    ],
)
def test_spec_commutes_with_cobracket_fixed(points):
    _check_spec_commutes(points)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(range(len(_POOL))), min_size=3, max_size=4))
def test_spec_commutes_with_cobracket_random(idx):
    _check_spec_commutes(tuple(_POOL[i] for i in idx))


# --------------------------------------------------------------------------
# curve notation


def test_parse_chain_two():
    curve = parse_curve("234 u_p 15")
    assert [c.marked for c in curve.components] == [("2", "3", "4"), ("1", "5")]
    assert curve.root == 1
    assert curve.node_order == ("p",)
    assert curve.labels == ("1", "2", "3", "4", "5")
    assert curve.leaf_of_node("p") == 0


def test_parse_chain_three():
    curve = parse_curve("17 ∪_p 246 ∪_q 35")
    assert curve.root == 1
    assert curve.node_order == ("p", "q")
    assert curve.components[1].nodes == ("p", "q")
    assert curve.leaf_of_node("q") == 2
    assert curve.home("6") == 1


def test_parse_star():
    curve = parse_curve("(138_p, 24_q, 79_r) ∪ 56")
    assert curve.root == 3
    assert curve.node_order == ("p", "q", "r")
    assert [c.marked for c in curve.components] == [
        ("1", "3", "8"),
        ("2", "4"),
        ("7", "9"),
        ("5", "6"),
    ]


def test_parse_curve_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_curve("nonsense")
    with pytest.raises(ValueError):
        parse_curve("1 u_p 23456")  # leaf with two special points
    with pytest.raises(ValueError):
        parse_curve("123 u_p 345")  # label appears twice


# --------------------------------------------------------------------------
# combinatorial cross-ratio limits


CHAIN3 = parse_curve("17 u_p 246 u_q 35")


def test_curve_limit_generic_on_root():
    x2, x4 = label_var("2"), label_var("4")
    xp, xq = label_var("p"), label_var("q")
    got = curve_limit_cross_ratio(CHAIN3, ("2", "q", "4", "p"))
    want = ((x2 - xq) * (x4 - xp)) / ((xq - x4) * (xp - x2))
    assert got == want


def test_curve_limit_on_leaf_reads_leaf_coordinates():
    curve = parse_curve("(138_p, 24_q, 79_r) u 56")
    x1, x3, x8 = label_var("1"), label_var("3"), label_var("8")
    got = curve_limit_cross_ratio(curve, ("1", "3", "8", "p"))
    assert got == (x1 - x3) / (x8 - x3)


def test_curve_limit_collapsed_values():
    # labels 1 and 7 collide through node p: adjacent pair at the same image
    assert is_inf(curve_limit_cross_ratio(CHAIN3, ("1", "2", "4", "7")))
    # 3 and 5 collide in first position: numerator vanishes
    assert curve_limit_cross_ratio(CHAIN3, ("3", "5", "2", "4")) == rf(0)
    # collisions across the diagonal leave the value 1
    assert curve_limit_cross_ratio(CHAIN3, ("3", "2", "5", "4")) == rf(1)


def test_curve_limit_needs_four_labels():
    with pytest.raises(ValueError):
        curve_limit_cross_ratio(CHAIN3, ("1", "2", "3"))


# --------------------------------------------------------------------------
# labelled terms


def test_cross_arg_validation():
    with pytest.raises(ValueError):
        CrossArg.of((1, 2, 3))
    with pytest.raises(TypeError):
        LabelLi(1, (1,), (rfvar("x1"),))
    assert repr(CrossArg.of((1, 2, 3, 4), (5, 6, 7, 8))) == "[1234]*[5678]"


def test_cross_value_generic():
    x1, x2, x3, x4 = (label_var(str(i)) for i in range(1, 5))
    got = cross_value(CrossArg.of((1, 2, 3, 4)))
    assert got == ((x1 - x2) * (x3 - x4)) / ((x2 - x3) * (x4 - x1))


def test_materialise_round_trip():
    x = label_li(2, (1, 1), (CrossArg.of((1, 2, 3, 4)), CrossArg.of((1, 3, 2, 4))))
    (t,) = materialise(x).terms()
    assert isinstance(t, LiTerm) and not isinstance(t, LabelLi)
    assert t.args[0] + t.args[1] == rf(1)  # the two classic ratios sum to 1


# --------------------------------------------------------------------------
# degeneration onto a curve


FIVE_TERM = LinComb.total(
    label_li(
        2,
        (1,),
        (CrossArg.of(tuple(j for j in range(1, 6) if j != i)),),
        coeff=Fraction((-1) ** i),
    )
    for i in range(1, 6)
)


def test_five_term_collapse_234():
    curve = parse_curve("234 u_p 15")
    x2, x3, x4 = label_var("2"), label_var("3"), label_var("4")
    a = (x3 - x2) / (x3 - x4)
    want = li(2, (1,), (a,), c=-1) + li(2, (1,), (a.inv(),), c=-1)
    assert degenerate(FIVE_TERM, curve) == want


def test_five_term_collapse_235():
    curve = parse_curve("235 u_p 14")
    x2, x3, x5 = label_var("2"), label_var("3"), label_var("5")
    a_inv = (x2 - x3) / (x2 - x5)
    want = li(2, (1,), (a_inv,), c=-1) + li(2, (1,), (rf(1) - a_inv.inv(),))
    assert degenerate(FIVE_TERM, curve) == want


def test_degenerate_zero_argument_kills_term():
    curve = parse_curve("234 u_p 15")
    x = label_li(2, (1, 1), (CrossArg.of((2, 3, 1, 5)), CrossArg.of((1, 2, 3, 5))))
    assert degenerate(x, curve) == LinComb()


def test_limit_arg_product_rules():
    curve = parse_curve("234 u_p 15")
    one = label_li(2, (1,), (CrossArg.of((2, 3, 4, "p"), (4, 3, 2, "p")),))
    (t,) = degenerate(one, curve).terms()
    assert t.args == (rf(1),)
    # a zero factor against an infinite one has no well defined limit
    bad = label_li(2, (1,), (CrossArg.of((2, 3, 1, 5), (2, 1, 5, 3)),))
    with pytest.raises(ValueError):
        degenerate(bad, curve)
    # an infinite factor must be balanced by an exactly-1 residual product
    bad = label_li(2, (1,), (CrossArg.of((2, 1, 5, 3), (2, 3, 4, "p")),))
    with pytest.raises(ValueError):
        degenerate(bad, curve)


def test_drop_policies():
    curve = parse_curve("234 u_p 15")
    # limits: 1, A, 1/A  (one argument 1, the others mutually inverse)
    x = label_li(
        1,
        (1, 1, 1),
        (
            CrossArg.of((2, 1, 3, 5)),
            CrossArg.of((2, 3, 4, "p")),
            CrossArg.of((4, 3, 2, "p")),
        ),
    )
    assert len(degenerate(x, curve, policy="none")) == 1
    assert len(degenerate(x, curve, policy="two_ones")) == 1
    assert degenerate(x, curve, policy="one_one") == LinComb()
    assert degenerate(x, curve, policy="one_var") == LinComb()
    # limits: 1, 1, A  (two arguments 1, no inverse pairing)
    y = label_li(
        1,
        (1, 1, 1),
        (
            CrossArg.of((2, 1, 3, 5)),
            CrossArg.of((3, 1, 2, 5)),
            CrossArg.of((2, 3, 4, "p")),
        ),
    )
    assert degenerate(y, curve, policy="two_ones") == LinComb()
    assert len(degenerate(y, curve, policy="one_var")) == 1
    assert degenerate(y, curve, policy=("one_var", "two_ones")) == LinComb()


# --------------------------------------------------------------------------
# analytic route agrees with the combinatorial rule


def test_limit_plan_structure():
    plan = LimitPlan.for_curve(CHAIN3)
    assert [p for p, _ in plan.steps] == ["lam", "mu"]
    sub = dict(plan.steps)["lam"]
    assert set(sub) == {"x1", "x7"}
    assert sub["x1"] == label_var("p") + rfvar("lam") * label_var("1")


def test_analytic_check_five_term():
    for text in ("234 u_p 15", "235 u_p 14"):
        rep = analytic_check(FIVE_TERM, parse_curve(text), verify_zero_mod_products)
        assert rep["pass"] and rep["n_terms"] == 5


def test_analytic_check_weight_four_chain():
    x = label_li(
        1,
        (1, 1, 1),
        (
            CrossArg.of((2, 4, 6, "q")),
            CrossArg.of((2, "q", 4, "p")),
            CrossArg.of((1, 3, 5, 7)),  # limit is infinite on this curve
        ),
    )
    rep = analytic_check(x, CHAIN3, verify_zero_mod_products)
    assert rep["pass"]


def test_analytic_check_weight_six_star():
    curve = parse_curve("(138_p, 24_q, 79_r) u 56")
    x = label_li(
        3,
        (1, 1, 1),
        (
            CrossArg.of((1, 2, 5, 7)),
            CrossArg.of((3, 4, 6, 9)),
            CrossArg.of((8, 2, 5, 9)),
        ),
    )
    rep = analytic_check(x, curve, verify_zero_mod_products)
    assert rep["pass"]
