from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polylie.field import INF, rf, rfvar
from polylie.terms import (
    CorTerm,
    IITerm,
    LiTerm,
    LinComb,
    cor,
    cor_to_ii,
    dihedral,
    format_term,
    ii,
    ii_to_cor,
    ii_word_to_li,
    li,
    li_to_ii,
    normalize_degenerate,
    parse_term,
)

X = rfvar("x")
Y = rfvar("y")
Z = rfvar("z")


def test_li_to_ii_examples():
    assert li_to_ii(LiTerm(0, (2,), (X,))) == ii(0, [1, 0], X, -1)
    assert li_to_ii(LiTerm(2, (1, 1), (X, Y))) == ii(0, [0, 0, 1, X], X * Y)
    assert li_to_ii(LiTerm(1, (1,), (X,))) == ii(0, [0, 1], X, -1)
    assert li_to_ii(LiTerm(0, (3, 1), (X, Y))) == ii(0, [1, 0, 0, X], X * Y)
    # depth-3 sign is negative
    assert li_to_ii(LiTerm(3, (1, 1, 1), (X, Y, Z))) == ii(
        0, [0, 0, 0, 1, X, X * Y], X * Y * Z, -1
    )


def test_li_to_ii_rejects_degenerate_args():
    with pytest.raises(ValueError):
        li_to_ii(LiTerm(0, (2,), (rf(0),)))
    with pytest.raises(ValueError):
        li_to_ii(LiTerm(0, (1, 1), (X, INF)))


def test_cor_to_ii_shape():
    t = CorTerm.make((X, Y, Z))
    x0, x1, x2 = t.points
    assert cor_to_ii(t) == (
        ii(0, [x0, x1], x2) + ii(0, [0, x0], x1) + ii(0, [0, 0], x0)
    )


def test_ii_to_cor_regularised_endpoint():
    # I(0;1;x) = Cor(1,x) - Cor(0,1) and Cor(0,1) = log(1) = 0
    t = IITerm.make(rf(0), (rf(1),), X)
    assert ii_to_cor(t) == cor((rf(1), X))


def test_cor_construction_rules():
    assert CorTerm.make((X, X, X)) is None
    assert CorTerm.make((rf(0), rf(0), rf(1))) is None
    assert CorTerm.make((rf(1), rf(0))) is None
    assert CorTerm.make((rf(0), rf(2))) is not None
    assert CorTerm.make((rf(0), rf(1), rf(1))) is not None
    # cyclic rotations collapse to one stored term
    a, b, c = rf(2), rf(3), rf(5)
    assert CorTerm.make((a, b, c)) == CorTerm.make((b, c, a)) == CorTerm.make((c, a, b))


def test_ii_construction_rules():
    assert IITerm.make(X, (Y,), X) is None
    with pytest.raises(ValueError):
        IITerm.make(X, (), Y)


points = st.integers(min_value=-6, max_value=6).map(rf)


@given(st.lists(points, min_size=2, max_size=5))
@settings(max_examples=60, deadline=None)
def test_cor_to_ii_roundtrip_telescopes(pts):
    t = CorTerm.make(tuple(pts))
    if t is None:
        return
    back = cor_to_ii(t).map_linear(ii_to_cor)
    assert back == LinComb.term(t)


@given(
    st.integers(min_value=0, max_value=2),
    st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=3),
    st.data(),
)
@settings(max_examples=60, deadline=None)
def test_li_ii_word_roundtrip(n0, indices, data):
    args = tuple(
        rf(data.draw(st.fractions(min_value=1, max_value=7, max_denominator=4)))
        for _ in indices
    )
    t = LiTerm(n0, tuple(indices), args)
    ((it, c),) = li_to_ii(t).items()
    sign, back = ii_word_to_li(it)
    assert back == t
    assert sign * c == 1


def test_ii_word_to_li_rescales():
    # first nonzero letter need not be 1
    t = IITerm.make(rf(0), (Y, rf(0), Y * Z), X)
    sign, back = ii_word_to_li(t)
    assert sign == 1
    assert back == LiTerm(0, (2, 1), (Z, X / (Y * Z)))


def test_ii_word_to_li_pure_zero_word():
    sign, back = ii_word_to_li(IITerm.make(rf(0), (rf(0), rf(0)), X))
    assert sign == 0 and back is None


def test_dihedral_reverse():
    t = IITerm.make(rf(0), (rf(1), X, Y), Z)
    out, corr = dihedral(t, "reverse")
    assert corr.is_zero()
    assert out == ii(0, [Y, X, 1], Z)  # weight 3: sign +1
    t2 = IITerm.make(rf(0), (rf(1), X), Y)
    out2, _ = dihedral(t2, "reverse")
    assert out2 == ii(0, [X, 1], Y, -1)  # weight 2: sign -1


def test_dihedral_full_cycle_returns():
    t = IITerm.make(rf(0), (rf(1), X, Y), Z)
    main, corr = dihedral(t, ("cycle", 4))
    assert main == LinComb.term(t)
    assert corr.is_zero()


def test_dihedral_cycle_step():
    t = IITerm.make(rf(0), (rf(1), X, Y), Z)
    main, corr = dihedral(t, ("cycle", 1))
    assert main == ii(0, [X, Y, Z], 1)
    assert not corr.is_zero()
    with pytest.raises(ValueError):
        dihedral(IITerm.make(rf(0), (rf(0), X), Y), ("cycle", 1))


def test_normalize_degenerate():
    assert normalize_degenerate(LiTerm(0, (2, 1), (X, rf(0)))).is_zero()
    assert normalize_degenerate(LiTerm(3, (1, 1, 1), (INF, Y, Z))) == li(
        4, (1, 1), (Y, Z), -1
    )
    assert normalize_degenerate(LiTerm(0, (1, 1), (X, INF))) == li(1, (1,), (X,))
    # telescoped final-position rule, two surviving depths
    assert normalize_degenerate(LiTerm(1, (1, 1, 1), (X, Y, INF))) == (
        li(2, (1, 1), (X, Y)) - li(3, (1,), (X,))
    )
    # repeated infinities recurse
    assert normalize_degenerate(LiTerm(0, (1, 1, 1), (INF, INF, Y))) == li(
        2, (1,), (Y,)
    )
    with pytest.raises(ValueError):
        normalize_degenerate(LiTerm(0, (1, 1), (rf(0), INF)))


def test_lincomb_algebra():
    a = li(0, (2,), (X,)) + li(0, (2,), (Y,), 2)
    b = li(0, (2,), (X,), -1)
    assert (a + b).coeff(LiTerm(0, (2,), (Y,))) == 2
    assert len(a + b) == 1
    assert (a - a).is_zero()
    assert a.scale(Fraction(1, 2)).coeff(LiTerm(0, (2,), (X,))) == Fraction(1, 2)
    assert a.filter(lambda t: t.args == (X,)) == li(0, (2,), (X,))
    doubled = a.map_linear(lambda t: LinComb.term(t, 2))
    assert doubled == a.scale(2)
    assert a.denominator_lcm() == 1
    assert a.scale(Fraction(1, 6)).denominator_lcm() == 6


def test_grammar_roundtrip():
    for t in (
        LiTerm(2, (1, 1), (X, Y)),
        LiTerm(0, (4,), ((X - rf(1)) / Y,)),
        CorTerm.make((rf(0), X, Y)),
        IITerm.make(rf(0), (rf(1), X), Y),
        LiTerm(0, (1, 1), (X, INF)),
    ):
        assert parse_term(format_term(t)) == t


def test_grammar_errors():
    with pytest.raises(ValueError):
        parse_term("Li[{2},{x},{y}]")
    with pytest.raises(ValueError):
        parse_term("Cor[{x,x}]")
    with pytest.raises(ValueError):
        parse_term("Frob[{1}]")
