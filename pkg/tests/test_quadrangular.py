from fractions import Fraction
from itertools import product as iproduct

import pytest

from polylie.coalgebra import verify_zero_mod_products
from polylie.field import rfvar
from polylie.projective import hexa_ratio
from polylie.quadrangular import (
    QLiTerm,
    expand_qli,
    index_sequences,
    q_fe,
    q_tilde,
    qli,
    qli_sym,
    qli_sym_as_qli,
    quadrangulate,
)
from polylie.specialise import LabelLi, cross_value
from polylie.terms import CorTerm, LinComb

XS = tuple(rfvar(f"x{i}") for i in range(10))


# --------------------------------------------------------------------------
# index sequence enumeration


def _brute_sequences(n, k, symmetrised):
    # independent enumeration: all tuples, then filter
    length = n + k + 1
    out = []
    for s in iproduct(range(2 * n + 2), repeat=length):
        if list(s) != sorted(s):
            continue
        if any(s.count(e) > 1 for e in range(0, 2 * n + 2, 2)):
            continue
        if not symmetrised and any(
            2 * i not in s and 2 * i + 1 not in s for i in range(n + 1)
        ):
            continue
        out.append((s, (-1) ** sum(1 for v in s if v % 2 == 0)))
    return out


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_index_sequences_against_brute_force(n, k):
    for symmetrised in (False, True):
        assert index_sequences(n, k, symmetrised) == _brute_sequences(
            n, k, symmetrised
        )


def test_index_sequence_counts():
    assert len(index_sequences(1, 1)) == 8
    assert len(index_sequences(1, 1, symmetrised=True)) == 12
    assert len(index_sequences(3, 3)) == 320
    assert len(index_sequences(3, 3, symmetrised=True)) == 952


def test_index_sequence_signs_and_exclusions():
    seqs = dict(index_sequences(1, 1))
    assert seqs[(0, 1, 2)] == 1  # two even entries
    assert seqs[(1, 2, 3)] == -1  # one even entry
    assert (0, 0, 1) not in seqs  # repeated even index
    assert (1, 1, 1) not in seqs  # pair {2,3} unrepresented
    assert (1, 1, 1) in dict(index_sequences(1, 1, symmetrised=True))


# --------------------------------------------------------------------------
# correlator expansions


def test_qli_validates_point_count():
    with pytest.raises(ValueError):
        qli(1, 1, XS[:6])
    with pytest.raises(ValueError):
        QLiTerm(2, XS[:3])


def test_qli_expansion_smallest():
    # weight 2 on four points: all eight sequences give live correlators
    got = qli(1, 1, XS[:4])
    expected = LinComb.total(
        LinComb.term(CorTerm.make(tuple(XS[i] for i in s)), Fraction(sign))
        for s, sign in index_sequences(1, 1)
    )
    assert got == expected
    assert len(got) == 8


def test_q_fe_cancels_identically():
    for m, N in [(2, 4), (3, 5)]:
        z = expand_qli(q_fe(m, N, XS[: N + 1]))
        assert z.is_zero()


def test_q_fe_preconditions():
    with pytest.raises(ValueError):
        q_fe(4, 5, XS[:6])
    with pytest.raises(ValueError):
        q_fe(2, 4, XS[:4])


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_symmetrised_as_alternating_restricted_sum(n, k):
    pts = XS[: 2 * n + 2]
    lhs = qli_sym(n, k, pts)
    rhs = expand_qli(qli_sym_as_qli(n, k, pts))
    assert (lhs - rhs).is_zero()


def test_symmetrised_expansion_contains_full_term_once():
    x = qli_sym_as_qli(2, 2, XS[:6])
    assert x.coeff(QLiTerm(4, XS[:6])) == 1


# --------------------------------------------------------------------------
# quadrangulation tables


def test_quadrangulate_term_counts_and_indices():
    assert len(quadrangulate(XS[:4], 1, 4)) == 1
    assert len(quadrangulate(XS[:6], 2, 4)) == 3
    full = quadrangulate(XS[:8], 3, 6)
    top = quadrangulate(XS[:8], 3, 6, top_only=True)
    assert len(full) == 19 and len(top) == 15
    tails = {t.indices for t in full.terms()}
    assert tails == {(1, 1, 1), (1, 2)}
    assert all(t.n0 == 3 for t in full.terms())
    assert all(t.indices == (1, 1, 1) for t in top.terms())


def test_quadrangulate_validations():
    with pytest.raises(ValueError):
        quadrangulate(XS[:4], 4, 8)
    with pytest.raises(ValueError):
        quadrangulate(XS[:4], 2, 4)
    with pytest.raises(ValueError):
        quadrangulate(XS[:4], 1, 1)


def test_quadrangulate_labelled_mode():
    labels = tuple("12345678")
    x = quadrangulate(labels, 3, 6)
    assert all(isinstance(t, LabelLi) for t in x.terms())
    # the product argument of the depth-2 tail is a 6-point cyclic ratio
    prods = [
        a
        for t in x.terms()
        if t.indices == (1, 2)
        for a in t.args
        if len(a.factors) == 2
    ]
    assert len(prods) == 4
    want = hexa_ratio(XS[2], XS[3], XS[4], XS[5], XS[6], XS[1])
    assert any(cross_value(p, coords=_coords()) == want for p in prods)


def _coords():
    return {str(i + 1): XS[i] for i in range(8)}


# --------------------------------------------------------------------------
# consistency with the correlator definition, at the symbol level


@pytest.mark.parametrize("n,k,d,w", [(1, 1, 1, 2), (1, 3, 1, 4), (2, 2, 2, 4)])
def test_quadrangulation_matches_correlator_definition(n, k, d, w):
    pts = XS[: 2 * n + 2]
    diff = qli(n, k, pts) - quadrangulate(pts, d, w)
    assert verify_zero_mod_products(diff)["pass"]


# --------------------------------------------------------------------------
# the omission functional equation


def test_q_tilde_term_counts():
    assert len(q_tilde(2, XS[:7])) == 21
    assert len(q_tilde(3, XS[:9])) == 135
    labelled = q_tilde(2, tuple("1234567"))
    assert len(labelled) == 21
    assert all(isinstance(t, LabelLi) for t in labelled.terms())
    with pytest.raises(ValueError):
        q_tilde(2, XS[:6])


def test_q_tilde_weight4_vanishes_mod_depth():
    rep = verify_zero_mod_products(q_tilde(2, XS[:7]), mod_depth=2)
    assert rep["pass"]
