"""Quadrangular polylogarithm combinations and their functional equation.

A quadrangular polylogarithm of weight w on an even tuple of points is a
signed sum of correlators whose argument lists are read off from
non-decreasing index sequences; the restricted enumeration requires every
adjacent index pair {2i, 2i+1} to be represented, the symmetrised one does
not.  These combinations satisfy a purely combinatorial functional equation
(alternating sums over point subsets cancel identically at the correlator
level) and, by the quadrangulation formula, collapse to multiple
polylogarithms of small depth in cross-ratios of the points.

The quadrangulation data for 4, 6 and 8 points (depths 1, 2, 3) is a fixed
tabulation; re-deriving it from dual trees of polygon quadrangulations is out
of scope, but consistency with the correlator definition is property-tested
at the symbol level.  The alternating sum of the top-depth pieces over all
one-point omissions from an odd tuple vanishes modulo lower depth; that
combination is the engine's main source of functional equations, and is
produced here either with rational-function points (for symbol checks) or
with point labels (so it can be degenerated onto stable curves).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .field import RatFunc, rf
from .projective import cross_ratio
from .specialise import CrossArg, label_li
from .terms import LinComb, LiTerm, cor

__all__ = [
    "index_sequences",
    "QLiTerm",
    "qli",
    "qli_sym",
    "qli_sym_as_qli",
    "q_fe",
    "expand_qli",
    "quadrangulate",
    "q_tilde",
]


def index_sequences(n, k, symmetrised=False):
    """Enumerate non-decreasing sequences (i_0..i_{n+k}) over 0..2n+1 with
    each even value at most once; the restricted set additionally needs each
    pair {2i, 2i+1} represented.  Returns (sequence, sign) with sign
    (-1)^{#even entries}."""
    length = n + k + 1
    if n < 0 or length < 1:
        return []
    out = []
    for s in combinations_with_replacement(range(2 * n + 2), length):
        if any(s.count(e) > 1 for e in range(0, 2 * n + 2, 2)):
            continue
        if not symmetrised and not all(
            2 * i in s or 2 * i + 1 in s for i in range(n + 1)
        ):
            continue
        sign = (-1) ** sum(1 for v in s if v % 2 == 0)
        out.append((s, sign))
    return out


@dataclass(frozen=True)
class QLiTerm:
    """Unexpanded quadrangular polylogarithm: weight, an even tuple of
    points, and which index enumeration to use."""

    weight: int
    points: tuple
    symmetrised: bool = False

    def __post_init__(self):
        if len(self.points) % 2 or len(self.points) < 2:
            raise ValueError("need an even number (>= 2) of points")

    def expand(self) -> LinComb:
        """Signed correlator sum over the index sequences."""
        n = len(self.points) // 2 - 1
        k = self.weight - n
        pref = Fraction((-1) ** (n + 1))
        total = LinComb()
        for s, sign in index_sequences(n, k, self.symmetrised):
            total += cor(tuple(self.points[i] for i in s), pref * sign)
        return total


def qli(n, k, points) -> LinComb:
    if len(points) != 2 * n + 2:
        raise ValueError("expected 2n+2 points")
    return QLiTerm(n + k, tuple(points)).expand()


def qli_sym(n, k, points) -> LinComb:
    if len(points) != 2 * n + 2:
        raise ValueError("expected 2n+2 points")
    return QLiTerm(n + k, tuple(points), symmetrised=True).expand()


def qli_sym_as_qli(n, k, points) -> LinComb:
    """The symmetrised combination as an alternating sum of restricted ones
    over nonempty subsets of the adjacent point pairs (a LinComb of
    QLiTerm)."""
    out = LinComb()
    for r in range(n + 1):
        for pairs in combinations(range(n + 1), r + 1):
            sel = []
            for i in pairs:
                sel.extend((points[2 * i], points[2 * i + 1]))
            out += LinComb.term(
                QLiTerm(n + k, tuple(sel)), Fraction((-1) ** (n - r))
            )
    return out


def q_fe(m, N, points) -> LinComb:
    """Alternating-subset functional equation of weight m on points
    x_0..x_N: the expansion cancels identically as a correlator sum."""
    if m >= N - 1:
        raise ValueError("functional equation needs m < N-1")
    if len(points) != N + 1:
        raise ValueError("expected N+1 points")
    out = LinComb()
    for r in range((N - 1) // 2 + 1):
        for sel in combinations(range(N + 1), 2 * r + 2):
            coeff = Fraction((-1) ** (sum(sel) - r))
            pts = tuple(points[i] for i in sel)
            out += LinComb.term(QLiTerm(m, pts, symmetrised=True), coeff)
    return out


def expand_qli(x: LinComb) -> LinComb:
    """Expand every QLiTerm in a combination to correlators."""
    return x.map_linear(lambda t: t.expand())


# --------------------------------------------------------------------------
# quadrangulation tables: positions are 1-based into the point tuple; each
# argument is a product of 4-point cross-ratios

_D1 = (((1,), ((-1, (((1, 2, 3, 4),),)),)),)

_D2 = (
    (
        (1, 1),
        (
            (1, (((1, 2, 3, 6),), ((3, 4, 5, 6),))),
            (-1, (((1, 2, 5, 6),), ((3, 4, 5, 2),))),
            (1, (((1, 4, 5, 6),), ((1, 2, 3, 4),))),
        ),
    ),
)

_D3 = (
    (
        (1, 1, 1),
        (
            (-1, (((1, 2, 3, 8),), ((3, 4, 5, 8),), ((5, 6, 7, 8),))),
            (1, (((1, 2, 3, 8),), ((3, 4, 7, 8),), ((5, 6, 7, 4),))),
            (-1, (((1, 2, 3, 8),), ((3, 6, 7, 8),), ((3, 4, 5, 6),))),
            (1, (((1, 2, 5, 8),), ((3, 4, 5, 2),), ((5, 6, 7, 8),))),
            (1, (((1, 2, 5, 8),), ((5, 6, 7, 8),), ((3, 4, 5, 2),))),
            (-1, (((1, 2, 7, 8),), ((3, 4, 7, 2),), ((5, 6, 7, 4),))),
            (1, (((1, 2, 7, 8),), ((3, 6, 7, 2),), ((3, 4, 5, 6),))),
            (-1, (((1, 2, 7, 8),), ((5, 6, 7, 2),), ((3, 4, 5, 2),))),
            (-1, (((1, 4, 5, 8),), ((1, 2, 3, 4),), ((5, 6, 7, 8),))),
            (-1, (((1, 4, 5, 8),), ((5, 6, 7, 8),), ((1, 2, 3, 4),))),
            (1, (((1, 4, 7, 8),), ((1, 2, 3, 4),), ((5, 6, 7, 4),))),
            (1, (((1, 4, 7, 8),), ((5, 6, 7, 4),), ((1, 2, 3, 4),))),
            (-1, (((1, 6, 7, 8),), ((1, 2, 3, 6),), ((3, 4, 5, 6),))),
            (1, (((1, 6, 7, 8),), ((1, 2, 5, 6),), ((3, 4, 5, 2),))),
            (-1, (((1, 6, 7, 8),), ((1, 4, 5, 6),), ((1, 2, 3, 4),))),
        ),
    ),
    (
        (1, 2),
        (
            (1, (((1, 2, 5, 8),), ((3, 4, 5, 2), (5, 6, 7, 8)))),
            (-1, (((1, 2, 7, 8),), ((3, 4, 5, 6), (3, 6, 7, 2)))),
            (-1, (((1, 4, 5, 8),), ((1, 2, 3, 4), (5, 6, 7, 8)))),
            (1, (((1, 4, 7, 8),), ((1, 2, 3, 4), (5, 6, 7, 4)))),
        ),
    ),
)

_TABLES = {1: _D1, 2: _D2, 3: _D3}


def _value_arg(points, prod) -> RatFunc:
    out = rf(1)
    for f in prod:
        out = out * cross_ratio(*(points[a - 1] for a in f))
    return out


def _label_arg(labels, prod) -> CrossArg:
    return CrossArg.of(*(tuple(labels[a - 1] for a in f) for f in prod))


def quadrangulate(points, d, weight, top_only=False) -> LinComb:
    """The 2d+2-point combination of weight `weight` as depth-<=d terms.

    String points give labelled terms (degenerable onto curves), rational
    function points give ordinary terms.  top_only keeps just the depth-d
    block, the building block of the omission functional equation.
    """
    if d not in _TABLES:
        raise ValueError("tabulated only for 4, 6 or 8 points")
    if len(points) != 2 * d + 2:
        raise ValueError("expected 2d+2 points")
    if weight <= d:
        raise ValueError("weight must exceed the depth")
    labelled = all(isinstance(p, str) for p in points)
    out = LinComb()
    for tail, entries in _TABLES[d]:
        if top_only and len(tail) != d:
            continue
        n0 = weight - sum(tail)
        for coeff, prods in entries:
            if labelled:
                args = tuple(_label_arg(points, p) for p in prods)
                out += label_li(n0, tail, args, coeff=coeff)
            else:
                args = tuple(_value_arg(points, p) for p in prods)
                out += LinComb.term(LiTerm(n0, tail, args), Fraction(coeff))
    return out


def q_tilde(k, points) -> LinComb:
    """Alternating sum of the depth-k blocks over all one-point omissions
    from a 2k+3 tuple; vanishes modulo depth < k."""
    if len(points) != 2 * k + 3:
        raise ValueError("expected 2k+3 points")
    out = LinComb()
    for i in range(1, 2 * k + 4):
        rest = tuple(p for j, p in enumerate(points, start=1) if j != i)
        out += Fraction((-1) ** i) * quadrangulate(rest, k, 2 * k, top_only=True)
    return out
