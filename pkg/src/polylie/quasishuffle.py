"""Quasi-shuffle algebra on indexed letters and relation generators.

Letters are pairs (n, x) of a positive integer index and a nonzero function
argument, with fusion law (n, x) * (m, y) = (n + m, x * y).  Words are finite
sequences of letters.  The quasi-shuffle (stuffle) product interleaves two
words while optionally fusing their leading letters; dropping the fusion term
gives the plain shuffle.  Mapping a word [n1,x1 | ... | nk,xk] to the
polylogarithm class with indices (n0; n1..nk) and arguments (x1..xk) sends
every product w * v of nonempty words to zero in the coalgebra, which is the
engine behind the stuffle relations, the antipode (reversal) symmetry, the
insertion shuffle, and inversion, each modulo terms of lower depth.

Also provided: the catalog of independent depth-reduction patterns for
Li_{k;1,...,1}, indexed by compositions of k with fewer than k parts and
maximal first part, realised as argument templates with selected slots
pinned to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .field import RatFunc, rf
from .terms import LiTerm, LinComb

__all__ = [
    "Letter",
    "word",
    "star",
    "shuffle",
    "li_image",
    "relation_antipode",
    "relation_insertion",
    "relation_inversion",
    "NielsenPattern",
    "nielsen_catalog",
]


@dataclass(frozen=True)
class Letter:
    """One letter (n, x): index n >= 1 and argument x in the unit group."""

    n: int
    x: RatFunc

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("letter index must be >= 1")
        if self.x.num.is_zero():
            raise ValueError("letter argument must be nonzero")

    def fuse(self, other: "Letter") -> "Letter":
        return Letter(self.n + other.n, self.x * other.x)


def word(*pairs) -> tuple:
    """Build a word from (n, x) pairs."""
    return tuple(Letter(n, x) for n, x in pairs)


def _prepend(a: Letter, comb: LinComb) -> LinComb:
    return comb.map_linear(lambda w: LinComb.term((a,) + w))


def star(w: tuple, v: tuple) -> LinComb:
    """Quasi-shuffle product of two words, as a combination of words."""
    if not w:
        return LinComb.term(v)
    if not v:
        return LinComb.term(w)
    a, b = w[0], v[0]
    out = _prepend(a.fuse(b), star(w[1:], v[1:]))
    out += _prepend(b, star(w, v[1:]))
    out += _prepend(a, star(w[1:], v))
    return out


def shuffle(w: tuple, v: tuple) -> LinComb:
    """Shuffle product: interleavings only, no letter fusion."""
    if not w:
        return LinComb.term(v)
    if not v:
        return LinComb.term(w)
    out = _prepend(v[0], shuffle(w, v[1:]))
    out += _prepend(w[0], shuffle(w[1:], v))
    return out


def _word_to_li(w: tuple, n0: int) -> LiTerm:
    if not w:
        raise ValueError("empty word has no polylogarithm image")
    return LiTerm(n0, tuple(l.n for l in w), tuple(l.x for l in w))


def li_image(words, n0: int = 0) -> LinComb:
    """Map words (or a combination of words) to polylogarithm terms."""
    if isinstance(words, tuple):
        words = LinComb.term(words)
    return words.map_linear(lambda w: LinComb.term(_word_to_li(w, n0)))


def relation_antipode(n0: int, letters: tuple) -> LinComb:
    """Reversal combination vanishing modulo depth below len(letters).

    Returns Li_{n0;n1..nk}(x1..xk) - (-1)^(k-1) Li_{n0;nk..n1}(xk..x1); for a
    single letter the two terms cancel exactly.
    """
    k = len(letters)
    if k == 0:
        raise ValueError("need at least one letter")
    fwd = li_image(tuple(letters), n0)
    rev = li_image(tuple(reversed(letters)), n0)
    return fwd - Fraction((-1) ** (k - 1)) * rev


def relation_insertion(n0: int, xs: tuple, y: RatFunc) -> LinComb:
    """Sum over all insertions of y into the depth-1 word x1..x_{k-1}.

    All indices are 1; the k+1 placements sum to zero modulo depth < k,
    where k = len(xs) + 1.
    """
    out = LinComb()
    for i in range(len(xs) + 1):
        args = xs[:i] + (y,) + xs[i:]
        out += LinComb.term(LiTerm(n0, (1,) * len(args), args))
    return out


def relation_inversion(n0: int, indices: tuple, args: tuple) -> LinComb:
    """Argument-inversion combination vanishing modulo lower depth.

    Returns Li_{n0;n...}(x...) - (-1)^(n+k) Li_{n0;n...}(1/x...), valid in
    weight n >= 2.
    """
    k = len(indices)
    n = n0 + sum(indices)
    if n < 2:
        raise ValueError("inversion symmetry needs weight >= 2")
    fwd = LinComb.term(LiTerm(n0, indices, args))
    inv = LinComb.term(LiTerm(n0, indices, tuple(a.inv() for a in args)))
    return fwd - Fraction((-1) ** (n + k)) * inv


@dataclass(frozen=True)
class NielsenPattern:
    """One independent depth-reduction pattern for Li_{k;1,...,1}.

    composition: parts (m1,...,md) summing to k, d < k, m1 maximal.
    pattern: digit string, one digit per argument slot; '1' marks a slot
    pinned to 1, '0' a generic argument.
    """

    composition: tuple
    pattern: str

    @property
    def k(self) -> int:
        return sum(self.composition)

    @property
    def n_generic(self) -> int:
        return len(self.composition)

    def arguments(self, generic: tuple) -> tuple:
        """Fill the slots: 1 at each '1', the next generic value at each '0'."""
        if len(generic) != self.n_generic:
            raise ValueError(
                f"pattern {self.pattern} needs {self.n_generic} generic arguments"
            )
        out = []
        it = iter(generic)
        for m in self.composition:
            out.extend([rf(1)] * (m - 1))
            out.append(next(it))
        return tuple(out)

    def li_term(self, generic: tuple, n0=None) -> LiTerm:
        k = self.k
        return LiTerm(k if n0 is None else n0, (1,) * k, self.arguments(generic))


def _compositions(k: int):
    if k == 0:
        yield ()
        return
    for first in range(k, 0, -1):
        for rest in _compositions(k - first):
            yield (first,) + rest


def nielsen_catalog(k: int) -> list:
    """All patterns for weight-2k depth reduction: compositions (m1,..,md)
    of k with d < k and m1 >= mi, in descending lexicographic order."""
    if k < 2:
        raise ValueError("catalog needs k >= 2")
    out = []
    for comp in _compositions(k):
        if len(comp) >= k:
            continue
        if any(m > comp[0] for m in comp[1:]):
            continue
        pattern = "".join("1" * (m - 1) + "0" for m in comp)
        out.append(NielsenPattern(comp, pattern))
    return out
