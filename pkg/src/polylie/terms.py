"""Formal generators and their calculus.

Three term families: polylogarithms Li_{n0;n1,...,nk}(x1,...,xk), correlators
Cor(x0,...,xn), and iterated integrals I(x0;x1,...,xn;x_{n+1}).  Linear
combinations are exact-rational dictionaries over canonicalised terms.

Construction-level identities: correlators are stored at the least cyclic
rotation, Cor(x,...,x) = 0, the regularised Cor(0,...,0,1) = 0, and
I(a;w;a) = 0.  Everything else (conversions, dihedral symmetries, degenerate
arguments) is an explicit operation returning a linear combination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .field import (
    INF,
    RatFunc,
    is_inf,
    parse_ratfunc,
    format_ratfunc,
    rf,
)

__all__ = [
    "LiTerm",
    "CorTerm",
    "IITerm",
    "LinComb",
    "point_key",
    "li",
    "cor",
    "ii",
    "li_to_ii",
    "ii_to_cor",
    "cor_to_ii",
    "ii_word_to_li",
    "dihedral",
    "normalize_degenerate",
    "is_constant_arglist",
    "parse_term",
    "parse_point",
    "format_point",
    "format_term",
]

_ONE = RatFunc.one()
_ZERO = RatFunc.zero()


def point_key(p):
    """Deterministic sort key for PointExpr values."""
    if is_inf(p):
        return (1,)
    return (
        0,
        tuple(sorted(p.num.terms.items())),
        tuple(sorted(p.den.terms.items())),
    )


def _is_zero_pt(p) -> bool:
    return not is_inf(p) and p.is_zero()


def _is_one_pt(p) -> bool:
    return not is_inf(p) and p == _ONE


# --------------------------------------------------------------------------
# linear combinations


class LinComb:
    """Finite Q-linear combination over hashable canonical term keys."""

    __slots__ = ("d",)

    def __init__(self, d=None):
        self.d = d if d is not None else {}

    @staticmethod
    def term(t, c=1) -> "LinComb":
        if t is None:
            return LinComb()
        c = Fraction(c)
        return LinComb({t: c}) if c else LinComb()

    @staticmethod
    def total(parts) -> "LinComb":
        out: dict = {}
        for part in parts:
            for t, c in part.d.items():
                s = out.get(t, 0) + c
                if s:
                    out[t] = s
                else:
                    del out[t]
        return LinComb(out)

    def __add__(self, other: "LinComb") -> "LinComb":
        if not other.d:
            return self
        if not self.d:
            return other
        out = dict(self.d)
        for t, c in other.d.items():
            s = out.get(t, 0) + c
            if s:
                out[t] = s
            else:
                del out[t]
        return LinComb(out)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + other.scale(-1)

    def __neg__(self) -> "LinComb":
        return self.scale(-1)

    def scale(self, c) -> "LinComb":
        c = Fraction(c)
        if not c:
            return LinComb()
        if c == 1:
            return self
        return LinComb({t: k * c for t, k in self.d.items()})

    def __rmul__(self, c) -> "LinComb":
        return self.scale(c)

    __mul__ = __rmul__

    def map_linear(self, f) -> "LinComb":
        """Linear extension: f maps a term to a LinComb."""
        return LinComb.total(f(t).scale(c) for t, c in self.d.items())

    def filter(self, pred) -> "LinComb":
        return LinComb({t: c for t, c in self.d.items() if pred(t)})

    def items(self):
        return self.d.items()

    def terms(self):
        return self.d.keys()

    def coeff(self, t) -> Fraction:
        return self.d.get(t, Fraction(0))

    def denominator_lcm(self) -> int:
        out = 1
        for c in self.d.values():
            out = out * c.denominator // math.gcd(out, c.denominator)
        return out

    def is_zero(self) -> bool:
        return not self.d

    def __bool__(self) -> bool:
        return bool(self.d)

    def __len__(self) -> int:
        return len(self.d)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self.d == other.d

    def __repr__(self) -> str:
        if not self.d:
            return "0"
        bits = []
        for t, c in self.d.items():
            bits.append(f"{'+' if c > 0 else '-'} {abs(c) if abs(c) != 1 else ''}{t!r}")
        return " ".join(bits)


# --------------------------------------------------------------------------
# term families


@dataclass(frozen=True)
class LiTerm:
    """Li_{n0;n1,...,nk}(x1,...,xk); weight n0+n1+...+nk, depth k."""

    n0: int
    indices: tuple
    args: tuple

    def __post_init__(self):
        if self.n0 < 0 or not self.indices or len(self.indices) != len(self.args):
            raise ValueError("malformed polylogarithm term")
        if any(n < 1 for n in self.indices):
            raise ValueError("inner indices must be >= 1")

    @property
    def weight(self) -> int:
        return self.n0 + sum(self.indices)

    @property
    def depth(self) -> int:
        return len(self.indices)

    def __repr__(self) -> str:
        return format_term(self)


@dataclass(frozen=True)
class CorTerm:
    """Correlator Cor(x0,...,xn), cyclically invariant; weight n."""

    points: tuple

    @staticmethod
    def make(points) -> "CorTerm | None":
        """Canonical term, or None when the correlator vanishes by
        construction (all points equal, or the regularised (0,...,0,1))."""
        points = tuple(points)
        if len(points) < 2:
            raise ValueError("a correlator needs at least two points")
        first = points[0]
        if all(_pt_eq(p, first) for p in points[1:]):
            return None
        zeros = sum(1 for p in points if _is_zero_pt(p))
        ones = sum(1 for p in points if _is_one_pt(p))
        if zeros + ones == len(points) and ones == 1:
            return None
        rots = [points[i:] + points[:i] for i in range(len(points))]
        best = min(rots, key=lambda r: tuple(point_key(p) for p in r))
        return CorTerm(best)

    @property
    def weight(self) -> int:
        return len(self.points) - 1

    def __repr__(self) -> str:
        return format_term(self)


@dataclass(frozen=True)
class IITerm:
    """Iterated integral I(x0;x1,...,xn;x_{n+1}); weight n >= 1."""

    base: object
    word: tuple
    end: object

    @staticmethod
    def make(base, word, end) -> "IITerm | None":
        word = tuple(word)
        if not word:
            raise ValueError("empty integral word")
        if _pt_eq(base, end):
            return None
        return IITerm(base, word, end)

    @property
    def weight(self) -> int:
        return len(self.word)

    @property
    def points(self) -> tuple:
        return (self.base,) + self.word + (self.end,)

    def __repr__(self) -> str:
        return format_term(self)


def _pt_eq(p, q) -> bool:
    if is_inf(p) or is_inf(q):
        return is_inf(p) and is_inf(q)
    return p == q


def _coerce_point(x):
    if is_inf(x):
        return INF
    return rf(x)


def li(n0, indices, args, c=1) -> LinComb:
    args = tuple(_coerce_point(a) for a in args)
    return LinComb.term(LiTerm(n0, tuple(indices), args), c)


def cor(points, c=1) -> LinComb:
    points = tuple(_coerce_point(p) for p in points)
    return LinComb.term(CorTerm.make(points), c)


def ii(base, word, end, c=1) -> LinComb:
    t = IITerm.make(
        _coerce_point(base), tuple(_coerce_point(w) for w in word), _coerce_point(end)
    )
    return LinComb.term(t, c)


def is_constant_arglist(t: LiTerm) -> bool:
    return all(not is_inf(a) and a.is_const() for a in t.args)


# --------------------------------------------------------------------------
# conversions


def li_to_ii(t: LiTerm) -> LinComb:
    """(-1)^k I(0; 0^{n0}, 1, 0^{n1-1}, x1, 0^{n2-1}, x1*x2, ...,
    x1...x_{k-1}, 0^{nk-1}; x1...xk)."""
    if any(is_inf(a) or a.is_zero() for a in t.args):
        raise ValueError("zero or infinite argument: use normalize_degenerate first")
    word: list = [_ZERO] * t.n0 + [_ONE]
    running = _ONE
    for j, n in enumerate(t.indices):
        word.extend([_ZERO] * (n - 1))
        running = running * t.args[j]
        if j + 1 < len(t.indices):
            word.append(running)
    sign = -1 if t.depth % 2 else 1
    return ii(_ZERO, word, running, sign)


def ii_to_cor(t: IITerm) -> LinComb:
    """I(x0;x1,...,xm;x_{m+1}) = Cor(x1,...,x_{m+1}) - Cor(x0,x1,...,xm)."""
    return cor(t.word + (t.end,)) - cor((t.base,) + t.word)


def cor_to_ii(t: CorTerm) -> LinComb:
    """Cor(x0,...,xm) = sum_i I(0; 0^i, x0,...,x_{m-1-i}; x_{m-i})."""
    pts = t.points
    m = len(pts) - 1
    parts = []
    for i in range(m + 1):
        word = (_ZERO,) * i + pts[: m - i]
        parts.append(ii(_ZERO, word, pts[m - i]))
    return LinComb.total(parts)


def ii_word_to_li(t: IITerm) -> tuple:
    """Recognise a base-0 integral as a polylogarithm: returns (sign, LiTerm)
    with I = sign * Li, or (0, None) for pure-zero words (which are products
    of logarithms), after rescaling so the first nonzero letter is 1.
    Requires a nonzero finite endpoint and base 0."""
    if is_inf(t.base) or not t.base.is_zero():
        raise ValueError("expected a base-0 integral")
    if is_inf(t.end) or any(is_inf(w) for w in t.word):
        raise ValueError("infinite point in integral word")
    nonzero = [i for i, w in enumerate(t.word) if not w.is_zero()]
    if not nonzero:
        return (0, None)
    scale = t.word[nonzero[0]].inv()
    letters = [t.word[i] * scale for i in nonzero]
    end = t.end * scale
    n0 = nonzero[0]
    gaps = []
    for a, b in zip(nonzero, nonzero[1:]):
        gaps.append(b - a)
    gaps.append(len(t.word) - nonzero[-1])
    indices = tuple(gaps)
    args = []
    prev = _ONE
    for y in letters[1:] + [end]:
        args.append(y / prev)
        prev = y
    k = len(args)
    sign = -1 if k % 2 else 1
    return (sign, LiTerm(n0, indices, tuple(args)))


# --------------------------------------------------------------------------
# dihedral symmetries


def dihedral(t: IITerm, mode) -> tuple:
    """Dihedral move on an integral.

    mode "reverse": exact; returns (LinComb, zero correction).
    mode ("cycle", i): rotates the word/endpoint so position i becomes the
    endpoint; returns (rotated LinComb, exact lower-order correction) with
    original = rotated + correction.  Requires base 0 and nonzero letters
    passing the basepoint.
    """
    if mode == "reverse":
        n = t.weight
        sign = 1 if (n + 1) % 2 == 0 else -1
        out = ii(t.base, tuple(reversed(t.word)), t.end, sign)
        return out, LinComb()
    if isinstance(mode, tuple) and mode[0] == "cycle":
        i = mode[1]
        if not (1 <= i <= t.weight + 1):
            raise ValueError("cycle position out of range")
        if is_inf(t.base) or not t.base.is_zero():
            raise ValueError("cyclic move defined for base-0 integrals")
        main = LinComb.term(t)
        correction = LinComb()
        for _ in range(i):
            term = _single_term(main)
            if term is None:
                break
            x1 = term.word[0]
            if _is_zero_pt(x1):
                raise ValueError("cannot cycle past a zero letter")
            rotated = ii(term.base, term.word[1:] + (term.end,), x1)
            step_corr = cor((_ZERO,) + term.word[1:] + (term.end,)) - cor(
                (_ZERO,) + term.word
            )
            correction = correction + step_corr.map_linear(cor_to_ii)
            main = rotated
        return main, correction
    raise ValueError(f"unknown dihedral mode {mode!r}")


def _single_term(lc: LinComb):
    for term, c in lc.d.items():
        if c != 1:
            raise ValueError("expected a unit coefficient")
        return term
    return None


# --------------------------------------------------------------------------
# degenerate arguments


def normalize_degenerate(t: LiTerm) -> LinComb:
    """Rewrite a polylogarithm with 0 or inf arguments.

    A 0 argument (alone) kills the term.  An inf argument telescopes to
    lower depth; the all-depths-consumed tail is a constant and is dropped.
    Simultaneous 0 and inf arguments need a specialisation context (the
    limit must be taken on the integral word) and are rejected here.
    """
    has_zero = any(_is_zero_pt(a) for a in t.args)
    has_inf = any(is_inf(a) for a in t.args)
    if has_zero and has_inf:
        raise ValueError("mixed 0/inf degeneration requires a specialisation context")
    if has_zero:
        return LinComb()
    if not has_inf:
        return LinComb.term(t)
    i = next(j for j, a in enumerate(t.args) if is_inf(a)) + 1  # 1-based
    k = t.depth
    if i < k:
        head = t.n0 + sum(t.indices[:i])
        sign = -1 if i % 2 else 1
        rest = LiTerm(head, t.indices[i:], t.args[i:])
        return normalize_degenerate(rest).scale(sign)
    parts = []
    for ell in range(k - 1):
        head = t.n0 + sum(t.indices[k - 1 - ell:])
        sign = -1 if ell % 2 else 1
        rest = LiTerm(head, t.indices[: k - 1 - ell], t.args[: k - 1 - ell])
        parts.append(normalize_degenerate(rest).scale(sign))
    # the final telescoping step has no arguments left: a constant, dropped
    return LinComb.total(parts)


# --------------------------------------------------------------------------
# grammar: Li[{n0,n1,...,nk},{x1,...,xk}], Cor[{...}], I[{...}]


def parse_point(text: str):
    text = text.strip()
    if text == "inf":
        return INF
    return parse_ratfunc(text)


def format_point(p) -> str:
    if is_inf(p):
        return "inf"
    return format_ratfunc(p)


def _split_braces(text: str) -> list:
    """Top-level comma-split of `{a,b,...}` respecting nested parentheses."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"expected braces: {text!r}")
    inner = text[1:-1]
    parts, depth, cur = [], 0, []
    for ch in inner:
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur or parts:
        parts.append("".join(cur))
    return [p.strip() for p in parts]


def _brace_groups(text: str) -> list:
    """Split `{..},{..},...` at top level."""
    groups, depth, cur = [], 0, []
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            groups.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        groups.append("".join(cur))
    return [g.strip() for g in groups]


def parse_term(text: str):
    """Parse a single Li/Cor/I term."""
    text = text.strip()
    for head in ("Li", "Cor", "I"):
        if text.startswith(head + "["):
            if not text.endswith("]"):
                raise ValueError(f"unterminated term: {text!r}")
            body = text[len(head) + 1 : -1]
            groups = _brace_groups(body)
            if head == "Li":
                if len(groups) != 2:
                    raise ValueError("Li takes an index list and an argument list")
                nums = [int(s) for s in _split_braces(groups[0])]
                args = [parse_point(s) for s in _split_braces(groups[1])]
                return LiTerm(nums[0], tuple(nums[1:]), tuple(args))
            pts = [parse_point(s) for s in _split_braces(groups[0])]
            if head == "Cor":
                made = CorTerm.make(pts)
                if made is None:
                    raise ValueError("correlator vanishes by construction")
                return made
            made = IITerm.make(pts[0], pts[1:-1], pts[-1])
            if made is None:
                raise ValueError("integral vanishes by construction")
            return made
    raise ValueError(f"unrecognised term: {text!r}")


def format_term(t) -> str:
    if isinstance(t, LiTerm):
        nums = ",".join(str(n) for n in (t.n0,) + t.indices)
        args = ",".join(format_point(a) for a in t.args)
        return f"Li[{{{nums}}},{{{args}}}]"
    if isinstance(t, CorTerm):
        return f"Cor[{{{','.join(format_point(p) for p in t.points)}}}]"
    if isinstance(t, IITerm):
        return f"I[{{{','.join(format_point(p) for p in t.points)}}}]"
    return repr(t)
