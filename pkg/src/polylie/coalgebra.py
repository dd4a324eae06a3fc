"""Coalgebra operations: symbols, cobrackets, and mod-products certificates.

The symbol of an integral I(a0;a1,...,an;a_{n+1}) is computed by the cut
recursion: sum over positions i of (symbol of the word with a_i removed)
tensored with the letter attached to the cut.  The letter is the ratio
(a_{i+1}-a_i)/(a_{i-1}-a_i), with one-sided forms when a neighbour equals
a_i and nothing when all three coincide; infinite points contribute
homogeneous constants and therefore drop out.  Letters that are rational
constants are discarded (the group of letters is F^x modulo constants).

Equality modulo products is decided by the Dynkin projector rho, which
kills shuffle products.  Equality modulo products *and* lower depth is
certified through the truncated cobracket, iterated so every surviving
tensor slot is product-tested on its own symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .field import FactorBasis, format_poly, is_inf
from .projective import pdiff
from .terms import (
    CorTerm,
    IITerm,
    LiTerm,
    LinComb,
    cor_to_ii,
    li_to_ii,
    point_key,
)

__all__ = [
    "WedgePair",
    "SymbolElem",
    "CoLieElem",
    "symbol",
    "cobracket",
    "truncated_cobracket",
    "iterated_truncated_cobracket",
    "rho_project",
    "expand_letters",
    "verify_tensor_zero",
    "verify_zero_mod_products",
]

# SymbolElem: LinComb keyed by tuples of field elements (tensor words).
# CoLieElem: LinComb keyed by WedgePair.
SymbolElem = LinComb
CoLieElem = LinComb


def _term_key(t):
    if isinstance(t, IITerm):
        return (0, len(t.word), tuple(point_key(p) for p in t.points))
    if isinstance(t, CorTerm):
        return (1, len(t.points), tuple(point_key(p) for p in t.points))
    if isinstance(t, LiTerm):
        return (2, t.n0, t.indices, tuple(point_key(a) for a in t.args))
    raise TypeError(f"not a term: {t!r}")


@dataclass(frozen=True)
class WedgePair:
    """Antisymmetric pair, stored with the smaller term on the left."""

    left: object
    right: object

    @staticmethod
    def make(a, b):
        """Returns (sign, pair); (0, None) when a = b."""
        ka, kb = _term_key(a), _term_key(b)
        if ka == kb:
            return 0, None
        if ka < kb:
            return 1, WedgePair(a, b)
        return -1, WedgePair(b, a)

    def __repr__(self):
        return f"{self.left!r} ^ {self.right!r}"


def _as_comb(x) -> LinComb:
    if isinstance(x, LinComb):
        return x
    return LinComb.term(x)


# --------------------------------------------------------------------------
# symbols

_SYMBOL_MEMO: dict = {}


def _symbol_ii(t: IITerm) -> LinComb:
    cached = _SYMBOL_MEMO.get(t)
    if cached is not None:
        return cached
    pts = t.points
    n = t.weight
    out: dict = {}
    if n == 1:
        # log(c - b) - log(a - b)
        for pt, sgn in ((pts[2], 1), (pts[0], -1)):
            d = pdiff(pt, pts[1])
            if not d.is_zero():
                key = (d,)
                out[key] = out.get(key, 0) + sgn
                if not out[key]:
                    del out[key]
    else:
        for i in range(1, n + 1):
            p, q, r = pts[i - 1], pts[i], pts[i + 1]
            dr = pdiff(r, q)
            dp = pdiff(p, q)
            if dr.is_zero() and dp.is_zero():
                continue
            if dp.is_zero():
                entry = dr
            elif dr.is_zero():
                entry = dp.inv()
            else:
                entry = dr / dp
            sub = IITerm.make(t.base, t.word[: i - 1] + t.word[i:], t.end)
            for w, c in _symbol_ii(sub).d.items():
                key = w + (entry,)
                s = out.get(key, 0) + c
                if s:
                    out[key] = s
                else:
                    del out[key]
    result = LinComb(out)
    _SYMBOL_MEMO[t] = result
    return result


def _to_ii_comb(t) -> LinComb:
    if isinstance(t, IITerm):
        return LinComb.term(t)
    if isinstance(t, CorTerm):
        return cor_to_ii(t)
    if isinstance(t, LiTerm):
        return li_to_ii(t)
    raise TypeError(f"not a term: {t!r}")


def symbol(x) -> LinComb:
    """Tensor symbol of a term or combination, as a LinComb over tuples of
    field elements.  Entries may still be rational constants; those words
    die at letter expansion."""
    return _as_comb(x).map_linear(_to_ii_comb).map_linear(_symbol_ii)


# --------------------------------------------------------------------------
# cobrackets


def _cobracket_ii(t: IITerm, truncate: bool) -> LinComb:
    pts = t.points
    m = t.weight
    parts = []
    for i in range(0, m + 1):
        for j in range(i + 2, m + 2):
            if i == 0 and j == m + 1:
                continue
            inner_w = j - i - 1
            outer_w = m - inner_w
            if truncate and (inner_w == 1 or outer_w == 1):
                continue
            outer = IITerm.make(pts[0], pts[1 : i + 1] + pts[j : m + 1], pts[m + 1])
            inner = IITerm.make(pts[i], pts[i + 1 : j], pts[j])
            if outer is None or inner is None:
                continue
            sgn, wp = WedgePair.make(outer, inner)
            if wp is not None:
                parts.append(LinComb.term(wp, sgn))
    return LinComb.total(parts)


def _cobracket_cor(t: CorTerm, truncate: bool) -> LinComb:
    pts = t.points
    n = len(pts) - 1
    parts = []
    for r in range(n + 1):
        y = pts[r:] + pts[:r]
        for i in range(1, n):
            if truncate and (i == 1 or n - i == 1):
                continue
            left = CorTerm.make(y[: i + 1])
            right = CorTerm.make((y[0],) + y[i + 1 :])
            if left is None or right is None:
                continue
            sgn, wp = WedgePair.make(left, right)
            if wp is not None:
                parts.append(LinComb.term(wp, sgn))
    return LinComb.total(parts)


def _cobracket_term(t, truncate: bool) -> LinComb:
    if isinstance(t, LiTerm):
        return li_to_ii(t).map_linear(lambda s: _cobracket_term(s, truncate))
    if isinstance(t, IITerm):
        if t.weight < 2:
            raise ValueError("cobracket needs weight >= 2")
        return _cobracket_ii(t, truncate)
    if isinstance(t, CorTerm):
        if t.weight < 2:
            raise ValueError("cobracket needs weight >= 2")
        return _cobracket_cor(t, truncate)
    raise TypeError(f"not a term: {t!r}")


def cobracket(x) -> LinComb:
    """Full cobracket into wedge pairs; weight-1 input is an error."""
    return _as_comb(x).map_linear(lambda t: _cobracket_term(t, False))


def truncated_cobracket(x) -> LinComb:
    """Cobracket with weight-1 factors omitted."""
    return _as_comb(x).map_linear(lambda t: _cobracket_term(t, True))


def _wedge_to_tensors(wp: WedgePair) -> LinComb:
    return LinComb({(wp.left, wp.right): Fraction(1), (wp.right, wp.left): Fraction(-1)})


def iterated_truncated_cobracket(x, k: int) -> LinComb:
    """k-fold tensor slots, iterating the truncated cobracket on the first
    slot; returns a LinComb over k-tuples of terms."""
    if k < 1:
        raise ValueError("need k >= 1")
    if k == 1:
        return _as_comb(x).map_linear(lambda t: LinComb.term((t,)))
    tens = truncated_cobracket(x).map_linear(_wedge_to_tensors)

    def extend(pair):
        left, right = pair
        sub = iterated_truncated_cobracket(left, k - 1)
        return LinComb({w + (right,): c for w, c in sub.d.items()})

    return tens.map_linear(extend)


# --------------------------------------------------------------------------
# Dynkin projector

_RHO_PERMS: dict = {1: ((1, (0,)),)}


def _rho_perms(n: int):
    got = _RHO_PERMS.get(n)
    if got is None:
        prev = _rho_perms(n - 1)
        got = tuple(
            [(s, p + (n - 1,)) for s, p in prev]
            + [(-s, tuple(q + 1 for q in p) + (0,)) for s, p in prev]
        )
        _RHO_PERMS[n] = got
    return got


def rho_project(x):
    """Dynkin projector rho(a1...an) = rho(a1...a_{n-1})(x)an - rho(a2...an)(x)a1,
    applied slotwise; kills shuffle products.  Accepts a LinComb over tuples
    or a plain dict and returns the same shape."""
    d = x.d if isinstance(x, LinComb) else x
    out: dict = {}
    for w, c in d.items():
        for s, p in _rho_perms(len(w)):
            key = tuple(w[i] for i in p)
            v = out.get(key, 0) + s * c
            if v:
                out[key] = v
            else:
                del out[key]
    return LinComb(out) if isinstance(x, LinComb) else out


# --------------------------------------------------------------------------
# letter expansion over a factor basis


def expand_letters(sym, basis: FactorBasis) -> dict:
    """Expand composite tensor entries into factor-basis letters.

    Returns {tuple of leaf ids: coefficient}.  Rational-constant entries
    kill their word.  All entries are decomposed first so later splits
    cannot invalidate earlier leaf vectors.
    """
    d = sym.d if isinstance(sym, LinComb) else sym
    entries = {e for w in d for e in w}
    for e in entries:
        basis.decompose(e)
    vecs = {}
    for e in entries:
        pairs, _const = basis.decompose(e)
        vecs[e] = basis.re_express(pairs)
    out: dict = {}
    for w, c in d.items():
        partial = [((), c)]
        for e in w:
            vec = vecs[e]
            if not vec:
                partial = []
                break
            partial = [(pw + (lid,), pc * m) for pw, pc in partial for lid, m in vec]
        for pw, pc in partial:
            v = out.get(pw, 0) + pc
            if v:
                out[pw] = v
            else:
                del out[pw]
    return out


def _letters_after_rho(term, basis: FactorBasis, cache: dict) -> dict:
    got = cache.get(term)
    if got is None:
        got = rho_project(expand_letters(symbol(term), basis))
        cache[term] = got
    return got


def _format_letter_word(word, basis: FactorBasis) -> str:
    return " (x) ".join(format_poly(basis.poly(lid)) for lid in word)


def verify_tensor_zero(tens: LinComb, max_residual: int = 8, outer_rho: bool = True) -> dict:
    """Joint zero-test for a LinComb over tuples of terms.

    With outer_rho (the default) the test decides equality in the cofree
    Lie coalgebra on the slots: the slot blocks are Dynkin-projected (so
    shuffle products of slots die), then each slot is Dynkin-projected on
    its own symbol letters and the expansions are multiplied out.  With
    outer_rho=False only the per-slot projection is applied, testing the
    raw tensor.
    """
    if outer_rho:
        rotated: dict = {}
        for w, c in tens.d.items():
            for s, p in _rho_perms(len(w)):
                key = tuple(w[i] for i in p)
                v = rotated.get(key, 0) + s * c
                if v:
                    rotated[key] = v
                else:
                    del rotated[key]
        tens = LinComb(rotated)
    basis = FactorBasis()
    # decompose every slot symbol before expanding any of them
    slot_terms = {t for w in tens.d for t in w}
    for t in slot_terms:
        for w in symbol(t).d:
            for e in w:
                basis.decompose(e)
    cache: dict = {}
    acc: dict = {}
    for w, c in tens.d.items():
        partial = [((), c)]
        for t in w:
            dt = _letters_after_rho(t, basis, cache)
            if not dt:
                partial = []
                break
            partial = [
                (pw + lw, pc * lc) for pw, pc in partial for lw, lc in dt.items()
            ]
        for pw, pc in partial:
            v = acc.get(pw, 0) + pc
            if v:
                acc[pw] = v
            else:
                del acc[pw]
    return _report(acc, basis, max_residual)


def _report(acc: dict, basis: FactorBasis, max_residual: int) -> dict:
    residual = [
        (_format_letter_word(w, basis), acc[w]) for w in list(acc)[:max_residual]
    ]
    return {
        "pass": not acc,
        "residual": residual,
        "n_words": len(acc),
        "basis": basis,
    }


def verify_zero_mod_products(x, mod_depth=None, max_residual: int = 8) -> dict:
    """Certify that a combination vanishes modulo products (and, when
    mod_depth=k is given, modulo terms of depth < k as well).

    mod_depth None: Dynkin-projected letter expansion of the symbol.
    mod_depth k: iterated truncated cobracket into k slots, each slot
    Dynkin-projected on its own symbol, then a joint letter zero-test;
    depth < k terms die under the k-fold truncated cobracket.

    Returns {"pass", "residual", "n_words", "basis"}.
    """
    x = _as_comb(x)
    if mod_depth is None:
        basis = FactorBasis()
        acc = rho_project(expand_letters(symbol(x), basis))
        return _report(acc, basis, max_residual)
    return verify_tensor_zero(
        iterated_truncated_cobracket(x, mod_depth), max_residual
    )
