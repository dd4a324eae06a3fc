"""Exact arithmetic in Q(v1, ..., vr).

Sparse multivariate polynomials over exact rationals, reduced rational
functions, points of the projective line (a rational function or infinity),
and gcd-free coprime factor bases for multiplicative decompositions.

All values are immutable after construction and safe to share.  The variable
registry is global and append-only; exponent vectors are stored with trailing
zeros stripped, so values built before a registration stay valid after it.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "IndeterminateError",
    "register_var",
    "var_names",
    "Poly",
    "RatFunc",
    "Infinity",
    "INF",
    "is_inf",
    "ZERO",
    "ONE",
    "rf",
    "rfvar",
    "pe_add",
    "pe_sub",
    "pe_mul",
    "pe_div",
    "poly_gcd",
    "div_exact",
    "valuation",
    "reduce_fraction",
    "eval_at",
    "FactorBasis",
    "factor_decompose",
    "squarefree_split",
    "parse_poly",
    "parse_ratfunc",
    "format_poly",
    "format_ratfunc",
]


class IndeterminateError(ArithmeticError):
    """Raised for genuinely undefined values (0/0, inf - inf, 0 * inf)."""


# --------------------------------------------------------------------------
# variable registry

_VARS: list[str] = []
_VAR_INDEX: dict[str, int] = {}


def register_var(name: str) -> int:
    """Return the registry index of `name`, registering it if new."""
    idx = _VAR_INDEX.get(name)
    if idx is None:
        if not name.isidentifier():
            raise ValueError(f"bad variable name: {name!r}")
        idx = len(_VARS)
        _VARS.append(name)
        _VAR_INDEX[name] = idx
    return idx


def var_names() -> tuple[str, ...]:
    return tuple(_VARS)


def _grlex(exp: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    # stripped tuples compare correctly under (total degree, lex): a stripped
    # tail is nonzero, so prefix ties cannot occur at equal degree
    return (sum(exp), exp)


def _strip(exp: tuple[int, ...]) -> tuple[int, ...]:
    n = len(exp)
    while n and exp[n - 1] == 0:
        n -= 1
    return exp[:n]


def _exp_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


# --------------------------------------------------------------------------
# polynomials


class Poly:
    """Sparse polynomial: map from stripped exponent tuple to nonzero Fraction."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict):
        self.terms = terms
        self._hash = None

    # --- constructors

    @staticmethod
    def zero() -> "Poly":
        return _P_ZERO

    @staticmethod
    def const(c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return _P_ZERO
        return Poly({(): c})

    @staticmethod
    def variable(name: str) -> "Poly":
        i = register_var(name)
        return Poly({(0,) * i + (1,): Fraction(1)})

    @staticmethod
    def from_terms(items) -> "Poly":
        out: dict = {}
        for exp, c in items:
            exp = _strip(tuple(exp))
            c = out.get(exp, Fraction(0)) + c
            if c:
                out[exp] = c
            else:
                out.pop(exp, None)
        return Poly(out)

    # --- predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def const_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        raise ValueError("not a constant polynomial")

    def __bool__(self) -> bool:
        return bool(self.terms)

    # --- ring operations

    def __add__(self, other: "Poly") -> "Poly":
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, _F0) + c
            if s:
                out[exp] = s
            else:
                del out[exp]
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        if not other.terms:
            return self
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, _F0) - c
            if s:
                out[exp] = s
            else:
                del out[exp]
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not self.terms or not other.terms:
            return _P_ZERO
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = _exp_add(e1, e2)
                s = out.get(e, _F0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return _P_ZERO
        if c == 1:
            return self
        return Poly({e: k * c for e, k in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # --- structure

    def lead(self) -> tuple[tuple[int, ...], Fraction]:
        """Leading (exponent, coefficient) under graded lex order."""
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def variables(self) -> set[int]:
        out: set[int] = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    out.add(i)
        return out

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, vi: int) -> int:
        return max((e[vi] if vi < len(e) else 0 for e in self.terms), default=0)

    def low_degree_in(self, vi: int) -> int:
        return min((e[vi] if vi < len(e) else 0 for e in self.terms), default=0)

    def coeff_in(self, vi: int, k: int) -> "Poly":
        """Coefficient of v^k: terms with v-exponent k, with v zeroed out."""
        out: dict = {}
        for e, c in self.terms.items():
            if (e[vi] if vi < len(e) else 0) == k:
                if vi < len(e):
                    e = _strip(e[:vi] + (0,) + e[vi + 1:])
                out[e] = c
        return Poly(out)

    def times_var(self, vi: int, k: int) -> "Poly":
        if k == 0 or not self.terms:
            return self
        out: dict = {}
        for e, c in self.terms.items():
            if vi < len(e):
                e = e[:vi] + (e[vi] + k,) + e[vi + 1:]
            else:
                e = e + (0,) * (vi - len(e)) + (k,)
            out[e] = c
        return Poly(out)

    def shift_down(self, vi: int, k: int) -> "Poly":
        """Divide by v^k; every monomial must have v-exponent >= k."""
        if k == 0:
            return self
        out: dict = {}
        for e, c in self.terms.items():
            cur = e[vi] if vi < len(e) else 0
            if cur < k:
                raise ValueError("not divisible by the requested power")
            out[_strip(e[:vi] + (cur - k,) + e[vi + 1:])] = c
        return Poly(out)

    def diff(self, vi: int) -> "Poly":
        out: dict = {}
        for e, c in self.terms.items():
            k = e[vi] if vi < len(e) else 0
            if k:
                out[_strip(e[:vi] + (k - 1,) + e[vi + 1:])] = c * k
        return Poly(out)

    def reverse_in(self, vi: int) -> "Poly":
        """v^deg * p(1/v): reverse the coefficient order in variable vi."""
        d = self.degree_in(vi)
        out: dict = {}
        for e, c in self.terms.items():
            k = e[vi] if vi < len(e) else 0
            if vi < len(e):
                e2 = _strip(e[:vi] + (d - k,) + e[vi + 1:])
            else:
                e2 = _strip(e + (0,) * (vi - len(e)) + (d - k,))
            out[e2] = c
        return Poly(out)

    # --- normalisation

    def sign_normalized(self) -> tuple["Poly", Fraction]:
        """Return (q, m) with self = m*q, q integer-primitive with positive
        leading coefficient under graded lex."""
        if not self.terms:
            return self, Fraction(1)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        m = Fraction(num_gcd, den_lcm)
        _, lc = self.lead()
        if lc < 0:
            m = -m
        return self.scale(1 / m), m

    # --- evaluation / substitution

    def eval_frac(self, assignment: dict) -> Fraction:
        """Evaluate at rational values; assignment maps variable name -> value."""
        vals: dict[int, Fraction] = {}
        for vi in self.variables():
            name = _VARS[vi]
            if name not in assignment:
                raise ValueError(f"no value for variable {name}")
            vals[vi] = Fraction(assignment[name])
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term *= vals[i] ** k
            total += term
        return total

    def eval_rf(self, assignment: dict) -> "RatFunc":
        """Substitute rational functions for variables (by name); variables
        absent from the assignment are kept."""
        total = RatFunc.zero()
        for e, c in self.terms.items():
            term = RatFunc.const(c)
            for i, k in enumerate(e):
                if k:
                    name = _VARS[i]
                    base = assignment.get(name)
                    if base is None:
                        base = RatFunc.var(name)
                    term = term * base**k
            total = total + term
        return total

    # --- plumbing

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return format_poly(self)


_F0 = Fraction(0)
_P_ZERO = Poly({})
_P_ONE = Poly({(): Fraction(1)})


# --------------------------------------------------------------------------
# gcd machinery: content/primitive-part recursion with subresultant PRS


def div_exact(f: Poly, g: Poly) -> Poly:
    """Exact division f / g; raises if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if g.is_const():
        return f.scale(1 / g.const_value())
    r = f
    ge, gc = g.lead()
    out: dict = {}
    while r.terms:
        re, rc = r.lead()
        diff = _exp_sub(re, ge)
        if diff is None:
            raise ValueError("inexact polynomial division")
        c = rc / gc
        out[diff] = out.get(diff, _F0) + c
        r = r - Poly({diff: c}) * g
    return Poly({e: c for e, c in out.items() if c})


def _exp_sub(a: tuple[int, ...], b: tuple[int, ...]):
    if len(b) > len(a):
        return None
    out = list(a)
    for i, k in enumerate(b):
        out[i] -= k
        if out[i] < 0:
            return None
    return _strip(tuple(out))


def _content(f: Poly, vi: int) -> Poly:
    c = _P_ZERO
    for k in range(f.degree_in(vi) + 1):
        part = f.coeff_in(vi, k)
        if part.terms:
            c = poly_gcd(c, part)
            if c.is_const():
                return _P_ONE
    return c


def _prem(a: Poly, b: Poly, vi: int) -> Poly:
    """Pseudo-remainder of a by b in variable vi: lc(b)^(da-db+1) * a mod b."""
    da, db = a.degree_in(vi), b.degree_in(vi)
    lb = b.coeff_in(vi, db)
    r = a
    e = da - db + 1
    while r.terms:
        dr = r.degree_in(vi)
        if dr < db:
            break
        r = lb * r - r.coeff_in(vi, dr).times_var(vi, dr - db) * b
        e -= 1
    if e > 0 and r.terms:
        r = lb**e * r
    return r


def _prs_gcd(a: Poly, b: Poly, vi: int) -> Poly:
    """Gcd of two primitive polynomials in main variable vi (subresultant PRS)."""
    if a.degree_in(vi) < b.degree_in(vi):
        a, b = b, a
    g = _P_ONE
    h = _P_ONE
    while True:
        d = a.degree_in(vi) - b.degree_in(vi)
        r = _prem(a, b, vi)
        if r.is_zero():
            break
        if b.degree_in(vi) == 0:
            return _P_ONE
        a, b = b, div_exact(r, g * h**d)
        g = a.coeff_in(vi, a.degree_in(vi))
        if d == 1:
            h = g
        elif d > 1:
            h = div_exact(g**d, h ** (d - 1))
    if b.degree_in(vi) == 0:
        return _P_ONE
    return div_exact(b, _content(b, vi)).sign_normalized()[0]


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Gcd over Q[vars], integer-primitive with positive leading coefficient."""
    if f.is_zero():
        return g.sign_normalized()[0] if g.terms else _P_ZERO
    if g.is_zero():
        return f.sign_normalized()[0]
    if f.is_const() or g.is_const():
        return _P_ONE
    vf, vg = f.variables(), g.variables()
    vi = max(vf | vg)
    if vi not in vf:
        return poly_gcd(f, _content(g, vi))
    if vi not in vg:
        return poly_gcd(_content(f, vi), g)
    cf = _content(f, vi)
    cg = _content(g, vi)
    pf = div_exact(f, cf)
    pg = div_exact(g, cg)
    c = poly_gcd(cf, cg)
    h = _prs_gcd(pf, pg, vi)
    return (c * h).sign_normalized()[0]


def squarefree_split(p: Poly) -> list[tuple[Poly, int]]:
    """Decompose p into pairwise-coprime squarefree components with
    multiplicities: p = unit * prod s_i^(m_i).  Characteristic 0 only."""
    if p.is_const():
        return []
    p = p.sign_normalized()[0]
    chain: list[Poly] = []
    cur = p
    while not cur.is_const():
        g = cur
        for vi in sorted(cur.variables()):
            g = poly_gcd(g, cur.diff(vi))
            if g.is_const():
                break
        chain.append(div_exact(cur, g).sign_normalized()[0])
        cur = g.sign_normalized()[0]
    out: list[tuple[Poly, int]] = []
    for j, w in enumerate(chain):
        nxt = chain[j + 1] if j + 1 < len(chain) else _P_ONE
        s = div_exact(w, nxt).sign_normalized()[0]
        if not s.is_const():
            out.append((s, j + 1))
    return out


# --------------------------------------------------------------------------
# rational functions


class RatFunc:
    """Reduced fraction of polynomials.  The denominator is nonzero,
    integer-primitive with positive leading coefficient, coprime to the
    numerator; zero is 0/1."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly):
        # trusts the caller; use reduce_fraction for raw pairs
        self.num = num
        self.den = den
        self._hash = None

    # --- constructors

    @staticmethod
    def zero() -> "RatFunc":
        return ZERO

    @staticmethod
    def one() -> "RatFunc":
        return ONE

    @staticmethod
    def const(c) -> "RatFunc":
        c = Fraction(c)
        if c == 0:
            return ZERO
        return RatFunc(Poly.const(c), _P_ONE)

    @staticmethod
    def var(name: str) -> "RatFunc":
        return RatFunc(Poly.variable(name), _P_ONE)

    # --- predicates

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        return self.num.const_value() / self.den.const_value()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # --- field operations

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return reduce_fraction(self.num + other.num, self.den)
        return reduce_fraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            return self
        if self.den == other.den:
            return reduce_fraction(self.num - other.num, self.den)
        return reduce_fraction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            return reduce_fraction(self.num.scale(other), self.den)
        return reduce_fraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return reduce_fraction(self.num * other.den, self.den * other.num)

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return reduce_fraction(self.den, self.num)

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inv() ** (-n)
        return reduce_fraction(self.num**n, self.den**n)

    # --- specialisation helpers

    def subs_inv(self, name: str) -> "RatFunc":
        """Substitute v -> 1/v for the named variable."""
        vi = register_var(name)
        dn = self.num.degree_in(vi)
        dd = self.den.degree_in(vi)
        return reduce_fraction(
            self.num.reverse_in(vi).times_var(vi, max(dn, dd) - dn),
            self.den.reverse_in(vi).times_var(vi, max(dn, dd) - dd),
        )

    def eval_rf(self, assignment: dict) -> "RatFunc":
        den = self.den.eval_rf(assignment)
        if den.is_zero():
            raise ZeroDivisionError("denominator vanishes under substitution")
        return self.num.eval_rf(assignment) / den

    def variables(self) -> set[int]:
        return self.num.variables() | self.den.variables()

    # --- plumbing

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return format_ratfunc(self)


def reduce_fraction(num: Poly, den: Poly) -> RatFunc:
    """Canonical RatFunc from a raw fraction of polynomials."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO
    g = poly_gcd(num, den)
    if not g.is_const():
        num = div_exact(num, g)
        den = div_exact(den, g)
    den, m = den.sign_normalized()
    if m != 1:
        num = num.scale(1 / m)
    return RatFunc(num, den)


ZERO = RatFunc(_P_ZERO, _P_ONE)
ONE = RatFunc(_P_ONE, _P_ONE)


def rf(value) -> RatFunc:
    """Coerce an int/Fraction/str/RatFunc to a RatFunc."""
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, Fraction)):
        return RatFunc.const(value)
    if isinstance(value, str):
        return parse_ratfunc(value)
    raise TypeError(f"cannot coerce {value!r} to RatFunc")


def rfvar(name: str) -> RatFunc:
    return RatFunc.var(name)


def valuation(f: RatFunc, name: str):
    """Order of vanishing at v = 0: low degree of num minus low degree of den.
    Returns math.inf for the zero function."""
    if f.is_zero():
        return math.inf
    vi = register_var(name)
    return f.num.low_degree_in(vi) - f.den.low_degree_in(vi)


def eval_at(f: RatFunc, assignment: dict):
    """Exact evaluation: Fraction, or INF when only the denominator vanishes."""
    n = f.num.eval_frac(assignment)
    d = f.den.eval_frac(assignment)
    if d == 0:
        if n == 0:
            raise IndeterminateError("indeterminate evaluation (0/0)")
        return INF
    return n / d


# --------------------------------------------------------------------------
# projective points


class Infinity:
    """The point at infinity on P^1; a singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return isinstance(other, Infinity)

    def __hash__(self) -> int:
        return hash("polylie-infinity")


INF = Infinity()


def is_inf(x) -> bool:
    return isinstance(x, Infinity)


def pe_add(a, b):
    if is_inf(a) or is_inf(b):
        if is_inf(a) and is_inf(b):
            raise IndeterminateError("inf + inf is indeterminate on P^1")
        return INF
    return a + b


def pe_sub(a, b):
    if is_inf(a) or is_inf(b):
        if is_inf(a) and is_inf(b):
            raise IndeterminateError("inf - inf is indeterminate")
        return INF
    return a - b


def pe_mul(a, b):
    if is_inf(a) or is_inf(b):
        other = b if is_inf(a) else a
        if is_inf(other):
            return INF
        if other.is_zero():
            raise IndeterminateError("0 * inf is indeterminate")
        return INF
    return a * b


def pe_div(a, b):
    if is_inf(a) and is_inf(b):
        raise IndeterminateError("inf / inf is indeterminate")
    if is_inf(a):
        return INF
    if is_inf(b):
        return ZERO
    if b.is_zero():
        if a.is_zero():
            raise IndeterminateError("0 / 0 is indeterminate")
        return INF
    return a / b


# --------------------------------------------------------------------------
# coprime factor bases


class FactorBasis:
    """Growing family of pairwise-coprime primitive polynomials over which
    every decomposed rational function factors as const * prod basis_i^e_i.

    Refinement only splits an element into two coprime parts, recorded in a
    forest, so exponent vectors issued earlier re-express deterministically
    over the refined basis.  Single-writer: refine from one thread only.
    """

    def __init__(self):
        self._polys: list[Poly] = []          # node id -> polynomial
        self._children: list = []             # node id -> None or (id, id)
        self._node_of: dict[Poly, int] = {}
        self._leaf_ids: list[int] = []
        self._cache: dict[RatFunc, tuple] = {}

    # --- queries

    def leaf_ids(self) -> list[int]:
        return list(self._leaf_ids)

    def poly(self, nid: int) -> Poly:
        return self._polys[nid]

    def leaf_polys(self) -> list[Poly]:
        return [self._polys[i] for i in self._leaf_ids]

    def __len__(self) -> int:
        return len(self._leaf_ids)

    # --- construction

    def _new_node(self, p: Poly) -> int:
        nid = len(self._polys)
        self._polys.append(p)
        self._children.append(None)
        self._node_of[p] = nid
        self._leaf_ids.append(nid)
        return nid

    def _split(self, nid: int, g: Poly) -> None:
        b = self._polys[nid]
        rest = div_exact(b, g).sign_normalized()[0]
        pos = self._leaf_ids.index(nid)
        self._leaf_ids.pop(pos)
        cg = self._node_of.get(g)
        if cg is None:
            cg = len(self._polys)
            self._polys.append(g)
            self._children.append(None)
            self._node_of[g] = cg
        cr = self._node_of.get(rest)
        if cr is None:
            cr = len(self._polys)
            self._polys.append(rest)
            self._children.append(None)
            self._node_of[rest] = cr
        self._children[nid] = (cg, cr)
        self._leaf_ids[pos:pos] = [cg, cr]

    def _absorb(self, q: Poly) -> list[int]:
        """Insert a squarefree primitive polynomial; return node ids whose
        product is exactly q (each appearing once)."""
        out: list[int] = []
        i = 0
        while i < len(self._leaf_ids) and not q.is_const():
            nid = self._leaf_ids[i]
            b = self._polys[nid]
            g = poly_gcd(q, b)
            if g.is_const():
                i += 1
            elif g == b:
                out.append(nid)
                q = div_exact(q, b).sign_normalized()[0]
                i += 1
            else:
                self._split(nid, g)
                # leaves changed in place; retry the same position
        if not q.is_const():
            out.append(self._new_node(q))
        return out

    def _decompose_poly(self, p: Poly) -> tuple[list[tuple[int, int]], Fraction]:
        norm, mult = p.sign_normalized()
        pairs: list[tuple[int, int]] = []
        if not norm.is_const():
            for s, m in squarefree_split(norm):
                for nid in self._absorb(s):
                    pairs.append((nid, m))
            rec = _P_ONE
            for nid, m in pairs:
                rec = rec * self._polys[nid] ** m
            mult *= div_exact(norm, rec).const_value()
        else:
            mult *= norm.const_value()
        return pairs, mult

    def decompose(self, f: RatFunc) -> tuple[tuple[tuple[int, int], ...], Fraction]:
        """f = const * prod node_i^e_i over forest node ids.  Node ids stay
        valid under refinement; map them to current leaves via re_express."""
        if f.is_zero():
            raise ZeroDivisionError("cannot factor zero")
        hit = self._cache.get(f)
        if hit is not None:
            return hit
        np, nc = self._decompose_poly(f.num)
        dp, dc = self._decompose_poly(f.den)
        acc: dict[int, int] = {}
        for nid, m in np:
            acc[nid] = acc.get(nid, 0) + m
        for nid, m in dp:
            acc[nid] = acc.get(nid, 0) - m
        pairs = tuple(sorted((nid, e) for nid, e in acc.items() if e))
        result = (pairs, nc / dc)
        self._cache[f] = result
        return result

    def re_express(self, pairs) -> tuple[tuple[int, int], ...]:
        """Push node-level exponents down to current leaves."""
        acc: dict[int, int] = {}

        def down(nid: int, e: int) -> None:
            kids = self._children[nid]
            if kids is None:
                acc[nid] = acc.get(nid, 0) + e
            else:
                for k in kids:
                    down(k, e)

        for nid, e in pairs:
            down(nid, e)
        return tuple(sorted((nid, e) for nid, e in acc.items() if e))


def factor_decompose(basis: FactorBasis, f: RatFunc):
    """Decompose f over the basis, refining it as needed; returns leaf-level
    (pairs, constant)."""
    pairs, const = basis.decompose(f)
    return basis.re_express(pairs), const


# --------------------------------------------------------------------------
# textual grammar: identifiers, `^` powers, `*` products, rationals `p/q`


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    pieces: list[str] = []
    for exp in sorted(p.terms, key=_grlex, reverse=True):
        c = p.terms[exp]
        factors = []
        for i, k in enumerate(exp):
            if k == 1:
                factors.append(_VARS[i])
            elif k:
                factors.append(f"{_VARS[i]}^{k}")
        if not factors:
            pieces.append(str(c))
        elif c == 1:
            pieces.append("*".join(factors))
        elif c == -1:
            pieces.append("-" + "*".join(factors))
        else:
            pieces.append(str(c) + "*" + "*".join(factors))
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


def format_ratfunc(f: RatFunc) -> str:
    if f.den == _P_ONE:
        return format_poly(f.num)
    return f"({format_poly(f.num)})/({format_poly(f.den)})"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ValueError(f"expected integer at position {start} in {self.text!r}")
        return int(self.text[start:self.pos])

    def take_ident(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start:self.pos]


def _parse_expr(s: _Scanner) -> RatFunc:
    left = _parse_term(s)
    while True:
        c = s.peek()
        if c == "+":
            s.pos += 1
            left = left + _parse_term(s)
        elif c == "-":
            s.pos += 1
            left = left - _parse_term(s)
        else:
            return left


def _parse_term(s: _Scanner) -> RatFunc:
    left = _parse_factor(s)
    while True:
        c = s.peek()
        if c == "*":
            s.pos += 1
            left = left * _parse_factor(s)
        elif c == "/":
            s.pos += 1
            left = left / _parse_factor(s)
        else:
            return left


def _parse_factor(s: _Scanner) -> RatFunc:
    c = s.peek()
    if c == "-":
        s.pos += 1
        return -_parse_factor(s)
    base = _parse_base(s)
    if s.peek() == "^":
        s.pos += 1
        neg = False
        if s.peek() == "-":
            s.pos += 1
            neg = True
        n = s.take_int()
        base = base ** (-n if neg else n)
    return base


def _parse_base(s: _Scanner) -> RatFunc:
    c = s.peek()
    if c == "(":
        s.pos += 1
        inner = _parse_expr(s)
        if s.peek() != ")":
            raise ValueError(f"unbalanced parenthesis at position {s.pos}")
        s.pos += 1
        return inner
    if c.isdigit():
        return RatFunc.const(s.take_int())
    if c.isalpha() or c == "_":
        return RatFunc.var(s.take_ident())
    raise ValueError(f"unexpected character {c!r} at position {s.pos}")


def parse_ratfunc(text: str) -> RatFunc:
    s = _Scanner(text)
    out = _parse_expr(s)
    if s.peek():
        raise ValueError(f"trailing input at position {s.pos} in {text!r}")
    return out


def parse_poly(text: str) -> Poly:
    f = parse_ratfunc(text)
    if not f.den.is_const():
        raise ValueError("not a polynomial (non-constant denominator)")
    return f.num.scale(1 / f.den.const_value())
