"""Named verification fixtures tying the engine's components together.

A fixture freezes one checkable statement: how to build a combination, what
must survive a degeneration, and which certificate settles the comparison.
Three certificate modes are used.  "exact" demands that the full
product-free symbol vanish; "mod-depth-1" and "mod-depth-2" demand that the
two- and three-fold truncated cobrackets vanish, which certifies vanishing
modulo depth 1 and depth 2 respectively at a fraction of the cost.

The module also houses the argument-symmetry machinery (signed slotwise
substitution groups and their closures), the five-point rotation whose
order-five orbit forces two-term relations, and a plain-text interchange
format for term lists.  `run_fixture` executes one fixture by name and
wraps the outcome in a timed report; `run_all` runs a deterministic batch.
"""

from __future__ import annotations

import random
import re
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .coalgebra import verify_zero_mod_products
from .field import INF, ONE, format_ratfunc, parse_poly, rf
from .identities import IDENTITY_TABLES
from .projective import PERM_BY_NAME, Perm3, anharmonic, cross_ratio
from .quadrangular import q_tilde
from .specialise import CrossArg, cross_value, degenerate, label_li, parse_curve
from .terms import CorTerm, LiTerm, LinComb, cor, li

__all__ = [
    "MODE_DEPTH",
    "certify",
    "Fixture",
    "Report",
    "FIXTURES",
    "fixture",
    "run_fixture",
    "run_all",
    "OrbitElement",
    "orbit_closure",
    "weight4_generators",
    "weight6_generators",
    "symmetry_orbit",
    "orbit_relation",
    "describe_element",
    "pentagon_step",
    "pentagon_formula",
    "pentagon_orbit",
    "TermListFormatError",
    "format_term_list",
    "parse_term_list",
    "export_term_list",
    "import_term_list",
    "identity_comb",
    "CurveCase",
    "CURVE_CASES",
    "curve_top",
    "curve_expected",
    "five_term_sum",
    "six_point_five_term",
]

# certificate modes: exact symbol vanishing, or k-fold truncated cobracket
MODE_DEPTH = {"exact": None, "mod-depth-1": 2, "mod-depth-2": 3}


def certify(comb: LinComb, mode: str) -> dict:
    """Run the zero-certificate for `comb` at the given mode."""
    rep = verify_zero_mod_products(comb, mod_depth=MODE_DEPTH[mode])
    return {
        "pass": rep["pass"],
        "n_words": rep["n_words"],
        "residual": len(rep["residual"]),
        "basis": rep["basis"],
    }


# --------------------------------------------------------------------------
# fixture registry

@dataclass(frozen=True)
class Fixture:
    name: str
    mode: str           # certificate mode of the headline comparison
    cost: str           # "fast" or "long"
    summary: str
    run: Callable[[], dict]


@dataclass(frozen=True)
class Report:
    name: str
    passed: bool
    seconds: float
    detail: dict


FIXTURES: dict[str, Fixture] = {}


def fixture(name: str, mode: str, cost: str = "fast", summary: str = ""):
    if mode not in MODE_DEPTH:
        raise ValueError(f"unknown mode {mode!r}")

    def register(fn):
        if name in FIXTURES:
            raise ValueError(f"duplicate fixture {name!r}")
        FIXTURES[name] = Fixture(name, mode, cost, summary, fn)
        return fn

    return register


def run_fixture(name: str) -> Report:
    fx = FIXTURES[name]
    t0 = time.perf_counter()
    try:
        detail = dict(fx.run())
        passed = bool(detail.pop("pass"))
    except Exception as exc:
        return Report(fx.name, False, time.perf_counter() - t0,
                      {"error": repr(exc)})
    return Report(fx.name, passed, time.perf_counter() - t0, detail)


def run_all(long: bool = False, names=None) -> list[Report]:
    if names is None:
        names = [n for n, fx in FIXTURES.items() if long or fx.cost == "fast"]
    return [run_fixture(n) for n in sorted(names)]


# --------------------------------------------------------------------------
# signed slotwise argument substitutions

@dataclass(frozen=True)
class OrbitElement:
    """A signed argument substitution: optionally reverse the slots, then
    apply one anharmonic map per slot.  Encodes the relation
    f(args) = sign * f(self.apply(args))."""

    sign: int
    flip: bool
    maps: tuple[Perm3, ...]

    def key(self):
        return (self.sign, self.flip, tuple(m.images for m in self.maps))

    def shape(self):
        return (self.flip, tuple(m.images for m in self.maps))

    def apply(self, args):
        out = tuple(anharmonic(m, a) for m, a in zip(self.maps, args))
        return tuple(reversed(out)) if self.flip else out

    def after(self, other: "OrbitElement") -> "OrbitElement":
        # self.after(other).apply == self.apply . other.apply
        outer = tuple(reversed(self.maps)) if other.flip else self.maps
        maps = tuple(g.then(f) for g, f in zip(outer, other.maps))
        return OrbitElement(self.sign * other.sign,
                            self.flip ^ other.flip, maps)


def _elem(sign, flip, *names):
    return OrbitElement(sign, flip, tuple(PERM_BY_NAME[n] for n in names))


def orbit_closure(generators) -> list[OrbitElement]:
    """Close a generator list under composition.  Raises if the closure
    would assign two different signs to one substitution."""
    width = len(generators[0].maps)
    start = _elem(1, False, *(["id"] * width))
    seen = {start.key(): start}
    frontier = [start]
    while frontier:
        new = []
        for e in frontier:
            for g in generators:
                c = g.after(e)
                if c.key() not in seen:
                    seen[c.key()] = c
                    new.append(c)
        frontier = new
    shapes = {}
    for e in seen.values():
        s = e.shape()
        if shapes.setdefault(s, e.sign) != e.sign:
            raise ValueError("closure assigns two signs to one substitution")
    return sorted(seen.values(), key=lambda e: e.key())


def weight4_generators(extended: bool = False) -> list[OrbitElement]:
    gens = [
        _elem(1, False, "(123)", "(132)"),   # paired three-cycle
        _elem(1, False, "(13)", "(13)"),     # both-slot inversion
        _elem(-1, True, "id", "id"),         # slot reversal
    ]
    if extended:
        gens.append(_elem(-1, False, "id", "(23)"))  # last-slot reflection
    return gens


def weight6_generators(extended: bool = False) -> list[OrbitElement]:
    gens = [
        _elem(-1, False, "(13)", "(13)", "(13)"),    # all-slot inversion
        _elem(1, True, "id", "id", "id"),            # slot reversal
        _elem(-1, False, "(23)", "(12)", "(23)"),    # first reflection type
        _elem(-1, False, "id", "(12)", "(123)"),     # second reflection type
    ]
    if extended:
        gens.append(_elem(-1, False, "id", "id", "(23)"))  # last-slot reflection
    return gens


def symmetry_orbit(weight: int, extended: bool = False) -> list[OrbitElement]:
    if weight == 4:
        return orbit_closure(weight4_generators(extended))
    if weight == 6:
        return orbit_closure(weight6_generators(extended))
    raise ValueError("only weights 4 and 6 carry frozen symmetry groups")


def orbit_relation(element: OrbitElement, weight: int) -> LinComb:
    """The combination that must vanish (mod lower depth) if `element` is a
    genuine argument symmetry at the given weight."""
    if weight == 4:
        args = (rf("x"), rf("y"))
        depth, n0 = 2, 2
    elif weight == 6:
        args = (rf("x"), rf("y"), rf("z"))
        depth, n0 = 3, 3
    else:
        raise ValueError("only weights 4 and 6 carry frozen symmetry groups")
    base = li(n0, (1,) * depth, args)
    return base + li(n0, (1,) * depth, element.apply(args), c=-element.sign)


def describe_element(e: OrbitElement) -> str:
    names = ("x", "y", "z")[: len(e.maps)]
    inner = ", ".join(format_ratfunc(a) for a in e.apply(tuple(rf(n) for n in names)))
    return f"{'+' if e.sign > 0 else '-'}[{inner}]"


# frozen closure contents, in the encoding above (maps applied before flip)
_WT4_MAP_PAIRS = (
    ("id", "id"), ("(123)", "(132)"), ("(132)", "(123)"),
    ("(12)", "(23)"), ("(23)", "(12)"), ("(13)", "(13)"),
)

_WT6_SMALL = (
    (1, ("id", "id", "id")),
    (-1, ("(23)", "(12)", "(23)")),
    (1, ("(123)", "(132)", "(123)")),
    (-1, ("(12)", "(23)", "(12)")),
    (1, ("(132)", "(123)", "(132)")),
    (-1, ("(13)", "(13)", "(13)")),
)


def _keyset(entries):
    out = set()
    for sign, flip, names in entries:
        out.add((sign, flip, tuple(PERM_BY_NAME[n].images for n in names)))
    return out


def expected_wt4_orbit() -> set:
    rows = [(1, False, pair) for pair in _WT4_MAP_PAIRS]
    rows += [(-1, True, pair) for pair in _WT4_MAP_PAIRS]
    return _keyset(rows)


def expected_wt6_small_orbit() -> set:
    rows = [(s, False, names) for s, names in _WT6_SMALL]
    rows += [(s, True, names) for s, names in _WT6_SMALL]
    return _keyset(rows)


# --------------------------------------------------------------------------
# five-point rotation

def pentagon_formula(y, z):
    """Coordinate change induced by rotating five marked points once."""
    one = ONE
    return (z / y, (one - z) / (one - y))


def pentagon_step(y, z):
    """The same change computed from first principles: rotate the standard
    five-point configuration and re-read it in the standard chart."""
    pts = (INF, y, rf("0"), z, ONE)
    s = pts[1:] + pts[:1]
    return (cross_ratio(s[1], s[2], s[4], s[0]),
            cross_ratio(s[3], s[2], s[4], s[0]))


def pentagon_orbit(y, z) -> list:
    out, cur = [], (y, z)
    for _ in range(5):
        cur = pentagon_formula(*cur)
        out.append(cur)
    return out


# --------------------------------------------------------------------------
# plain-text term lists

class TermListFormatError(ValueError):
    def __init__(self, reason: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.reason = reason
        self.line = line
        self.column = column


def _func_token(term) -> str:
    if isinstance(term, CorTerm):
        return "Cor"
    if isinstance(term, LiTerm):
        if term.n0 > 9 or any(i > 9 for i in term.indices):
            raise ValueError("term list tokens need single-digit indices")
        return f"Li{term.n0}s{''.join(str(i) for i in term.indices)}"
    raise ValueError(f"cannot export term of type {type(term).__name__}")


def _term_args(term):
    return term.points if isinstance(term, CorTerm) else term.args


def format_term_list(name: str, comb: LinComb) -> str:
    if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
        raise ValueError(f"invalid list name {name!r}")
    rows = []
    for term, coeff in comb.items():
        args = [format_ratfunc(a) for a in _term_args(term)]
        rows.append((_func_token(term), args, Fraction(coeff)))
    rows.sort(key=lambda r: (r[0], r[1]))
    if not rows:
        return f"{name} = [];\n"
    body = ",\n".join(f"  [{c}, {f}, [{', '.join(a)}]]" for f, a, c in rows)
    return f"{name} = [\n{body}\n];\n"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, reason: str):
        raise TermListFormatError(reason, self.line, self.col)

    def _advance(self, n: int):
        for ch in self.text[self.pos:self.pos + n]:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.pos += n

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self._advance(1)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {got}")
        self._advance(1)

    def match(self, ch: str) -> bool:
        self.skip_ws()
        if self.peek() == ch:
            self._advance(1)
            return True
        return False

    def token(self, pattern: str, what: str) -> str:
        self.skip_ws()
        m = re.compile(pattern).match(self.text, self.pos)
        if not m:
            self.error(f"expected {what}")
        self._advance(m.end() - m.start())
        return m.group()

    def until_delim(self) -> str:
        # argument text: read up to a top-level ',' or ']' (parens nest)
        self.skip_ws()
        start, spos = self.pos, (self.line, self.col)
        depth = 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch in ",]" and depth == 0:
                break
            elif ch == "[":
                self.error("unexpected '[' inside an argument")
            self._advance(1)
        text = self.text[start:self.pos].strip()
        if not text:
            self.line, self.col = spos
            self.error("empty argument")
        return text


_FUNC_RE = re.compile(r"Li(\d)s(\d+)|Cor")


def parse_term_list(text: str) -> tuple[str, LinComb]:
    sc = _Scanner(text)
    name = sc.token(r"[A-Za-z_][A-Za-z0-9_]*", "a list name")
    sc.expect("=")
    sc.expect("[")
    comb = LinComb()
    if not sc.match("]"):
        while True:
            sc.expect("[")
            coeff = Fraction(sc.token(r"-?\d+(/\d+)?", "a rational coefficient"))
            sc.expect(",")
            func = sc.token(r"[A-Za-z][A-Za-z0-9]*", "a function token")
            m = _FUNC_RE.fullmatch(func)
            if not m:
                sc.error(f"unknown function token {func!r}")
            sc.expect(",")
            sc.expect("[")
            args = []
            while True:
                raw = sc.until_delim()
                try:
                    args.append(rf(raw))
                except Exception as exc:
                    sc.error(f"bad argument {raw!r}: {exc}")
                if not sc.match(","):
                    break
            sc.expect("]")
            sc.expect("]")
            if func == "Cor":
                comb += cor(tuple(args), c=coeff)
            else:
                n0 = int(m.group(1))
                indices = tuple(int(d) for d in m.group(2))
                if len(args) != len(indices):
                    sc.error(f"{func} expects {len(indices)} arguments, got {len(args)}")
                comb += li(n0, indices, tuple(args), c=coeff)
            if not sc.match(","):
                break
        sc.expect("]")
    sc.expect(";")
    sc.skip_ws()
    if sc.pos != len(sc.text):
        sc.error("trailing text after ';'")
    return name, comb


def export_term_list(path, name: str, comb: LinComb) -> None:
    with open(path, "w") as fh:
        fh.write(format_term_list(name, comb))


def import_term_list(path) -> tuple[str, LinComb]:
    with open(path) as fh:
        return parse_term_list(fh.read())


# --------------------------------------------------------------------------
# catalogued identities

def identity_comb(name: str) -> LinComb:
    """Left side minus right side of a catalogued reduction; vanishes under
    the exact certificate."""
    blocks = IDENTITY_TABLES[name]
    out = LinComb()
    for bi, (n0, indices, rows) in enumerate(blocks):
        side = 1 if bi == 0 else -1
        for coeff, args in rows:
            out += li(n0, indices, tuple(rf(a) for a in args),
                      c=side * Fraction(coeff))
    return out


# --------------------------------------------------------------------------
# stable-curve cases

@dataclass(frozen=True)
class CurveCase:
    """One degeneration: the curve, the collision policy, and the expected
    surviving top-depth terms.  Survivor rows are (coeff, label, ...) where
    each label is a 4-point cross-ratio word and "1" is the literal value."""

    curve: str
    weight: int
    policy: object
    survivors: tuple


CURVE_CASES = {
    "wt4_revinv": CurveCase("17 u_p 246 u_q 35", 4, "none",
                            ((-1, "2q4p", "4q6p"), (-1, "p4q6", "p2q4"))),
    "wt4_sh11": CurveCase("134 u_p 2567", 4, "none",
                          ((1, "134p", "p567"), (1, "p567", "134p"))),
    "wt4_nielsen": CurveCase("16 u_p 35 u_q 247", 4, "none",
                             ((1, "1", "35pq"),)),
    "wt4_fs1": CurveCase("13 u_p 456 u_q 27", 4, "one_one",
                         ((-1, "p56q", "pq45"), (1, "pq56", "p45q"))),
    "wt4_fs1_alt": CurveCase("13 u_p 567 u_q 24", 4, "one_one",
                             ((1, "qp67", "q56p"), (-1, "pq67", "p56q"))),
    "wt4_fourterm": CurveCase("13 u_p 467 u_q 25", 4, "one_one",
                              ((-1, "qp47", "4q67"), (1, "qp67", "4q6p"),
                               (-1, "pq47", "4q67"), (1, "pq67", "p46q"))),
    "wt6_revinv": CurveCase("19 u_p 2468 u_q 357", 6, "none",
                            ((1, "2q4p", "4q6p", "6q8p"),
                             (1, "p6q8", "p4q6", "p2q4"))),
    "wt6_sh21": CurveCase("1348 u_p 25679", 6, "none",
                          ((-1, "134p", "p569", "67p9"),
                           (-1, "p569", "134p", "67p9"),
                           (-1, "p569", "67p9", "134p"))),
    "wt6_N110": CurveCase("168 u_p 35 u_q 2479", 6, "none",
                          ((-1, "1", "1", "pq35"),)),
    "wt6_ds1": CurveCase("(138_p, 24_q, 79_r) u 56", 6, "two_ones",
                         ((-1, "1", "q5pr", "6rp5"), (-1, "qp6r", "q56p", "1"),
                          (-1, "qp6r", "1", "q56p"), (-1, "q5pr", "1", "6rp5"),
                          (-1, "q5pr", "6rp5", "1"), (-1, "1", "qp6r", "q56p"),
                          (1, "pq6r", "p56q", "1"), (1, "pq6r", "1", "p56q"),
                          (1, "1", "pq5r", "56pr"))),
    "wt6_ds2": CurveCase("135 u_p 279 u_q 468", 6, ("two_ones", "one_var"),
                         ((1, "27q9", "2pq7", "1"), (-1, "p279", "pq72", "1"))),
    "wt6_fs1": CurveCase("29 u_p 4567 u_q 138", 6, "one_one",
                         ((1, "q56p", "qp45", "67qp"),
                          (1, "q56p", "67qp", "qp45"),
                          (1, "q67p", "qp56", "q45p"))),
    "wt6_fourterm": CurveCase("13 u_p 4678 u_q 259", 6, "one_one",
                              ((1, "p78q", "pq47", "4q67"),
                               (-1, "p78q", "pq67", "p46q"),
                               (1, "pq78", "p47q", "q674"),
                               (-1, "pq78", "p67q", "p4q6"))),
    "wt6_fs2": CurveCase("29 u_p 3467 u_q 158", 6, "one_one",
                         ((-1, "q34p", "4q6p", "67qp"),
                          (-1, "q34p", "47qp", "4q67"),
                          (1, "q36p", "4q63", "67qp"),
                          (1, "q36p", "67qp", "4q63"),
                          (1, "q46p", "qp34", "67qp"),
                          (1, "q46p", "67qp", "qp34"),
                          (1, "q47p", "qp34", "q674"),
                          (1, "q47p", "q674", "qp34"),
                          (-1, "q67p", "qp36", "34q6"))),
    "wt6_fs3": CurveCase("29 u_p 3457 u_q 168", 6, "one_one",
                         ((-1, "4pq3", "47qp", "45q7"),
                          (-1, "5pq4", "34qp", "57qp"),
                          (-1, "5pq4", "57qp", "34qp"),
                          (-1, "5pq4", "34qp", "5q7p"),
                          (-1, "5pq4", "5q7p", "34qp"),
                          (1, "7pq4", "34qp", "47q5"),
                          (1, "7pq4", "47q5", "34qp"))),
}


def curve_top(case: CurveCase):
    """Degenerate the functional-equation combination onto the case's curve
    and keep the top-depth part."""
    k = case.weight // 2
    curve = parse_curve(case.curve)
    points = tuple(str(i) for i in range(1, 2 * k + 4))
    comb = degenerate(q_tilde(k, points), curve, policy=case.policy)
    return curve, comb.filter(lambda t: len(t.indices) == k)


def curve_expected(case: CurveCase, curve) -> LinComb:
    """Materialise the frozen survivor rows on the same curve."""
    k = case.weight // 2
    out = LinComb()
    for coeff, *labels in case.survivors:
        if "1" in labels:
            args = tuple(ONE if s == "1" else cross_value(CrossArg.of(tuple(s)))
                         for s in labels)
            out += li(k, (1,) * k, args, c=coeff)
        else:
            args = tuple(CrossArg.of(tuple(s)) for s in labels)
            out += degenerate(label_li(k, (1,) * k, args, coeff=coeff), curve)
    return out


def _curve_detail(name: str, mode: str) -> dict:
    case = CURVE_CASES[name]
    curve, top = curve_top(case)
    expected = curve_expected(case, curve)
    match = (top - expected).is_zero()
    cert = certify(top, mode)
    return {
        "pass": match and cert["pass"],
        "survivors": len(top),
        "survivors_match": match,
        "top_reduces": cert["pass"],
    }


# --------------------------------------------------------------------------
# small builders shared by the weight-4 fixtures

def _pair(a, b, c=1):
    a = rf(a) if isinstance(a, str) else a
    b = rf(b) if isinstance(b, str) else b
    return li(2, (1, 1), (a, b), c=c)


def _li4(entries) -> LinComb:
    """Signed classical weight-4 terms; a positive coefficient adds one."""
    out = LinComb()
    for coeff, arg in entries:
        out += li(3, (1,), (rf(arg),), c=-Fraction(coeff))
    return out


def _four_slot(x, y) -> LinComb:
    """The four-term depth-two bundle whose vanishing mod depth 1 encodes
    the last-slot reflection at weight 4."""
    x = rf(x) if isinstance(x, str) else x
    y = rf(y) if isinstance(y, str) else y
    one = ONE
    return (_pair(x, y) + _pair(x, one - y)
            + _pair(x * y, (one - x) / (x * (y - one)))
            + _pair(x * y, x * (y - one) / (one - x)))


def five_term_sum(labels, second, coeff=1) -> LinComb:
    """Alternating sum over one-point omissions from five labels in the
    first slot, against a fixed second slot."""
    out = LinComb()
    for i in range(5):
        rest = tuple(labels[j] for j in range(5) if j != i)
        out += li(2, (1, 1), (cross_value(CrossArg.of(rest)), second),
                  c=coeff * (-1) ** i)
    return out


def six_point_five_term(points) -> LinComb:
    """Five-term bundle attached to an ordered six-point configuration: the
    sixth and fourth points only enter through the fixed second slot."""
    first = (points[0], points[1], points[2], points[5], points[4])
    second = cross_value(CrossArg.of((points[2], points[3], points[4], points[5])))
    return five_term_sum(first, second)


# --------------------------------------------------------------------------
# weight-4 curve fixtures

@fixture("wt4_revinv", "mod-depth-1",
         summary="7-point chain forcing the reversal+inversion reduction")
def _wt4_revinv():
    detail = _curve_detail("wt4_revinv", "mod-depth-1")
    ident = (_pair("A", "B") + _pair("B^-1", "A^-1")
             - _li4([(-1, "A"), (1, "B")]))
    detail["identity_exact"] = certify(ident, "exact")["pass"]
    detail["pass"] = detail["pass"] and detail["identity_exact"]
    return detail


@fixture("wt4_sh11", "mod-depth-1",
         summary="7-point chain forcing the swap reduction, plus the "
                 "inversion corollary")
def _wt4_sh11():
    detail = _curve_detail("wt4_sh11", "mod-depth-1")
    swap = _pair("A", "B") + _pair("B", "A") - _li4([(-3, "A*B")])
    inv = (_pair("A", "B") - _pair("A^-1", "B^-1")
           - _li4([(-1, "A"), (1, "B"), (-3, "A*B")]))
    detail["identity_exact"] = certify(swap, "exact")["pass"]
    detail["corollary_exact"] = certify(inv, "exact")["pass"]
    detail["pass"] = all((detail["pass"], detail["identity_exact"],
                          detail["corollary_exact"]))
    return detail


@fixture("wt4_nielsen", "mod-depth-1",
         summary="7-point chain reducing the unit-first-slot pair to "
                 "classical terms")
def _wt4_nielsen():
    detail = _curve_detail("wt4_nielsen", "mod-depth-1")
    first = _pair("1", "A") - _li4([(-1, "A"), (1, "(A-1)/A"), (1, "1-A")])
    second = _pair("A", "1") - _li4([(-2, "A"), (-1, "(A-1)/A"), (-1, "1-A")])
    detail["identity_exact"] = certify(first, "exact")["pass"]
    detail["corollary_exact"] = certify(second, "exact")["pass"]
    detail["pass"] = all((detail["pass"], detail["identity_exact"],
                          detail["corollary_exact"]))
    return detail


@fixture("wt4_fs1", "mod-depth-1",
         summary="7-point chain forcing the first-slot reflection reduction")
def _wt4_fs1():
    detail = _curve_detail("wt4_fs1", "mod-depth-1")
    ident = (_pair("A", "B") - _pair("1/(1-A)", "(B-1)/B")
             - _li4([(-1, "-A*(1-B)/(1-A)"), (-1, "-(1-A)*B/(1-B)"),
                     (-2, "A*B"), (-1, "1-A"), (-1, "-(1-A)/A"),
                     (1, "B"), (1, "1-B")]))
    detail["identity_exact"] = certify(ident, "exact")["pass"]
    detail["pass"] = detail["pass"] and detail["identity_exact"]
    return detail


@fixture("wt4_fs1_alt", "mod-depth-1",
         summary="companion chain for the other reflection spelling")
def _wt4_fs1_alt():
    detail = _curve_detail("wt4_fs1_alt", "mod-depth-1")
    ident = (_pair("A", "B") - _pair("A/(A-1)", "1-B")
             - _li4([(1, "-A*(1-B)/(1-A)"), (1, "-(1-A)*B/(1-B)"),
                     (-1, "A*B"), (-1, "A"), (-1, "1-A"),
                     (-1, "-(1-A)/A"), (1, "-(1-B)/B")]))
    detail["identity_exact"] = certify(ident, "exact")["pass"]
    detail["pass"] = detail["pass"] and detail["identity_exact"]
    return detail


@fixture("wt4_fourterm", "mod-depth-1",
         summary="7-point chain producing the four-term depth-two bundle")
def _wt4_fourterm():
    detail = _curve_detail("wt4_fourterm", "mod-depth-1")
    ident = (_pair("1/A", "B") + _pair("1/A", "1-B")
             + _pair("B/A", "(1-A)/(1-B)") + _pair("B/A", "(1-B)/(1-A)")
             - _li4([(2, "(1-A)*A/((1-B)*B)"), (1, "A*(1-B)/((1-A)*B)"),
                     (-2, "-(1-A)/(A-B)"), (-2, "(1-B)/(A-B)"),
                     (-1, "(1-A)/(1-B)"), (2, "A/(A-B)"), (-2, "-(A-B)/B"),
                     (-2, "A/(1-B)"), (1, "(1-A)/B"), (1, "A/B"),
                     (2, "A"), (1, "-(1-A)/A"), (2, "-(1-B)/B")]))
    detail["identity_exact"] = certify(ident, "exact")["pass"]
    detail["bundle_reduces"] = certify(_four_slot("x", "y"), "mod-depth-1")["pass"]
    detail["pass"] = all((detail["pass"], detail["identity_exact"],
                          detail["bundle_reduces"]))
    return detail


@fixture("wt4_zagier", "exact",
         summary="both two-term weight-4 relations with explicit classical "
                 "right sides, and their derivation from the four-term bundle")
def _wt4_zagier():
    reflection = (_pair("x", "y") + _pair("x", "1-y")
                  - _li4([("-1/2", "-x^2*(1-y)*y/(1-x)"),
                          ("1/2", "-(1-x)*(1-y)/y"), ("1/2", "-(1-x)*y/(1-y)"),
                          (1, "-x*(1-y)/(1-x)"), (1, "-x*y/(1-x)"),
                          (-1, "1-x"), (-2, "x")]))
    inversion = (_pair("x", "y") + _pair("x", "y^-1")
                 - _li4([("1/2", "x*(1-y)^2/((1-x)^2*y)"),
                         (2, "(1-x)/(1-y)"), (-2, "-x*(1-y)/(1-x)"),
                         (-2, "x*(1-y)/((1-x)*y)"), (2, "-(1-x)*y/(1-y)"),
                         (-2, "-(1-x)/x"), (2, "-(1-y)/y"),
                         ("-3/2", "x/y"), ("-3/2", "x*y"),
                         (-1, "x"), (-2, "1-x"), (2, "1-y")]))
    combo1 = (_four_slot("x", "1-y") + _four_slot("x/(x-1)", "y")
              - _pair("x", "1-y", 2) - _pair("x", "y", 2))
    combo2 = (_four_slot("1-x", "y/(y-1)") + _four_slot("(x-1)/x", "1/(1-y)")
              - _pair("x", "y", 2) - _pair("x", "y^-1", 2))
    detail = {
        "reflection_exact": certify(reflection, "exact")["pass"],
        "inversion_exact": certify(inversion, "exact")["pass"],
        "reflection_from_bundle": certify(combo1, "mod-depth-1")["pass"],
        "inversion_from_bundle": certify(combo2, "mod-depth-1")["pass"],
    }
    detail["pass"] = all(detail.values())
    return detail


@fixture("wt4_gangl_exotic", "mod-depth-1",
         summary="5+2 collision equals a difference of two anchored "
                 "five-term bundles")
def _wt4_gangl_exotic():
    curve = parse_curve("12346 u_p 57")
    comb = degenerate(q_tilde(2, tuple(str(i) for i in range(1, 8))),
                      curve, policy="one_one")
    top = comb.filter(lambda t: len(t.indices) == 2)
    expected = (six_point_five_term(("3", "4", "2", "1", "6", "p"))
                - six_point_five_term(("1", "2", "3", "4", "p", "6")))
    cert = certify(top - expected, "mod-depth-1")
    return {
        "pass": cert["pass"] and len(top) == 10,
        "survivors": len(top),
        "difference_reduces": cert["pass"],
    }


@fixture("wt4_gangl_chain", "mod-depth-1",
         summary="symmetries of the anchored five-term bundle, its "
                 "vanishing, and the free-slot five-term corollary")
def _wt4_gangl_chain():
    def at(*order):
        return six_point_five_term(tuple(f"x{i}" for i in order))

    base = at(1, 2, 3, 4, 5, 6)
    checks = {
        "swap12_antisym": base + at(2, 1, 3, 4, 5, 6),
        "swap36_sym": base - at(1, 2, 6, 4, 5, 3),
        "swap35_sym": base - at(1, 2, 5, 4, 3, 6),
        "swap56_sym": base - at(1, 2, 3, 4, 6, 5),
        "double_swap_sym": base - at(4, 3, 2, 1, 5, 6),
        "vanishes": base,
    }
    detail = {k: certify(v, "mod-depth-1")["pass"] for k, v in checks.items()}
    free = five_term_sum(tuple(f"w{i}" for i in range(5)), rf("y"))
    detail["free_slot_five_term"] = certify(free, "mod-depth-1")["pass"]
    detail["pass"] = all(detail.values())
    return detail


# --------------------------------------------------------------------------
# weight-6 curve fixtures

def _triple(a, b, c3, coeff=1):
    vals = tuple(rf(s) if isinstance(s, str) else s for s in (a, b, c3))
    return li(3, (1, 1, 1), vals, c=coeff)


@fixture("wt6_revinv", "mod-depth-2",
         summary="9-point chain forcing the reversal+inversion relation")
def _wt6_revinv():
    detail = _curve_detail("wt6_revinv", "mod-depth-2")
    rel = _triple("x", "y", "z") + _triple("1/z", "1/y", "1/x")
    detail["relation_reduces"] = certify(rel, "mod-depth-2")["pass"]
    detail["pass"] = detail["pass"] and detail["relation_reduces"]
    return detail


@fixture("wt6_sh21", "mod-depth-2",
         summary="9-point 2-chain forcing the one-into-two shuffle relation")
def _wt6_sh21():
    detail = _curve_detail("wt6_sh21", "mod-depth-2")
    rel = (_triple("x", "y", "z") + _triple("y", "x", "z")
           + _triple("y", "z", "x"))
    detail["relation_reduces"] = certify(rel, "mod-depth-2")["pass"]
    detail["pass"] = detail["pass"] and detail["relation_reduces"]
    return detail


@fixture("wt6_N110", "mod-depth-2",
         summary="9-point chain leaving a single double-unit term")
def _wt6_N110():
    detail = _curve_detail("wt6_N110", "mod-depth-2")
    rel = _triple("1", "1", "x")
    detail["relation_reduces"] = certify(rel, "mod-depth-2")["pass"]
    detail["pass"] = detail["pass"] and detail["relation_reduces"]
    return detail


@fixture("wt6_ds1", "mod-depth-2",
         summary="star curve with two colliding pairs; unit-slot two-term "
                 "symmetry")
def _wt6_ds1():
    detail = _curve_detail("wt6_ds1", "mod-depth-2")
    a, b, one = rf("a"), rf("b"), ONE
    rel = (_triple(one, a, b)
           - _triple(one, a * (one - b) / (one - a * b),
                     (a * b - one) / (a * b)))
    detail["relation_reduces"] = certify(rel, "mod-depth-2")["pass"]
    detail["pass"] = detail["pass"] and detail["relation_reduces"]
    return detail


@fixture("wt6_ds2", "mod-depth-2",
         summary="3-chain whose survivors encode the second unit-slot "
                 "two-term symmetry")
def _wt6_ds2():
    detail = _curve_detail("wt6_ds2", "mod-depth-2")
    a, b, one = rf("a"), rf("b"), ONE
    rel = (_triple(one, a, b)
           + _triple(one, a, (one - a * b) / (a * (one - b))))
    detail["relation_reduces"] = certify(rel, "mod-depth-2")["pass"]
    detail["pass"] = detail["pass"] and detail["relation_reduces"]
    return detail


@fixture("wt6_fs1", "mod-depth-2",
         summary="3-chain forcing the outer-slot reflection relation")
def _wt6_fs1():
    detail = _curve_detail("wt6_fs1", "mod-depth-2")
    rel = (_triple("x", "y", "z")
           + _triple("1-x", "y/(y-1)", "1-z"))
    detail["relation_reduces"] = certify(rel, "mod-depth-2")["pass"]
    detail["pass"] = detail["pass"] and detail["relation_reduces"]
    return detail


@fixture("wt6_fourterm", "mod-depth-2",
         summary="3-chain producing the four-term middle-slot relation")
def _wt6_fourterm():
    detail = _curve_detail("wt6_fourterm", "mod-depth-2")
    rel = (_triple("A", "1/B", "1-C") + _triple("A", "1/B", "C")
           - _triple("A", "C/B", "(1-B)/(1-C)")
           - _triple("A", "C/B", "(1-C)/(1-B)"))
    detail["relation_reduces"] = certify(rel, "mod-depth-2")["pass"]
    detail["pass"] = detail["pass"] and detail["relation_reduces"]
    return detail


@fixture("wt6_fs2", "mod-depth-2",
         summary="3-chain forcing the doubled middle/last reflection "
                 "relation")
def _wt6_fs2():
    detail = _curve_detail("wt6_fs2", "mod-depth-2")
    rel = (_triple("A", "B", "C", 2)
           + _triple("A", "B/(B-1)", "1/(1-C)", 2))
    detail["relation_reduces"] = certify(rel, "mod-depth-2")["pass"]
    detail["pass"] = detail["pass"] and detail["relation_reduces"]
    return detail


@fixture("wt6_fs3", "mod-depth-2", cost="long",
         summary="3-chain whose survivors combine reflection and last-slot "
                 "inversion on concrete cross-ratios")
def _wt6_fs3():
    detail = _curve_detail("wt6_fs3", "mod-depth-2")
    va, vb, vc = (cross_value(CrossArg.of(tuple(s)))
                  for s in ("57pq", "45p3", "3q5p"))
    rel = _triple(va, vb, vc) + _triple(va, vb, ONE / vc)
    detail["relation_reduces"] = certify(rel, "mod-depth-2")["pass"]
    detail["pass"] = detail["pass"] and detail["relation_reduces"]
    return detail


@fixture("wt6_zagier", "mod-depth-2",
         summary="two-term last-slot relations at weight 6 and the "
                 "pentagon-pair combination behind them")
def _wt6_zagier():
    x, y, z, one = rf("x"), rf("y"), rf("z"), ONE
    reflection = _triple(x, y, z) + _triple(x, y, one - z)
    inversion = _triple(x, y, z) + _triple(x, y, one / z)
    u, v = pentagon_formula(y, z)
    paired = (_triple(x, one / y, z) + _triple(x, one / y, one - z)
              + _triple(x, one / u, v) + _triple(x, one / u, one - v))
    detail = {
        "reflection_reduces": certify(reflection, "mod-depth-2")["pass"],
        "inversion_reduces": certify(inversion, "mod-depth-2")["pass"],
        "pentagon_pair_reduces": certify(paired, "mod-depth-2")["pass"],
    }
    detail["pass"] = all(detail.values())
    return detail


@fixture("wt6_unit_arg", "mod-depth-2",
         summary="a unit in any slot kills the depth-three part")
def _wt6_unit_arg():
    x, y, one = rf("x"), rf("y"), ONE
    detail = {
        "unit_first": certify(_triple(one, x, y), "mod-depth-2")["pass"],
        "unit_middle": certify(_triple(x, one, y), "mod-depth-2")["pass"],
        "unit_last": certify(_triple(x, y, one), "mod-depth-2")["pass"],
    }
    detail["pass"] = all(detail.values())
    return detail


# --------------------------------------------------------------------------
# symmetry-group fixtures

@fixture("wt4_orbit", "mod-depth-1",
         summary="weight-4 substitution group: order 12, known contents, "
                 "order 72 with the reflection added, sign law, and "
                 "certificates for every base relation")
def _wt4_orbit():
    small = symmetry_orbit(4)
    extended = symmetry_orbit(4, extended=True)
    sign_law = all(
        e.sign == (-1 if e.flip else 1) * e.maps[0].sign * e.maps[1].sign
        for e in extended)
    relations = all(
        certify(orbit_relation(e, 4), "mod-depth-1")["pass"] for e in small)
    sampled = random.Random(0).sample(extended, 6)
    relations_ext = all(
        certify(orbit_relation(e, 4), "mod-depth-1")["pass"] for e in sampled)
    detail = {
        "small_size": len(small),
        "small_match": {e.key() for e in small} == expected_wt4_orbit(),
        "extended_size": len(extended),
        "sign_law": sign_law,
        "base_relations": relations,
        "sampled_relations": relations_ext,
    }
    detail["pass"] = all((
        detail["small_size"] == 12, detail["small_match"],
        detail["extended_size"] == 72, sign_law, relations, relations_ext))
    return detail


def _images(*names):
    return tuple(PERM_BY_NAME[n].images for n in names)


@fixture("wt6_orbit", "mod-depth-2",
         summary="weight-6 substitution group: orders 12, 216 and 432, "
                 "parity constraints, derived middle-slot maps, and sampled "
                 "relation certificates")
def _wt6_orbit():
    small = orbit_closure(weight6_generators()[:3])
    full = symmetry_orbit(6)
    extended = symmetry_orbit(6, extended=True)
    parity_full = all(
        e.sign == e.maps[0].sign * e.maps[1].sign * e.maps[2].sign
        and e.maps[0].sign == e.maps[2].sign
        for e in full)
    parity_ext = all(
        e.sign == e.maps[0].sign * e.maps[1].sign * e.maps[2].sign
        for e in extended)
    keys = {e.key() for e in full}
    derived = {
        "middle_flip": (-1, False, _images("id", "(12)", "id")),
        "middle_reflect": (-1, False, _images("id", "(23)", "id")),
        "middle_invert": (-1, False, _images("id", "(13)", "id")),
        "last_cycle": (1, False, _images("id", "id", "(123)")),
    }
    membership = {k: v in keys for k, v in derived.items()}
    rng = random.Random(1)
    sampled = rng.sample(full, 5) + rng.sample(
        [e for e in extended if e.key() not in keys], 3)
    relations = all(
        certify(orbit_relation(e, 6), "mod-depth-2")["pass"] for e in sampled)
    detail = {
        "small_size": len(small),
        "small_match": {e.key() for e in small} == expected_wt6_small_orbit(),
        "full_size": len(full),
        "extended_size": len(extended),
        "parity_full": parity_full,
        "parity_extended": parity_ext,
        "derived_maps": membership,
        "sampled_relations": relations,
    }
    detail["pass"] = all((
        detail["small_size"] == 12, detail["small_match"],
        detail["full_size"] == 216, detail["extended_size"] == 432,
        parity_full, parity_ext, all(membership.values()), relations))
    return detail


@fixture("pentagon", "exact",
         summary="rotating five points matches the closed-form coordinate "
                 "change, which has order exactly five")
def _pentagon():
    y, z = rf("y"), rf("z")
    matches = pentagon_step(y, z) == pentagon_formula(y, z)
    orbit = pentagon_orbit(y, z)
    order5 = orbit[-1] == (y, z) and all(p != (y, z) for p in orbit[:-1])
    return {"pass": matches and order5,
            "rotation_matches_formula": matches,
            "order_five": order5}


# --------------------------------------------------------------------------
# catalogued full reductions

def _identity_fixture(name: str, table: str, cost: str = "fast",
                      required_factors: tuple = ()):
    summary = f"catalogued reduction '{table}' vanishes under the exact certificate"

    @fixture(name, "exact", cost, summary)
    def _run():
        comb = identity_comb(table)
        cert = certify(comb, "exact")
        detail = {
            "terms": len(comb),
            "n_words": cert["n_words"],
            "pass": cert["pass"],
        }
        if required_factors:
            leaves = cert["basis"].leaf_polys()
            found = {}
            for text in required_factors:
                p = parse_poly(text)
                found[text] = any(q == p or q == p.scale(-1) for q in leaves)
            detail["required_factors"] = found
            detail["pass"] = detail["pass"] and all(found.values())
        return detail

    return _run


for _fixture_name, _table in (
    ("wt6_revinv_full", "revinv"),
    ("wt6_rev_full", "rev"),
    ("wt6_inv_full", "inv"),
    ("wt6_sh21_full", "sh21"),
    ("wt6_three_full", "three"),
    ("wt6_N110_full", "nielsen_11a"),
    ("wt6_onevar_full", "onevar"),
    ("wt6_ds1_full", "degsym1"),
    ("wt6_ds2_full", "degsym2"),
    ("wt6_r1xy_full", "one_a_b"),
    ("wt6_a1b_full", "a_one_b"),
):
    _identity_fixture(_fixture_name, _table)

_identity_fixture("wt6_fs1_full", "fullsym1", cost="long",
                  required_factors=("1-A-C+A*B*C",))
_identity_fixture("wt6_fourterm_full", "fourterm", cost="long",
                  required_factors=("A+B-A*B-A*C", "A-A*B-A*C+B*C"))
_identity_fixture("wt6_fs2_full", "fullsym2", cost="long",
                  required_factors=("1-A*B-C+B*C", "1-C+B*C-A*B*C",
                                    "1-C+B*C^2-A*B*C^2-B^2*C^2+A*B^2*C^2"))
