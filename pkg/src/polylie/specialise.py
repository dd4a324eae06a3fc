"""Specialisation homomorphism and degeneration to stable boundary curves.

A point configuration on the line degenerates by letting groups of marked
points collide.  The result is a tree of projective lines (a stable curve):
each group lives on its own component, attached to the main component at a
node.  Cross-ratios of four marked points survive such a limit with a well
defined value: find a component on which the four points have at least three
distinct images (marked points map to themselves, everything beyond a node
maps to the node), then read the value off those images.  Four distinct
images give an honest cross-ratio; exactly three force the value 0, 1 or
infinity depending on which pair collapsed.

The analytic counterpart parametrises each colliding group as
x_i -> x_node + t * x_i with one parameter per node and applies the
valuation-based specialisation map to correlator argument tuples: rescale the
tuple by the minimal valuation power and keep the leading coefficients.  Both
routes are implemented here; fixtures assert they agree term by term.

Terms fed to the degenerator keep their arguments as tuples of point labels
(products of such tuples are allowed), so the combinatorial limit rule can
act on labels; materialising a labelled term turns each argument into the
actual rational-function cross-ratio.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .field import (
    INF,
    RatFunc,
    is_inf,
    reduce_fraction,
    register_var,
    rf,
    rfvar,
    valuation,
)
from .projective import pdiff
from .terms import CorTerm, LiTerm, LinComb, ii_to_cor, li_to_ii, normalize_degenerate

__all__ = [
    "SpecContext",
    "spec_value",
    "spec_tuple",
    "spec_cor",
    "subst",
    "label_var",
    "Component",
    "StableCurve",
    "parse_curve",
    "curve_limit_cross_ratio",
    "CrossArg",
    "LabelLi",
    "cross_value",
    "materialise",
    "degenerate",
    "LimitPlan",
    "analytic_limit",
    "analytic_check",
]


# --------------------------------------------------------------------------
# the valuation-based specialisation map


@dataclass(frozen=True)
class SpecContext:
    """Direction of a one-parameter limit: var -> 0, or var -> infinity
    (realised by substituting var -> 1/var and running the to-zero rule)."""

    var: str
    to_infinity: bool = False


def subst(f: RatFunc, mapping: dict) -> RatFunc:
    """Substitute rational functions for variables (by name)."""
    num = f.num.eval_rf(mapping)
    den = f.den.eval_rf(mapping)
    if den.is_zero():
        raise ZeroDivisionError("substitution sent a denominator to zero")
    return num / den


def spec_value(f: RatFunc, var: str):
    """Valuation and leading coefficient of f at var = 0.

    Returns (m, lead) with f = lead * var^m * (1 + O(var)); the zero function
    reports (inf, 0).
    """
    if f.is_zero():
        return math.inf, rf(0)
    vi = register_var(var)
    a = f.num.low_degree_in(vi)
    b = f.den.low_degree_in(vi)
    n0 = f.num.shift_down(vi, a).coeff_in(vi, 0)
    d0 = f.den.shift_down(vi, b).coeff_in(vi, 0)
    return a - b, reduce_fraction(n0, d0)


def spec_tuple(points, ctx: SpecContext) -> tuple:
    """Specialise a correlator argument tuple: rescale by the minimal
    valuation power, keep leading coefficients, zero the rest."""
    pts = list(points)
    if all(p.is_zero() for p in pts):
        raise ValueError("cannot specialise an identically zero tuple")
    if ctx.to_infinity:
        invmap = {ctx.var: rfvar(ctx.var).inv()}
        pts = [subst(p, invmap) for p in pts]
    vals = [spec_value(p, ctx.var) for p in pts]
    m = min(v for v, _ in vals)
    return tuple(lead if v == m else rf(0) for v, lead in vals)


def spec_cor(t: CorTerm, ctx: SpecContext) -> LinComb:
    """Specialise one correlator term; dead configurations vanish."""
    return LinComb.term(CorTerm.make(spec_tuple(t.points, ctx)))


# --------------------------------------------------------------------------
# stable curves


def label_var(label: str) -> RatFunc:
    return rfvar("x" + label)


@dataclass(frozen=True)
class Component:
    marked: tuple
    nodes: tuple


@dataclass(frozen=True)
class StableCurve:
    """A one-level tree of lines: a root component plus leaf components,
    each leaf attached to the root at a named node.  Leaves hold the point
    groups that collide; on a leaf the attachment node sits at infinity."""

    components: tuple
    root: int
    node_order: tuple
    text: str

    def __post_init__(self):
        seen = set()
        for c in self.components:
            if len(c.marked) + len(c.nodes) < 3:
                raise ValueError(f"unstable component in {self.text!r}")
            for m in c.marked:
                if m in seen:
                    raise ValueError(f"label {m} appears twice in {self.text!r}")
                seen.add(m)

    @property
    def labels(self) -> tuple:
        out = []
        for c in self.components:
            out.extend(c.marked)
        return tuple(sorted(out))

    def home(self, label: str) -> int:
        for i, c in enumerate(self.components):
            if label in c.marked:
                return i
        raise KeyError(f"label {label} not on curve {self.text!r}")

    def image(self, comp: int, label: str):
        """Limiting position of a marked point or node on one component."""
        c = self.components[comp]
        if label in c.marked:
            return label_var(label)
        if comp == self.root:
            if label in c.nodes:
                return label_var(label)
            leaf = self.components[self.home(label)]
            return label_var(leaf.nodes[0])
        # on a leaf everything else lies beyond the single attachment node
        return INF

    def leaf_of_node(self, node: str) -> int:
        for i, c in enumerate(self.components):
            if i != self.root and node in c.nodes:
                return i
        raise KeyError(node)


_CHAIN_RE = re.compile(
    r"^\s*(\d+)\s*(?:∪|u)_(\w)\s*(\d+)\s*(?:(?:∪|u)_(\w)\s*(\d+))?\s*$"
)
_STAR_RE = re.compile(
    r"^\s*\(\s*(\d+)_(\w)\s*,\s*(\d+)_(\w)\s*,\s*(\d+)_(\w)\s*\)\s*(?:∪|u)\s*(\d+)\s*$"
)


def parse_curve(text: str) -> StableCurve:
    """Parse chain (`A ∪_p B` or `A ∪_p B ∪_q C`) or star
    (`(A_p, B_q, C_r) ∪ D`) notation; components are digit strings."""
    m = _STAR_RE.match(text)
    if m:
        a, p, b, q, c, r, d = m.groups()
        comps = (
            Component(tuple(a), (p,)),
            Component(tuple(b), (q,)),
            Component(tuple(c), (r,)),
            Component(tuple(d), (p, q, r)),
        )
        return StableCurve(comps, 3, (p, q, r), text)
    m = _CHAIN_RE.match(text)
    if m:
        a, p, b, q, c = m.groups()
        if q is None:
            comps = (Component(tuple(a), (p,)), Component(tuple(b), (p,)))
            return StableCurve(comps, 1, (p,), text)
        comps = (
            Component(tuple(a), (p,)),
            Component(tuple(b), (p, q)),
            Component(tuple(c), (q,)),
        )
        return StableCurve(comps, 1, (p, q), text)
    raise ValueError(f"cannot parse curve notation: {text!r}")


def _ratio_of_images(imgs):
    a, b, c, d = imgs
    num = pdiff(a, b) * pdiff(c, d)
    den = pdiff(b, c) * pdiff(d, a)
    if den.is_zero():
        if num.is_zero():
            raise ValueError("indeterminate cross-ratio limit")
        return INF
    return num / den


def curve_limit_cross_ratio(curve: StableCurve, labels):
    """Limit of the cross-ratio [labels] on the curve: a rational function,
    or 0 / 1 / infinity when images collapse."""
    if len(labels) != 4:
        raise ValueError("need exactly four labels")
    answers = []
    for i in range(len(curve.components)):
        imgs = [curve.image(i, l) for l in labels]
        distinct = []
        for im in imgs:
            if not any(
                (is_inf(im) and is_inf(o)) or (not is_inf(im) and not is_inf(o) and im == o)
                for o in distinct
            ):
                distinct.append(im)
        if len(distinct) >= 3:
            answers.append(_ratio_of_images(imgs))
    if not answers:
        raise AssertionError(f"no component sees 3 images of {labels}")
    first = answers[0]
    for other in answers[1:]:
        same = (is_inf(first) and is_inf(other)) or (
            not is_inf(first) and not is_inf(other) and first == other
        )
        if not same:
            raise AssertionError(f"inconsistent limits for {labels} on {curve.text!r}")
    return first


# --------------------------------------------------------------------------
# label-level terms


@dataclass(frozen=True)
class CrossArg:
    """Product of cross-ratios given by 4-tuples of point labels."""

    factors: tuple

    @staticmethod
    def of(*label_tuples) -> "CrossArg":
        fs = []
        for t in label_tuples:
            t = tuple(str(l) for l in t)
            if len(t) != 4:
                raise ValueError("each factor is a 4-tuple of labels")
            fs.append(t)
        return CrossArg(tuple(fs))

    def __repr__(self):
        return "*".join("[" + "".join(f) + "]" for f in self.factors)


@dataclass(frozen=True)
class LabelLi(LiTerm):
    """Polylogarithm term whose arguments are labelled cross-ratios."""

    def __post_init__(self):
        super().__post_init__()
        for a in self.args:
            if not isinstance(a, CrossArg):
                raise TypeError("labelled term needs CrossArg arguments")


def label_li(n0, indices, args, coeff=1) -> LinComb:
    return LinComb.term(
        LabelLi(n0, tuple(indices), tuple(args)), Fraction(coeff)
    )


def cross_value(arg, coords=None) -> RatFunc:
    """Materialise one argument; coords maps labels to positions (defaults to
    one free variable per label)."""
    factors = arg.factors if isinstance(arg, CrossArg) else (tuple(arg),)
    out = rf(1)
    for f in factors:
        pts = [coords[l] if coords else label_var(l) for l in f]
        val = _ratio_of_images(pts)
        if is_inf(val) or is_inf(out):
            raise ValueError("infinite cross-ratio value")
        out = out * val
    return out


def materialise(x: LinComb) -> LinComb:
    """Labelled terms to plain terms with generic (free-variable) arguments."""
    def conv(t):
        return LinComb.term(LiTerm(t.n0, t.indices, tuple(cross_value(a) for a in t.args)))
    return x.map_linear(conv)


def _limit_arg(curve: StableCurve, arg: CrossArg):
    """Limit of a product argument; 0 beats infinity when both appear."""
    vals, n_zero, n_inf = [], 0, 0
    for f in arg.factors:
        v = curve_limit_cross_ratio(curve, f)
        if is_inf(v):
            n_inf += 1
        elif v.is_zero():
            n_zero += 1
        else:
            vals.append(v)
    if n_zero and n_inf:
        raise ValueError(f"indeterminate 0*inf limit in {arg!r}")
    if n_zero:
        return rf(0)
    if n_inf:
        if n_inf > 1:
            raise ValueError(f"repeated infinite factor in {arg!r}")
        out = rf(1)
        for v in vals:
            out = out * v
        if not out == rf(1):
            raise ValueError(f"infinite limit with residual factor in {arg!r}")
        return INF
    out = rf(1)
    for v in vals:
        out = out * v
    return out


def _drop(term: LiTerm, policies) -> bool:
    one = rf(1)
    ones = sum(1 for a in term.args if not is_inf(a) and a == one)
    for p in policies:
        if p == "none":
            continue
        if p == "two_ones" and ones >= 2:
            return True
        if p == "one_one" and ones >= 1:
            return True
        if p == "one_var" and ones == 1 and len(term.args) >= 2:
            rest = [a for a in term.args if a != one]
            prod = rf(1)
            for a in rest:
                prod = prod * a
            if prod == one:
                return True
    return False


def degenerate(x: LinComb, curve: StableCurve, policy="none") -> LinComb:
    """Degenerate labelled terms onto the curve.

    Per term: each argument takes its combinatorial limit; a zero argument
    kills the term, infinite arguments are rewritten to lower depth, the
    value 1 is kept.  The drop policy then removes full-depth terms whose
    reduction is already covered by simpler identities: "two_ones" /
    "one_one" match terms with at least two / one argument equal to 1,
    "one_var" matches a single 1 alongside mutually inverse arguments.
    """
    if isinstance(policy, str):
        policy = (policy,)

    def conv(t):
        limits = [_limit_arg(curve, a) for a in t.args]
        if any(not is_inf(v) and v.is_zero() for v in limits):
            return LinComb()
        out = normalize_degenerate(LiTerm(t.n0, t.indices, tuple(limits)))
        return out.filter(lambda u: not _drop(u, policy))

    return x.map_linear(conv)


# --------------------------------------------------------------------------
# analytic route: parametrise the collision and specialise sequentially


@dataclass(frozen=True)
class LimitPlan:
    """Ordered parametrisation steps (param, substitution map)."""

    steps: tuple

    @staticmethod
    def for_curve(curve: StableCurve) -> "LimitPlan":
        params = ("lam", "mu", "nu")
        steps = []
        for param, node in zip(params, curve.node_order):
            leaf = curve.components[curve.leaf_of_node(node)]
            t = rfvar(param)
            anchor = label_var(node)
            sub = {"x" + m: anchor + t * label_var(m) for m in leaf.marked}
            steps.append((param, sub))
        return LimitPlan(tuple(steps))


def _to_cor_comb(li_comb: LinComb) -> LinComb:
    out = LinComb()
    for t, c in li_comb.items():
        if isinstance(t, CorTerm):
            out += LinComb({t: c})
            continue
        ii = li_to_ii(t) if isinstance(t, LiTerm) else LinComb.term(t)
        out += c * LinComb.total(
            cc * ii_to_cor(u) for u, cc in ii.items()
        )
    return out


def analytic_limit(term: LiTerm, plan: LimitPlan) -> LinComb:
    """Parametrise a generic term along the plan and specialise each
    correlator tuple, one parameter at a time."""
    mapping = {}
    for _, sub in plan.steps:
        mapping.update(sub)
    subbed = LiTerm(
        term.n0, term.indices, tuple(subst(a, mapping) for a in term.args)
    )
    cors = _to_cor_comb(LinComb.term(subbed))
    for param, _ in plan.steps:
        ctx = SpecContext(param)
        cors = cors.map_linear(lambda t: spec_cor(t, ctx))
    return cors


def analytic_check(x: LinComb, curve: StableCurve, verifier) -> dict:
    """Term-by-term agreement of the combinatorial and analytic limits.

    verifier(diff) must return a report dict with a "pass" key (the symbol
    based zero test); returns the first failing report, else a passing one.
    """
    plan = LimitPlan.for_curve(curve)
    for t, _ in x.items():
        generic = materialise(LinComb.term(t))
        (gt,) = generic.terms()
        ana = analytic_limit(gt, plan)
        comb = degenerate(LinComb.term(t), curve, policy="none")
        rep = verifier(ana - _to_cor_comb(comb))
        if not rep.get("pass"):
            rep["term"] = t
            return rep
    return {"pass": True, "n_terms": len(x)}
