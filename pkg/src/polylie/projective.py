"""Cross-ratios on P^1, the 6-point cyclic ratio, the Klein-four
canonicalisation of 4-point labels, and the anharmonic S3 action.

Points are PointExpr values (RatFunc or INF).  Internally differences are
computed as 2x2 determinants in homogeneous coordinates, which makes the
point at infinity a perfectly ordinary argument.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import (
    INF,
    IndeterminateError,
    RatFunc,
    is_inf,
)

__all__ = [
    "cross_ratio",
    "hexa_ratio",
    "pdiff",
    "Perm3",
    "S3",
    "PERM_BY_NAME",
    "anharmonic",
    "v4_canonical",
    "CrossRatioLabel",
]

_ONE = RatFunc.one()
_ZERO = RatFunc.zero()


def _det(p, q) -> RatFunc:
    """X_p Y_q - X_q Y_p for homogeneous lifts (x, 1) and inf = (1, 0);
    equals p - q for finite points and vanishes exactly when p = q."""
    if is_inf(p):
        return _ZERO if is_inf(q) else -_ONE
    if is_inf(q):
        return _ONE
    return p - q


pdiff = _det


def _point_eq(p, q) -> bool:
    if is_inf(p) or is_inf(q):
        return is_inf(p) and is_inf(q)
    return p == q


def cross_ratio(a, b, c, d):
    """[a,b,c,d] = (a-b)(c-d)/((b-c)(d-a)).

    Coincidences with three distinct values resolve combinatorially
    (a=b or c=d -> 0, b=c or d=a -> inf, a=c or b=d -> 1); fewer than
    three distinct values is indeterminate.
    """
    pts = (a, b, c, d)
    distinct: list = []
    for p in pts:
        if not any(_point_eq(p, q) for q in distinct):
            distinct.append(p)
    if len(distinct) < 3:
        raise IndeterminateError("cross-ratio indeterminate")
    num = _det(a, b) * _det(c, d)
    if num.is_zero():
        return _ZERO
    den = _det(b, c) * _det(d, a)
    if den.is_zero():
        return INF
    return num / den


def hexa_ratio(a, b, c, d, e, f):
    """6-point cyclic ratio -(a-b)(c-d)(e-f)/((b-c)(d-e)(f-a)).

    Splits as cross_ratio(a,b,c,d) * cross_ratio(a,d,e,f) at generic points.
    A vanishing denominator gives inf; 0/0 is indeterminate.
    """
    num = -_det(a, b) * _det(c, d) * _det(e, f)
    den = _det(b, c) * _det(d, e) * _det(f, a)
    if den.is_zero():
        if num.is_zero():
            raise IndeterminateError("6-point ratio indeterminate")
        return INF
    if num.is_zero():
        return _ZERO
    return num / den


# --------------------------------------------------------------------------
# the anharmonic S3 action


@dataclass(frozen=True)
class Perm3:
    """Permutation of {1,2,3}; images[i-1] = image of i.

    Composition is chained left to right so that the anharmonic action below
    is a left action: anharmonic(s.then(t), z) = anharmonic(s, anharmonic(t, z)).
    """

    images: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1..3: {self.images}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: "Perm3") -> "Perm3":
        return Perm3(tuple(other(self(i)) for i in (1, 2, 3)))

    def inverse(self) -> "Perm3":
        inv = [0, 0, 0]
        for i in (1, 2, 3):
            inv[self(i) - 1] = i
        return Perm3(tuple(inv))

    @property
    def sign(self) -> int:
        s = 1
        for i in (1, 2):
            for j in range(i + 1, 4):
                if self(i) > self(j):
                    s = -s
        return s

    @property
    def name(self) -> str:
        return _PERM_NAMES[self.images]


_PERM_NAMES = {
    (1, 2, 3): "id",
    (2, 1, 3): "(12)",
    (3, 2, 1): "(13)",
    (1, 3, 2): "(23)",
    (2, 3, 1): "(123)",
    (3, 1, 2): "(132)",
}

S3 = tuple(Perm3(images) for images in _PERM_NAMES)
PERM_BY_NAME = {p.name: p for p in S3}


def anharmonic(sigma: Perm3, z):
    """Act on a cross-ratio value by permuting the first three entries of
    [z, 0, 1, inf]: id -> z, (12) -> z/(z-1), (13) -> 1/z, (23) -> 1-z,
    (123) -> 1/(1-z), (132) -> (z-1)/z."""
    frame = (z, _ZERO, _ONE)
    return cross_ratio(frame[sigma(1) - 1], frame[sigma(2) - 1], frame[sigma(3) - 1], INF)


# --------------------------------------------------------------------------
# compact 4-point labels


def v4_canonical(labels: tuple) -> tuple:
    """Least of the four Klein-four images (a,b,c,d), (b,a,d,c), (c,d,a,b),
    (d,c,b,a) under lexicographic order."""
    a, b, c, d = labels
    return min((a, b, c, d), (b, a, d, c), (c, d, a, b), (d, c, b, a))


@dataclass(frozen=True)
class CrossRatioLabel:
    """Cross-ratio of four labelled points, stored V4-canonically.

    Labels are single characters: digits for marked points, letters (p, q,
    r, ...) for attachment nodes, rendered compactly as e.g. `2q4p`.
    """

    labels: tuple

    @staticmethod
    def of(a, b, c, d) -> "CrossRatioLabel":
        return CrossRatioLabel(v4_canonical((str(a), str(b), str(c), str(d))))

    @staticmethod
    def parse(text: str) -> "CrossRatioLabel":
        text = text.strip()
        if len(text) != 4:
            raise ValueError(f"expected 4 point labels, got {text!r}")
        return CrossRatioLabel.of(*text)

    def value(self, points: dict):
        a, b, c, d = self.labels
        return cross_ratio(points[a], points[b], points[c], points[d])

    def inv(self) -> "CrossRatioLabel":
        # [a,b,c,d]^-1 = [d,a,b,c], a cyclic shift
        a, b, c, d = self.labels
        return CrossRatioLabel(v4_canonical((d, a, b, c)))

    def __str__(self) -> str:
        return "".join(self.labels)

    def __repr__(self) -> str:
        return f"[{self}]"
