"""Exact arithmetic over Q[sqrt 3] and the fixed-orientation triangle predicates.

Every direction used by the cone machinery (the six 60-degree sextants, their
bisectors, the normals of equilateral triangles with a horizontal side) has
components in ``{1, sqrt 3} * Q``. Representing numbers as ``a + b*sqrt(3)``
with rational ``a, b`` therefore makes every predicate here exact; there are
no tolerances anywhere in this module.

Sextant ``A_k`` (k = 1..6) around a point is the open wedge between the rays at
angles ``(k-1)*60`` and ``k*60`` degrees. Positive cones are ``C_i = A_{2i-1}``,
negative cones are the opposite wedges ``C̄_1 = A_4, C̄_2 = A_6, C̄_3 = A_2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "ExactScalar",
    "SQRT3",
    "scalar_sign",
    "Point",
    "PointSet",
    "GeneralPositionError",
    "ConeIndex",
    "FixedTriangle",
    "general_position",
    "sextant",
    "classify_cone",
    "projection_length",
    "smallest_triangle",
    "triangle_contains",
    "LATTICE_INT64_BOUND",
]

# Largest |coordinate| on the integer lattice for which the int64 kernels are
# overflow-free (worst case is 3 * (4 * bound)**2 in the sign test).
LATTICE_INT64_BOUND = 1 << 28


def _sign_ab(a, b) -> int:
    """Sign of ``a + b*sqrt(3)`` for ordered rationals ``a``, ``b``."""
    if a >= 0 and b >= 0:
        return 1 if (a > 0 or b > 0) else 0
    if a <= 0 and b <= 0:
        return -1
    d = a * a - 3 * b * b
    s = (d > 0) - (d < 0)
    return s if a > 0 else -s


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot convert {type(v).__name__} to an exact rational")


class ExactScalar:
    """The number ``rational_part + root3_part * sqrt(3)``.

    Both parts are :class:`fractions.Fraction`. Since sqrt(3) is irrational the
    pair is a canonical representation, so equality and hashing are structural.
    """

    __slots__ = ("rational_part", "root3_part")

    def __init__(self, rational_part=0, root3_part=0):
        object.__setattr__(self, "rational_part", _frac(rational_part))
        object.__setattr__(self, "root3_part", _frac(root3_part))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    def __reduce__(self):
        return (ExactScalar, (self.rational_part, self.root3_part))

    @classmethod
    def coerce(cls, v) -> "ExactScalar":
        if isinstance(v, ExactScalar):
            return v
        return cls(v, 0)

    @property
    def is_rational(self) -> bool:
        return self.root3_part == 0

    def sign(self) -> int:
        return _sign_ab(self.rational_part, self.root3_part)

    def __add__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self.rational_part + o.rational_part, self.root3_part + o.root3_part)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.rational_part, -self.root3_part)

    def __sub__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self.rational_part - o.rational_part, self.root3_part - o.root3_part)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.rational_part, self.root3_part
        c, d = o.rational_part, o.root3_part
        return ExactScalar(a * c + 3 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = ExactScalar.coerce(other)
        c, d = o.rational_part, o.root3_part
        den = c * c - 3 * d * d
        if den == 0:
            raise ZeroDivisionError("division by zero in Q[sqrt 3]")
        # multiply by the conjugate c - d*sqrt3
        return self * ExactScalar(c / den, -d / den)

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.rational_part == o.rational_part and self.root3_part == o.root3_part

    def __hash__(self):
        if self.root3_part == 0:
            return hash(self.rational_part)
        return hash((self.rational_part, self.root3_part))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self):
        return float(self.rational_part) + float(self.root3_part) * math.sqrt(3.0)

    def __repr__(self):
        return f"ExactScalar({self.rational_part}, {self.root3_part})"

    def __str__(self):
        if self.root3_part == 0:
            return str(self.rational_part)
        return f"{self.rational_part}+{self.root3_part}*sqrt3"


SQRT3 = ExactScalar(0, 1)
_HALF = Fraction(1, 2)


def scalar_sign(s) -> int:
    """Exact sign of an :class:`ExactScalar` (or plain rational)."""
    if isinstance(s, ExactScalar):
        return s.sign()
    return (s > 0) - (s < 0)


@dataclass(frozen=True)
class Point:
    x: ExactScalar
    y: ExactScalar
    id: int = -1

    def __post_init__(self):
        object.__setattr__(self, "x", ExactScalar.coerce(self.x))
        object.__setattr__(self, "y", ExactScalar.coerce(self.y))

    def same_location(self, other: "Point") -> bool:
        return self.x == other.x and self.y == other.y


class GeneralPositionError(ValueError):
    """Raised when a point set has a pair at 0, 60 or 120 degrees (or a duplicate)."""

    def __init__(self, pair, reason="not in general position"):
        self.pair = pair
        super().__init__(f"points {pair[0]} and {pair[1]}: {reason}")


def _pair_violation(p: Point, q: Point):
    dx = q.x - p.x
    dy = q.y - p.y
    if dx.sign() == 0 and dy.sign() == 0:
        return "duplicate point"
    if dy.sign() == 0:
        return "horizontal pair"
    if (dy - SQRT3 * dx).sign() == 0:
        return "pair at 60 degrees"
    if (dy + SQRT3 * dx).sign() == 0:
        return "pair at 120 degrees"
    return None


def general_position(points: Iterable[Point]):
    """Return ``(True, None)`` or ``(False, (i, j))`` for the first violating pair.

    ``i`` and ``j`` are positions in the iteration order of ``points``.
    """
    pts = list(points)
    if not pts:
        raise ValueError("general_position needs at least one point")
    # rational points only violate by sharing a y coordinate: bucket them first
    if all(p.x.is_rational and p.y.is_rational for p in pts):
        seen: dict = {}
        for j, q in enumerate(pts):
            i = seen.get(q.y.rational_part)
            if i is not None:
                return False, (i, j)
            seen[q.y.rational_part] = j
        return True, None
    for j in range(len(pts)):
        for i in range(j):
            if _pair_violation(pts[i], pts[j]) is not None:
                return False, (i, j)
    return True, None


class PointSet:
    """An ordered, immutable set of distinct points with ids ``0..n-1``.

    With ``certify=True`` (the default) construction fails unless the set is
    in general position. ``labels`` optionally names the points (used by the
    structured families and the SVG renderer).
    """

    def __init__(self, coords: Iterable, labels: Sequence[str] | None = None, certify: bool = True):
        pts = []
        for k, c in enumerate(coords):
            if isinstance(c, Point):
                pts.append(Point(c.x, c.y, k))
            else:
                x, y = c
                pts.append(Point(x, y, k))
        self.points: tuple[Point, ...] = tuple(pts)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != len(pts):
                raise ValueError("labels must match the number of points")
        self.labels = labels
        seen = {}
        for p in pts:
            key = (p.x, p.y)
            if key in seen:
                raise GeneralPositionError((seen[key], p.id), "duplicate point")
            seen[key] = p.id
        self.certified_general_position = False
        if certify and pts:
            ok, pair = general_position(pts)
            if not ok:
                raise GeneralPositionError(pair, _pair_violation(pts[pair[0]], pts[pair[1]]))
            self.certified_general_position = True

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return [(p.x, p.y) for p in self.points] == [(p.x, p.y) for p in other.points]

    def __hash__(self):
        return hash(tuple((p.x, p.y) for p in self.points))

    def __repr__(self):
        return f"PointSet(n={len(self)})"

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            raise KeyError(label)
        return self.labels.index(label)

    def without(self, labels_or_ids) -> "PointSet":
        """Copy with some points removed; remaining points are re-indexed."""
        drop = set()
        for key in labels_or_ids:
            drop.add(self.index_of(key) if isinstance(key, str) else int(key))
        keep = [p for p in self.points if p.id not in drop]
        labels = None if self.labels is None else [self.labels[p.id] for p in keep]
        return PointSet([(p.x, p.y) for p in keep], labels=labels, certify=self.certified_general_position)

    @property
    def is_rational(self) -> bool:
        return all(p.x.is_rational and p.y.is_rational for p in self.points)

    @cached_property
    def lattice(self):
        """Integer coordinates ``(X, Y)`` after scaling by the common denominator.

        Scaling by a positive constant preserves every sign predicate used by
        the graph kernels. Returns ``None`` for points with irrational
        coordinates. Arrays are ``int64`` when the kernels cannot overflow and
        ``object`` (Python ints) otherwise.
        """
        if not self.is_rational:
            return None
        den = 1
        for p in self.points:
            den = math.lcm(den, p.x.rational_part.denominator, p.y.rational_part.denominator)
        xs = [int(p.x.rational_part * den) for p in self.points]
        ys = [int(p.y.rational_part * den) for p in self.points]
        bound = max((abs(v) for v in xs + ys), default=0)
        dtype = np.int64 if bound <= LATTICE_INT64_BOUND else object
        return np.array(xs, dtype=dtype), np.array(ys, dtype=dtype)

    def scaled_coords(self) -> list:
        """Coordinates with the same orientation predicates, cheapest exact form.

        Python ints from :attr:`lattice` for rational sets; the original
        :class:`ExactScalar` pairs otherwise.
        """
        lat = self.lattice
        if lat is None:
            return [(p.x, p.y) for p in self.points]
        return [(int(x), int(y)) for x, y in zip(lat[0], lat[1])]


class ConeIndex(NamedTuple):
    kind: str  # "positive" or "negative"
    i: int  # 1, 2 or 3

    @property
    def sextant(self) -> int:
        if self.kind == "positive":
            return 2 * self.i - 1
        return (2 * self.i + 1) % 6 + 1

    @classmethod
    def from_sextant(cls, k: int) -> "ConeIndex":
        if k % 2 == 1:
            return cls("positive", (k + 1) // 2)
        return cls("negative", {4: 1, 6: 2, 2: 3}[k])

    def opposite(self) -> "ConeIndex":
        return ConeIndex("negative" if self.kind == "positive" else "positive", self.i)


def sextant(dx, dy) -> int:
    """Index 1..6 of the open sextant containing direction ``(dx, dy)``.

    Returns 0 for the zero vector and for directions on a sextant boundary
    (angles that are multiples of 60 degrees).
    """
    dx = ExactScalar.coerce(dx)
    dy = ExactScalar.coerce(dy)
    s0 = dy.sign()
    s60 = (SQRT3 * dx - dy).sign()
    s120 = (SQRT3 * dx + dy).sign()
    if s0 == 0 or s60 == 0 or s120 == 0:
        return 0
    if s0 > 0:
        if s60 > 0:
            return 1
        return 2 if s120 > 0 else 3
    if s60 < 0:
        return 4
    return 6 if s120 > 0 else 5


def classify_cone(apex: Point, other: Point) -> ConeIndex:
    """Cone of ``apex`` that contains ``other``."""
    k = sextant(other.x - apex.x, other.y - apex.y)
    if k == 0:
        raise GeneralPositionError((apex.id, other.id), "pair lies on a cone boundary")
    return ConeIndex.from_sextant(k)


# unit bisector of each sextant, indexed 1..6
_BISECTORS = {
    1: (SQRT3 * _HALF, ExactScalar(_HALF)),
    2: (ExactScalar(0), ExactScalar(1)),
    3: (-SQRT3 * _HALF, ExactScalar(_HALF)),
    4: (-SQRT3 * _HALF, ExactScalar(-_HALF)),
    5: (ExactScalar(0), ExactScalar(-1)),
    6: (SQRT3 * _HALF, ExactScalar(-_HALF)),
}


def projection_length(apex: Point, other: Point, cone: ConeIndex) -> ExactScalar:
    """Distance from ``apex`` to the projection of ``other`` on the cone bisector."""
    actual = classify_cone(apex, other)
    if actual != cone:
        raise ValueError(f"point {other.id} lies in cone {actual} of {apex.id}, not {cone}")
    ux, uy = _BISECTORS[cone.sextant]
    return (other.x - apex.x) * ux + (other.y - apex.y) * uy


# outward normals of a down-triangle: top side, lower-left side, lower-right side
_DOWN_NORMALS = (
    (ExactScalar(0), ExactScalar(1)),
    (-SQRT3 * _HALF, ExactScalar(-_HALF)),
    (SQRT3 * _HALF, ExactScalar(-_HALF)),
)
_UP_NORMALS = tuple((-ux, -uy) for ux, uy in _DOWN_NORMALS)


def normals(orientation: str):
    if orientation == "down":
        return _DOWN_NORMALS
    if orientation == "up":
        return _UP_NORMALS
    raise ValueError(f"orientation must be 'down' or 'up', got {orientation!r}")


@dataclass(frozen=True)
class FixedTriangle:
    """``{v : <v, u_k> <= t_k}`` for the three outward normals of ``orientation``."""

    orientation: str
    support: tuple

    def corners(self):
        """Exact corner coordinates, in the order (corner opposite side 0, 1, 2)."""
        ns = normals(self.orientation)
        t = self.support
        return [_intersect(ns[a], t[a], ns[b], t[b]) for a, b in ((1, 2), (0, 2), (0, 1))]

    def is_degenerate(self) -> bool:
        c = self.corners()
        return c[0] == c[1] == c[2]


def _intersect(n1, t1, n2, t2):
    # solve n1.v = t1, n2.v = t2 by Cramer's rule
    (a, b), (c, d) = n1, n2
    det = a * d - b * c
    x = (t1 * d - b * t2) / det
    y = (a * t2 - t1 * c) / det
    return x, y


def _dot(p: Point, n) -> ExactScalar:
    return p.x * n[0] + p.y * n[1]


def smallest_triangle(p: Point, q: Point, orientation: str) -> FixedTriangle:
    """Smallest down- (or up-) triangle containing both ``p`` and ``q``."""
    sup = tuple(max(_dot(p, n), _dot(q, n)) for n in normals(orientation))
    return FixedTriangle(orientation, sup)


def triangle_contains(t: FixedTriangle, v: Point, mode: str = "closed") -> bool:
    if mode not in ("closed", "interior"):
        raise ValueError(f"mode must be 'closed' or 'interior', got {mode!r}")
    for n, s in zip(normals(t.orientation), t.support):
        d = (_dot(v, n) - s).sign()
        if d > 0 or (d == 0 and mode == "interior"):
            return False
    return True
