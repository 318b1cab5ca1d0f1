"""Empty-triangle graphs: G▽ (down), G△ (up), their union (Theta6) and intersection.

Two independent constructions are provided:

* :func:`build_cone_minimum` links every point to the point with the smallest
  bisector projection in each of its three negative (down) or positive (up)
  cones: O(n^2).
* :func:`build_oracle` tests every pair's smallest triangle for emptiness:
  O(n^3). It is the reference the fast path is checked against.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import kernels
from .geometry import (
    ConeIndex,
    ExactScalar,
    GeneralPositionError,
    PointSet,
    classify_cone,
    projection_length,
    sextant,
    smallest_triangle,
    triangle_contains,
)

__all__ = [
    "SimpleGraph",
    "TriGraph",
    "HexDistance",
    "build_cone_minimum",
    "build_oracle",
    "build",
    "union_graph",
    "intersect_graph",
    "hexagon_growth_tree",
    "oracle_limit",
]

FLAVORS = ("down", "up", "union", "intersection")


def _norm_edges(edges: Iterable) -> frozenset:
    out = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"self-loop at {u}")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "edges", _norm_edges(self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{self.n - 1}")

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Connected components after deleting the vertices in ``removed``."""
        gone = set(removed)
        adj = self.adjacency()
        seen = set(gone)
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            dq = deque([s])
            while dq:
                v = dq.popleft()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        dq.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def csr(self):
        adj = self.adjacency()
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in adj])
        indices = np.array([w for a in adj for w in a], dtype=np.int64)
        return indptr, indices


@dataclass(frozen=True)
class TriGraph(SimpleGraph):
    """Straight-line graph on a :class:`PointSet`, tagged by construction flavor."""

    points: PointSet = field(default=None, compare=False)
    flavor: str = "down"

    def __post_init__(self):
        super().__post_init__()
        if self.points is None or len(self.points) != self.n:
            raise ValueError("TriGraph needs a PointSet with n points")
        if self.flavor not in FLAVORS:
            raise ValueError(f"flavor must be one of {FLAVORS}")

    @classmethod
    def on(cls, points: PointSet, edges, flavor: str) -> "TriGraph":
        return cls(len(points), edges, points, flavor)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def oracle_limit() -> int:
    """Largest n for which the O(n^3) oracle runs by default."""
    return int(os.environ.get("TRIPTS_ORACLE_LIMIT", "200"))


def _check_flavor(flavor: str) -> bool:
    if flavor not in ("down", "up"):
        raise ValueError(f"construction flavor must be 'down' or 'up', got {flavor!r}")
    return flavor == "down"


def _require_general_position(ps: PointSet):
    if not ps.certified_general_position and len(ps) > 1:
        from .geometry import general_position

        ok, pair = general_position(ps)
        if not ok:
            raise GeneralPositionError(pair)


_DOWN_CONES = (ConeIndex("negative", 1), ConeIndex("negative", 2), ConeIndex("negative", 3))
_UP_CONES = (ConeIndex("positive", 1), ConeIndex("positive", 2), ConeIndex("positive", 3))


def _cone_minimum_exact(ps: PointSet, down: bool):
    cones = _DOWN_CONES if down else _UP_CONES
    edges = set()
    for p in ps:
        best: dict = {}
        for q in ps:
            if q.id == p.id:
                continue
            c = classify_cone(p, q)
            if c not in cones:
                continue
            d = projection_length(p, q, c)
            if c not in best or d < best[c][0]:
                best[c] = (d, q.id)
        for _, qid in best.values():
            edges.add((p.id, qid))
    return edges


def build_cone_minimum(ps: PointSet, flavor: str = "down", backend: str | None = None) -> TriGraph:
    """G▽ or G△ by the per-cone nearest-projection rule.

    ``backend`` is ``None`` (automatic), ``"numba"``, ``"numpy"`` or
    ``"exact"`` (pure :class:`~tripts.geometry.ExactScalar` arithmetic; the
    only option for points with irrational coordinates).
    """
    down = _check_flavor(flavor)
    _require_general_position(ps)
    lat = ps.lattice
    if backend == "exact" or lat is None:
        return TriGraph.on(ps, _cone_minimum_exact(ps, down), flavor)
    win, bad = kernels.cone_minimum_winners(lat[0], lat[1], down, backend)
    if bad is not None:
        raise GeneralPositionError(bad)
    edges = [(i, int(j)) for i in range(len(ps)) for j in win[i] if j >= 0]
    return TriGraph.on(ps, edges, flavor)


def _oracle_exact(ps: PointSet, orientation: str):
    pts = list(ps)
    edges = []
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            tri = smallest_triangle(p, q, orientation)
            for r in pts:
                if r.id in (p.id, q.id):
                    continue
                if triangle_contains(tri, r, "closed"):
                    # a third point can never sit on the boundary of a smallest triangle
                    assert triangle_contains(tri, r, "interior"), (p.id, q.id, r.id)
                    break
            else:
                edges.append((p.id, q.id))
    return edges


def build_oracle(ps: PointSet, flavor: str = "down", backend: str | None = None) -> TriGraph:
    """G▽ or G△ straight from the definition: keep pairs whose smallest triangle is empty."""
    down = _check_flavor(flavor)
    _require_general_position(ps)
    lat = ps.lattice
    if backend == "exact" or lat is None:
        return TriGraph.on(ps, _oracle_exact(ps, flavor), flavor)
    return TriGraph.on(ps, kernels.oracle_edges(lat[0], lat[1], down, backend), flavor)


def _same_points(a: TriGraph, b: TriGraph):
    if a.points is not b.points and a.points != b.points:
        raise ValueError("graphs are built on different point sets")


def union_graph(down: TriGraph, up: TriGraph) -> TriGraph:
    _same_points(down, up)
    return TriGraph.on(down.points, down.edges | up.edges, "union")


def intersect_graph(down: TriGraph, up: TriGraph) -> TriGraph:
    _same_points(down, up)
    return TriGraph.on(down.points, down.edges & up.edges, "intersection")


def build(ps: PointSet, flavor: str, backend: str | None = None) -> TriGraph:
    """Any of the four flavors via the fast construction."""
    if flavor in ("down", "up"):
        return build_cone_minimum(ps, flavor, backend)
    d = build_cone_minimum(ps, "down", backend)
    u = build_cone_minimum(ps, "up", backend)
    if flavor == "union":
        return union_graph(d, u)
    if flavor == "intersection":
        return intersect_graph(d, u)
    raise ValueError(f"unknown flavor {flavor!r}")


@dataclass(frozen=True)
class HexDistance:
    """Smallest cone projection from a point to the points outside the grown set.

    ``None`` stands for "no point in any cone of that kind".
    """

    d1: ExactScalar | None  # over positive cones
    d2: ExactScalar | None  # over negative cones

    @property
    def d(self) -> ExactScalar | None:
        vals = [v for v in (self.d1, self.d2) if v is not None]
        return min(vals) if vals else None


def hex_distance(ps: PointSet, p: int, outside: Iterable[int]) -> HexDistance:
    d1 = d2 = None
    for q in outside:
        c = classify_cone(ps[p], ps[q])
        v = projection_length(ps[p], ps[q], c)
        if c.kind == "positive":
            d1 = v if d1 is None or v < d1 else d1
        else:
            d2 = v if d2 is None or v < d2 else d2
    return HexDistance(d1, d2)


def _projection_key(coords, p, q):
    """Twice the cone projection from p to q, as an ExactScalar on scaled coordinates."""
    (px, py), (qx, qy) = coords[p], coords[q]
    dx, dy = qx - px, qy - py
    s = sextant(dx, dy)
    if s == 0:
        raise GeneralPositionError((p, q))
    a, b = {
        1: (dy, dx), 2: (2 * dy, 0), 3: (dy, -dx),
        4: (-dy, -dx), 5: (-2 * dy, 0), 6: (-dy, dx),
    }[s]
    return ExactScalar.coerce(a) + ExactScalar.coerce(b) * ExactScalar(0, 1)


def hexagon_growth_tree(ps: PointSet, down: TriGraph | None = None, up: TriGraph | None = None):
    """Spanning tree of G▽ ∩ G△ grown by repeatedly adding the hexagonally nearest point.

    Starts from point 0. At each step the pair ``(p, q)`` with ``p`` inside,
    ``q`` outside, minimising the cone projection ``c(p, q)`` is chosen (ties:
    smallest ``(p, q)``), asserted to be an edge of both graphs, and added.
    """
    n = len(ps)
    if n <= 1:
        return []
    if down is None:
        down = build_cone_minimum(ps, "down")
    if up is None:
        up = build_cone_minimum(ps, "up")
    coords = ps.scaled_coords()
    inside = [False] * n
    inside[0] = True
    # best[q] = (distance, p) over p already inside
    best: list = [None] * n
    for q in range(1, n):
        best[q] = (_projection_key(coords, 0, q), 0)
    tree = []
    for _ in range(n - 1):
        q_pick = None
        for q in range(n):
            if inside[q]:
                continue
            d, p = best[q]
            if q_pick is None:
                q_pick = q
                continue
            bd, bp = best[q_pick]
            if d < bd or (d == bd and (p, q) < (bp, q_pick)):
                q_pick = q
        d, p = best[q_pick]
        q = q_pick
        if not (down.has_edge(p, q) and up.has_edge(p, q)):
            raise AssertionError(f"hexagon-growth pair ({p}, {q}) is not an edge of both graphs")
        tree.append((min(p, q), max(p, q)))
        inside[q] = True
        for r in range(n):
            if inside[r]:
                continue
            v = _projection_key(coords, q, r)
            bd, bp = best[r]
            if v < bd or (v == bd and q < bp):
                best[r] = (v, q)
    return tree
