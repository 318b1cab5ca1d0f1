"""Plane embedding of straight-line graphs and the structural checks run on them.

The straight-line drawing of G▽ is its embedding: rotations come from exact
angular order around each vertex and faces from the usual next-dart walk.
Interior faces are traversed counter-clockwise; the outer face is the unique
walk with non-positive signed area.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cmp_to_key

import numpy as np

from . import kernels
from .geometry import ConeIndex, classify_cone, scalar_sign, smallest_triangle, triangle_contains
from .graphs import SimpleGraph, TriGraph

__all__ = [
    "Embedding",
    "PlanarityError",
    "embed",
    "faces_of_rotation",
    "check_planarity_by_segments",
    "check_internal_triangulation",
    "degree_one_census",
    "BlockCutTree",
    "block_cut_tree",
    "cut_vertex_violations",
    "check_cut_vertex_structure",
    "check_cut_vertices_on_outer_face",
    "check_path_in_triangle",
    "first_pair_without_triangle_path",
    "is_k_connected",
]


class PlanarityError(ValueError):
    """Two edges of a supposedly plane straight-line graph cross."""


@dataclass(frozen=True)
class Embedding:
    """Rotation system plus the face walks it induces.

    ``rotation[v]`` lists the neighbours of ``v`` counter-clockwise.
    ``faces[f]`` is a closed walk given as the tails of its darts.
    """

    rotation: tuple
    faces: tuple
    outer_face: int | None

    @property
    def outer_walk(self) -> tuple:
        return () if self.outer_face is None else self.faces[self.outer_face]

    def euler_characteristic(self, n: int) -> int:
        m = sum(len(r) for r in self.rotation) // 2
        return n - m + len(self.faces)


def faces_of_rotation(rotation) -> list[tuple]:
    """Trace every face of a rotation system (neighbour lists in CCW order)."""
    pos = [{w: k for k, w in enumerate(r)} for r in rotation]
    used = set()
    faces = []
    for u, r in enumerate(rotation):
        for v in r:
            if (u, v) in used:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in used:
                used.add((a, b))
                walk.append(a)
                rb = rotation[b]
                c = rb[(pos[b][a] - 1) % len(rb)]
                a, b = b, c
            faces.append(tuple(walk))
    return faces


def _angle_cmp(d1, d2) -> int:
    (x1, y1, i1), (x2, y2, i2) = d1, d2
    h1 = 0 if (scalar_sign(y1) > 0 or (scalar_sign(y1) == 0 and scalar_sign(x1) > 0)) else 1
    h2 = 0 if (scalar_sign(y2) > 0 or (scalar_sign(y2) == 0 and scalar_sign(x2) > 0)) else 1
    if h1 != h2:
        return h1 - h2
    c = scalar_sign(x1 * y2 - y1 * x2)
    if c:
        return -c
    # same ray: nearer first, then by id
    l1 = x1 * x1 + y1 * y1
    l2 = x2 * x2 + y2 * y2
    c = scalar_sign(l1 - l2)
    if c:
        return c
    return (i1 > i2) - (i1 < i2)


def _signed_area2(coords, walk):
    s = 0
    for k, u in enumerate(walk):
        v = walk[(k + 1) % len(walk)]
        s = s + (coords[u][0] * coords[v][1] - coords[v][0] * coords[u][1])
    return s


def check_planarity_by_segments(g: TriGraph, backend: str | None = None) -> bool:
    """True iff no two edge segments meet except at a shared endpoint."""
    return _first_crossing(g, backend) is None


def _first_crossing(g: TriGraph, backend=None):
    edges = g.sorted_edges()
    if len(edges) < 2:
        return None
    lat = g.points.lattice
    if lat is None:
        coords = g.points.scaled_coords()
        lat = (np.array([c[0] for c in coords], dtype=object), np.array([c[1] for c in coords], dtype=object))
    hit = kernels.first_crossing(lat[0], lat[1], np.array(edges, dtype=np.int64), backend)
    if hit is None:
        return None
    return edges[hit[0]], edges[hit[1]]


def embed(g: TriGraph, check_crossings: bool = True) -> Embedding:
    """Plane embedding read off the straight-line drawing of ``g``."""
    if check_crossings:
        hit = _first_crossing(g)
        if hit is not None:
            raise PlanarityError(f"edges {hit[0]} and {hit[1]} cross")
    coords = g.points.scaled_coords()
    adj = g.adjacency()
    rotation = []
    for v in range(g.n):
        vx, vy = coords[v]
        dirs = [(coords[w][0] - vx, coords[w][1] - vy, w) for w in adj[v]]
        dirs.sort(key=cmp_to_key(_angle_cmp))
        rotation.append(tuple(w for _, _, w in dirs))
    faces = faces_of_rotation(rotation)
    if not faces:
        return Embedding(tuple(rotation), ((),), 0)
    outer = [k for k, f in enumerate(faces) if scalar_sign(_signed_area2(coords, f)) <= 0]
    if g.is_connected() and len(outer) != 1:
        raise PlanarityError(f"expected one clockwise face, found {len(outer)}")
    return Embedding(tuple(rotation), tuple(faces), outer[0] if outer else None)


def check_internal_triangulation(e: Embedding) -> bool:
    return all(len(f) == 3 for k, f in enumerate(e.faces) if k != e.outer_face)


def degree_one_census(g: SimpleGraph) -> list[int]:
    return [v for v, d in enumerate(g.degrees()) if d == 1]


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple  # frozensets of edges
    block_vertices: tuple  # frozensets of vertices
    cut_vertices: tuple
    adjacency: dict  # ("B", k) / ("C", v) -> list of neighbour nodes

    def degree(self, node) -> int:
        return len(self.adjacency[node])

    def is_path(self) -> bool:
        return all(len(nb) <= 2 for nb in self.adjacency.values())


def block_cut_tree(g: SimpleGraph) -> BlockCutTree:
    """Biconnected components by iterative DFS with lowpoints."""
    if not g.is_connected():
        raise ValueError("block_cut_tree needs a connected graph")
    n = g.n
    adj = g.adjacency()
    blocks: list[frozenset] = []
    if n == 1:
        blocks_v = [frozenset([0])]
    else:
        disc = [-1] * n
        low = [0] * n
        estack: list = []
        disc[0] = low[0] = 0
        t = 1
        stack = [(0, -1, iter(adj[0]))]
        while stack:
            v, parent, it = stack[-1]
            pushed = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    estack.append((v, w))
                    stack.append((w, v, iter(adj[w])))
                    pushed = True
                    break
                if w != parent and disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    estack.append((v, w))
            if pushed:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = set()
                while True:
                    a, b = estack.pop()
                    comp.add((min(a, b), max(a, b)))
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(comp))
        blocks_v = [frozenset(x for e in b for x in e) for b in blocks]
    count: dict = {}
    for bv in blocks_v:
        for x in bv:
            count[x] = count.get(x, 0) + 1
    cuts = tuple(sorted(v for v, c in count.items() if c >= 2))
    adjacency: dict = {("B", k): [] for k in range(len(blocks_v))}
    for c in cuts:
        adjacency[("C", c)] = []
    for k, bv in enumerate(blocks_v):
        for c in cuts:
            if c in bv:
                adjacency[("B", k)].append(("C", c))
                adjacency[("C", c)].append(("B", k))
    if not blocks:
        blocks = [frozenset()]
    return BlockCutTree(tuple(blocks), tuple(blocks_v), cuts, adjacency)


def _cone_sets(g: TriGraph, p: int):
    sets = {ConeIndex(kind, i): set() for kind in ("positive", "negative") for i in (1, 2, 3)}
    for q in g.points:
        if q.id != p:
            sets[classify_cone(g.points[p], q)].add(q.id)
    return sets


def cut_vertex_violations(g: TriGraph, bc: BlockCutTree | None = None) -> list[int]:
    """Cut vertices whose removal does not split the rest along one opposite cone pair."""
    if bc is None:
        bc = block_cut_tree(g)
    bad = []
    for p in bc.cut_vertices:
        sets = _cone_sets(g, p)
        pairs = [i for i in (1, 2, 3) if sets[ConeIndex("positive", i)] and sets[ConeIndex("negative", i)]]
        nonempty = [c for c, s in sets.items() if s]
        if len(pairs) != 1 or len(nonempty) != 2:
            bad.append(p)
            continue
        i = pairs[0]
        comps = {frozenset(c) for c in g.components(removed=[p])}
        want = {frozenset(sets[ConeIndex("positive", i)]), frozenset(sets[ConeIndex("negative", i)])}
        if comps != want:
            bad.append(p)
    return bad


def check_cut_vertex_structure(g: TriGraph, bc: BlockCutTree | None = None) -> bool:
    return not cut_vertex_violations(g, bc)


def check_cut_vertices_on_outer_face(e: Embedding, bc: BlockCutTree) -> bool:
    outer = set(e.outer_walk)
    return all(c in outer for c in bc.cut_vertices)


def check_path_in_triangle(g: TriGraph, p: int, q: int) -> list[int]:
    """A ``p``-``q`` path of ``g`` whose vertices all lie in the closed smallest triangle.

    The triangle orientation follows the graph flavor (``down`` unless the
    graph was built from up-triangles). Raises ``AssertionError`` if no such
    path exists.
    """
    orientation = "up" if g.flavor == "up" else "down"
    tri = smallest_triangle(g.points[p], g.points[q], orientation)
    allowed = {v.id for v in g.points if triangle_contains(tri, v, "closed")}
    adj = g.adjacency()
    parent = {p: None}
    dq = deque([p])
    while dq:
        v = dq.popleft()
        if v == q:
            break
        for w in adj[v]:
            if w in allowed and w not in parent:
                parent[w] = v
                dq.append(w)
    if q not in parent:
        raise AssertionError(f"no path between {p} and {q} inside their smallest triangle")
    path = [q]
    while path[-1] != p:
        path.append(parent[path[-1]])
    return path[::-1]


def first_pair_without_triangle_path(g: TriGraph, backend: str | None = None):
    """Sweep all pairs; ``None`` when every pair has a path inside its triangle."""
    down = g.flavor != "up"
    lat = g.points.lattice
    if lat is None:
        for p in range(g.n):
            for q in range(p + 1, g.n):
                try:
                    check_path_in_triangle(g, p, q)
                except AssertionError:
                    return p, q
        return None
    indptr, indices = g.csr()
    return kernels.first_pair_without_triangle_path(lat[0], lat[1], indptr, indices, down, backend)


def is_k_connected(g: SimpleGraph, k: int) -> bool:
    """Exhaustive vertex-connectivity test for k in {1, 2, 3}."""
    from itertools import combinations

    if g.n <= k:
        return False
    for r in range(k):
        for removed in combinations(range(g.n), r):
            if len(g.components(removed)) != 1:
                return False
    return True
