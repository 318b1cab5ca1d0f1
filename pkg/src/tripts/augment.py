"""Outer-face augmentation of G▽ to a 2-connected graph of minimum degree 3.

New vertices have no coordinates, so the augmented graph is carried as a
rotation system that extends the straight-line embedding of the base graph.
An added vertex attaches to *corners* of the outer walk: the corner at ``v``
between the consecutive darts ``(u, v)`` and ``(v, w)`` is the angular gap
in which the outer face touches ``v``, and a new neighbour of ``v`` is
inserted into that gap.

Case split on ``k``, the number of degree-one vertices ``p_0..p_{k-1}``
(ordered by first occurrence along the outer walk):

* ``k in {0, 1}``: one vertex ``x`` sees every outer-walk vertex. If ``k = 1``
  a second vertex ``y`` is put in a face containing both ``p_0`` and ``x``
  and joined to every vertex of that face.
* ``k in {2, 3}``: ``x_i`` sees the walk interval ``R_i`` from ``p_i`` to
  ``p_{i+1}`` and the ``x_i`` are joined in a cycle (one edge when ``k = 2``).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import SimpleGraph, TriGraph
from .structure import Embedding, block_cut_tree, degree_one_census, embed, faces_of_rotation
from .matching import Matching

__all__ = ["AugmentedGraph", "AugmentationReport", "augment", "verify_augmented", "transfer_matching"]


class AugmentationError(AssertionError):
    pass


@dataclass(frozen=True)
class AugmentedGraph:
    base: TriGraph
    added_vertices: tuple
    added_edges: frozenset
    regions: tuple  # per x_i, the outer-walk vertex interval it covers
    rotation: tuple  # CCW rotation system of G'
    k: int
    graph: SimpleGraph = field(compare=False)

    @property
    def n_prime(self) -> int:
        return self.graph.n


def _outer_corners(e: Embedding):
    """Corners ``(u, v, w)`` of the outer walk in walk order (``v`` is the corner vertex)."""
    walk = e.outer_walk
    L = len(walk)
    return [(walk[(j - 1) % L], walk[j], walk[(j + 1) % L]) for j in range(L)]


class _Rot:
    """Mutable rotation system with corner insertion."""

    def __init__(self, rotation):
        self.rot = [list(r) for r in rotation]

    def add_vertex(self) -> int:
        self.rot.append([])
        return len(self.rot) - 1

    def insert(self, corner, x):
        # x goes into the gap just clockwise of u at v (before u in CCW order)
        u, v, _ = corner
        r = self.rot[v]
        if not r:
            r.append(x)
            return
        r.insert(r.index(u), x)

    def face_corners(self, face):
        L = len(face)
        return [(face[(j - 1) % L], face[j], face[(j + 1) % L]) for j in range(L)]


def _first_corners(corners):
    """One corner per distinct corner vertex, keeping walk order."""
    seen = set()
    out = []
    for c in corners:
        if c[1] not in seen:
            seen.add(c[1])
            out.append(c)
    return out


def augment(g: TriGraph, e: Embedding | None = None) -> AugmentedGraph:
    """Build G' from a connected G▽ with at least 3 vertices."""
    if g.n < 3:
        raise ValueError("augmentation needs n >= 3")
    if not g.is_connected():
        raise ValueError("augmentation needs a connected graph")
    if e is None:
        e = embed(g)
    pendants = degree_one_census(g)
    k = len(pendants)
    if k > 3:
        raise AugmentationError(f"{k} degree-one vertices (at most 3 expected)")
    rot = _Rot(e.rotation)
    corners = _outer_corners(e)
    added_edges = set()
    added = []
    regions = []

    if k <= 1:
        x = rot.add_vertex()
        added.append(x)
        chosen = _first_corners(corners)
        for c in chosen:
            rot.insert(c, x)
            added_edges.add((c[1], x))
        rot.rot[x] = [c[1] for c in chosen]
        regions.append(tuple(c[1] for c in chosen))
        if k == 1:
            p0 = pendants[0]
            faces = faces_of_rotation(rot.rot)
            f = next(f for f in faces if p0 in f and x in f)
            y = rot.add_vertex()
            added.append(y)
            chosen = _first_corners(rot.face_corners(f))
            for c in chosen:
                rot.insert(c, y)
                added_edges.add((c[1], y))
            rot.rot[y] = [c[1] for c in chosen]
    else:
        walk = e.outer_walk
        first = {}
        for j, v in enumerate(walk):
            first.setdefault(v, j)
        order = sorted(pendants, key=lambda p: first[p])
        starts = [first[p] for p in order]
        xs = [rot.add_vertex() for _ in range(k)]
        added.extend(xs)
        L = len(walk)
        spans = []
        for i in range(k):
            a, b = starts[i], starts[(i + 1) % k]
            length = (b - a) % L or L
            spans.append([corners[(a + t) % L] for t in range(length + 1)])
        for i, span in enumerate(spans):
            chosen = _first_corners(span)
            regions.append(tuple(c[1] for c in chosen))
            for c in chosen:
                if c[1] in order:
                    continue
                rot.insert(c, xs[i])
                added_edges.add((c[1], xs[i]))
        # a leaf corner receives x_i (leaving it) and x_{i-1} (arriving);
        # CCW after the single base neighbour comes x_i, then x_{i-1}
        for i, p in enumerate(order):
            rot.rot[p] = rot.rot[p] + [xs[i], xs[(i - 1) % k]]
            added_edges.add((p, xs[i]))
            added_edges.add((p, xs[(i - 1) % k]))
        for i in range(k):
            nxt, prv = xs[(i + 1) % k], xs[(i - 1) % k]
            tail = [nxt] if k == 2 else [nxt, prv]
            rot.rot[xs[i]] = list(regions[i]) + tail
            added_edges.add((min(xs[i], nxt), max(xs[i], nxt)))

    n_prime = len(rot.rot)
    edges = set(g.edges) | {(min(a, b), max(a, b)) for a, b in added_edges}
    graph = SimpleGraph(n_prime, edges)
    return AugmentedGraph(
        base=g,
        added_vertices=tuple(added),
        added_edges=frozenset((min(a, b), max(a, b)) for a, b in added_edges),
        regions=tuple(regions),
        rotation=tuple(tuple(r) for r in rot.rot),
        k=k,
        graph=graph,
    )


@dataclass(frozen=True)
class AugmentationReport:
    min_degree: int
    cut_vertices: tuple
    euler: int
    faces: int
    extends_base: bool
    rotation_consistent: bool
    n: int
    n_prime: int
    added: int

    @property
    def checks(self) -> dict:
        return {
            "min_degree_3": self.min_degree >= 3,
            "two_connected": not self.cut_vertices,
            "planar": self.rotation_consistent and self.extends_base and self.euler == 2,
            "vertex_count": self.n_prime == self.n + self.added,
        }

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, good in self.checks.items() if not good]


def verify_augmented(a: AugmentedGraph) -> AugmentationReport:
    """Check min degree, 2-connectivity, planarity (Euler on the rotation) and the vertex count."""
    g = a.graph
    rot = a.rotation
    adj = [set(r) for r in g.adjacency()]
    consistent = len(rot) == g.n and all(
        len(r) == len(set(r)) and set(r) == adj[v] for v, r in enumerate(rot)
    )
    faces = faces_of_rotation(rot) if consistent else []
    euler = g.n - len(g.edges) + len(faces)
    base_e = embed(a.base, check_crossings=False)
    extends = True
    for v, r in enumerate(base_e.rotation):
        kept = [w for w in rot[v] if w < a.base.n]
        if not _cyclic_equal(kept, list(r)):
            extends = False
            break
    cuts = block_cut_tree(g).cut_vertices if g.is_connected() else (-1,)
    return AugmentationReport(
        min_degree=min(g.degrees()),
        cut_vertices=tuple(cuts),
        euler=euler,
        faces=len(faces),
        extends_base=extends,
        rotation_consistent=consistent,
        n=a.base.n,
        n_prime=g.n,
        added=len(a.added_vertices),
    )


def _cyclic_equal(a, b) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        s = b.index(a[0])
    except ValueError:
        return False
    return b[s:] + b[:s] == a


def transfer_matching(a: AugmentedGraph, m_prime: Matching) -> Matching:
    """Drop the edges of a G' matching that touch added vertices; a matching of the base."""
    extra = set(a.added_vertices)
    kept = frozenset(e for e in m_prime.edges if e[0] not in extra and e[1] not in extra)
    m = Matching(kept)
    m.validate(a.base)
    return m
