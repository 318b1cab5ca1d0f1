"""Maximum-cardinality matching (Edmonds' blossom algorithm) and the matching bounds."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import SimpleGraph, build_cone_minimum
from .geometry import PointSet

__all__ = [
    "Matching",
    "max_matching",
    "brute_force_matching",
    "BRUTE_FORCE_LIMIT",
    "theorem2_bound",
    "nishizeki_bound",
    "Theorem2Report",
    "NishizekiReport",
    "BoundViolation",
    "check_theorem2",
    "check_nishizeki",
    "has_augmenting_path",
]

BRUTE_FORCE_LIMIT = 14


class BoundViolation(AssertionError):
    """A proven lower bound on the matching size failed: a bug or a counterexample."""


@dataclass(frozen=True)
class Matching:
    edges: frozenset

    @property
    def size(self) -> int:
        return len(self.edges)

    def mate(self) -> dict:
        m = {}
        for u, v in self.edges:
            m[u] = v
            m[v] = u
        return m

    def validate(self, g: SimpleGraph) -> None:
        seen = set()
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise ValueError(f"matching edge ({u}, {v}) is not in the graph")
            if u in seen or v in seen:
                raise ValueError(f"vertex shared by two matching edges at ({u}, {v})")
            seen.update((u, v))


def _edmonds(n: int, adj: list[list[int]], edges: list[tuple[int, int]]) -> list[int]:
    match = [-1] * n
    for u, v in edges:  # deterministic greedy start
        if match[u] == -1 and match[v] == -1:
            match[u], match[v] = v, u

    def find_augmenting(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        dq = deque([root])

        def lca(a, b):
            mark = [False] * n
            while True:
                a = base[a]
                mark[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if mark[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v, b, child, blossom):
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while dq:
            v = dq.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                dq.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    dq.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        v, parent = find_augmenting(root)
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv
    return match


def max_matching(g: SimpleGraph) -> Matching:
    """Maximum-cardinality matching of ``g``; deterministic for a given edge set."""
    edges = sorted(g.edges)
    mate = _edmonds(g.n, g.adjacency(), edges)
    m = Matching(frozenset((u, v) for u, v in enumerate(mate) if u < v))
    m.validate(g)
    return m


def brute_force_matching(g: SimpleGraph) -> Matching:
    """Exhaustive branch-and-bound maximum matching (small graphs only)."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}, got {g.n}")
    adj = g.adjacency()
    best: list = [[]]
    free = [True] * g.n

    def rec(v, chosen, remaining):
        if len(chosen) + remaining // 2 <= len(best[0]):
            return
        while v < g.n and not free[v]:
            v += 1
        if v >= g.n:
            best[0] = list(chosen)
            return
        free[v] = False
        for w in adj[v]:
            if free[w]:
                free[w] = False
                chosen.append((v, w))
                rec(v + 1, chosen, remaining - 2)
                chosen.pop()
                free[w] = True
        # leave v unmatched
        rec(v + 1, chosen, remaining - 1)
        free[v] = True

    rec(0, [], g.n)
    m = Matching(frozenset((min(u, v), max(u, v)) for u, v in best[0]))
    m.validate(g)
    return m


def has_augmenting_path(g: SimpleGraph, m: Matching) -> bool:
    """Exhaustive search for an alternating path between two free vertices."""
    mate = m.mate()
    adj = g.adjacency()
    free = [v for v in range(g.n) if v not in mate]

    def dfs(v, visited, need_free_edge):
        for w in adj[v]:
            if w in visited or (mate.get(v) == w) == need_free_edge:
                continue
            if need_free_edge and w not in mate:
                return True
            visited.add(w)
            if dfs(w, visited, not need_free_edge):
                return True
            visited.discard(w)
        return False

    return any(dfs(s, {s}, True) for s in free)


def theorem2_bound(n: int) -> int:
    """ceil((n - 2) / 3), floored at 0."""
    return max(0, -(-(n - 2) // 3))


def nishizeki_bound(n: int, two_connected: bool) -> tuple[int, str]:
    """Lower bound on a maximum matching of a connected planar graph with min degree >= 3."""
    if not two_connected and n >= 10:
        return -(-(n + 2) // 3), "ceil((n+2)/3)"
    if two_connected and n >= 14:
        return -(-(n + 4) // 3), "ceil((n+4)/3)"
    return n // 2, "floor(n/2)"


@dataclass(frozen=True)
class Theorem2Report:
    n: int
    matching_size: int
    bound: int
    matching: Matching

    @property
    def slack(self) -> int:
        return self.matching_size - self.bound

    @property
    def holds(self) -> bool:
        return self.matching_size >= self.bound


def check_theorem2(ps: PointSet, strict: bool = True, graph: SimpleGraph | None = None) -> Theorem2Report:
    """Maximum matching of G▽(ps) against ceil((n-2)/3)."""
    g = graph if graph is not None else build_cone_minimum(ps, "down")
    m = max_matching(g)
    rep = Theorem2Report(len(ps), m.size, theorem2_bound(len(ps)), m)
    if strict and not rep.holds:
        raise BoundViolation(f"G_down matching {m.size} < ceil((n-2)/3) = {rep.bound} for n = {len(ps)}")
    return rep


@dataclass(frozen=True)
class NishizekiReport:
    n: int
    connected: bool
    min_degree: int
    two_connected: bool
    matching_size: int
    bound: int
    case: str

    @property
    def preconditions_ok(self) -> bool:
        return self.connected and self.min_degree >= 3

    @property
    def holds(self) -> bool:
        return self.matching_size >= self.bound


class PreconditionError(ValueError):
    pass


def check_nishizeki(g: SimpleGraph, strict: bool = True, planar: bool = True) -> NishizekiReport:
    """Matching bound for connected planar graphs of minimum degree >= 3.

    Planarity cannot be read off an abstract graph; callers pass ``planar``
    from their own certificate (e.g. a verified rotation system).
    """
    from .structure import block_cut_tree

    connected = g.is_connected()
    min_deg = min(g.degrees()) if g.n else 0
    two_conn = connected and g.n >= 3 and not block_cut_tree(g).cut_vertices
    bound, case = nishizeki_bound(g.n, two_conn)
    m = max_matching(g)
    rep = NishizekiReport(g.n, connected, min_deg, two_conn, m.size, bound, case)
    if strict:
        if not (rep.preconditions_ok and planar):
            raise PreconditionError(
                f"needs connected planar graph with min degree >= 3 "
                f"(connected={connected}, min_degree={min_deg}, planar={planar})"
            )
        if not rep.holds:
            raise BoundViolation(f"matching {m.size} < {case} = {bound} for n = {g.n}")
    return rep
