"""Run the structural and matching checks on a point set and collect a report.

Every check has a name, a pass flag and a few measured values. Checks marked
``asserted=False`` are informational: they never fail a run.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .augment import augment, transfer_matching, verify_augmented
from .generators import random_general_position, three_connected_family, tight_family
from .geometry import PointSet
from .graphs import (
    build_cone_minimum,
    build_oracle,
    hexagon_growth_tree,
    intersect_graph,
    oracle_limit,
    union_graph,
)
from .io import format_kv, parse_kv
from .matching import (
    BoundViolation,
    PreconditionError,
    check_nishizeki,
    max_matching,
    theorem2_bound,
)
from .structure import (
    PlanarityError,
    block_cut_tree,
    check_cut_vertices_on_outer_face,
    check_internal_triangulation,
    cut_vertex_violations,
    degree_one_census,
    embed,
    first_pair_without_triangle_path,
)

__all__ = ["CHECKS", "CheckOutcome", "RunReport", "analyze", "corpus", "conjecture_search", "ConjectureReport"]

CHECKS = (
    "oracle",
    "planar",
    "paths",
    "degree_one",
    "faces",
    "cut_outer",
    "union_degree_one",
    "union_cuts",
    "bc_path",
    "edge_bound",
    "intersection",
    "theorem2",
    "augment",
    "union_faces",
)


@dataclass
class CheckOutcome:
    passed: bool
    values: dict = field(default_factory=dict)
    asserted: bool = True


@dataclass
class RunReport:
    generator: str
    seed: int | None
    n: int
    checks: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks.values() if c.asserted)

    def failed(self) -> list[str]:
        return [k for k, c in self.checks.items() if c.asserted and not c.passed]

    def to_kv(self) -> str:
        pairs = [
            ("instance.generator", self.generator),
            ("instance.seed", "" if self.seed is None else self.seed),
            ("instance.n", self.n),
            ("status", "PASS" if self.ok else "FAIL"),
        ]
        for name, c in self.checks.items():
            pairs.append((f"check.{name}.pass", int(c.passed)))
            pairs.append((f"check.{name}.asserted", int(c.asserted)))
            for k, v in c.values.items():
                pairs.append((f"check.{name}.{k}", v))
        pairs.append(("wall_time", f"{self.wall_time:.6f}"))
        return format_kv(pairs)

    @classmethod
    def from_kv(cls, text: str) -> "RunReport":
        d = parse_kv(text)
        seed = d.get("instance.seed", "")
        rep = cls(d["instance.generator"], int(seed) if seed else None, int(d["instance.n"]))
        for key, v in d.items():
            if not key.startswith("check."):
                continue
            _, name, attr = key.split(".", 2)
            c = rep.checks.setdefault(name, CheckOutcome(False))
            if attr == "pass":
                c.passed = v == "1"
            elif attr == "asserted":
                c.asserted = v == "1"
            else:
                c.values[attr] = _parse_value(v)
        rep.wall_time = float(d.get("wall_time", 0.0))
        return rep

    def to_text(self) -> str:
        lines = [f"instance: {self.generator} seed={self.seed} n={self.n}"]
        for name, c in self.checks.items():
            tag = ("PASS" if c.passed else "FAIL") if c.asserted else "INFO"
            vals = " ".join(f"{k}={v}" for k, v in c.values.items())
            lines.append(f"  {tag:4} {name:17} {vals}")
        lines.append(f"status: {'PASS' if self.ok else 'FAIL'} ({self.wall_time:.3f}s)")
        return "\n".join(lines) + "\n"


def _parse_value(v: str):
    for conv in (int, float):
        try:
            return conv(v)
        except ValueError:
            pass
    return v


def _resolve_checks(checks) -> list[str]:
    if checks is None or checks == "all" or checks == ["all"]:
        return list(CHECKS)
    if isinstance(checks, str):
        checks = [c.strip() for c in checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return [c for c in CHECKS if c in checks]


def _use_oracle(mode: str, n: int) -> bool:
    if mode == "on":
        return True
    if mode == "off":
        return False
    return n <= oracle_limit()


def analyze(ps: PointSet, checks="all", oracle: str = "auto", generator: str = "file",
            seed: int | None = None) -> RunReport:
    """Build G▽, G△, their union and intersection and run the selected checks."""
    t0 = time.perf_counter()
    wanted = _resolve_checks(checks)
    n = len(ps)
    rep = RunReport(generator, seed, n)
    down = build_cone_minimum(ps, "down")
    up = build_cone_minimum(ps, "up")
    union = union_graph(down, up)
    inter = intersect_graph(down, up)

    emb = None
    emb_err = None
    if n >= 2:
        try:
            emb = embed(down)
        except PlanarityError as exc:
            emb_err = str(exc)
    bc_down = block_cut_tree(down) if down.is_connected() else None
    bc_union = block_cut_tree(union) if union.is_connected() else None

    for name in wanted:
        rep.checks[name] = _run_check(name, ps, down, up, union, inter, emb, emb_err, bc_down, bc_union, oracle)
    rep.wall_time = time.perf_counter() - t0
    return rep


def _run_check(name, ps, down, up, union, inter, emb, emb_err, bc_down, bc_union, oracle) -> CheckOutcome:
    n = len(ps)
    if name == "oracle":
        if not _use_oracle(oracle, n):
            return CheckOutcome(True, {"skipped": 1}, asserted=False)
        od = build_oracle(ps, "down")
        ou = build_oracle(ps, "up")
        same = od.edges == down.edges and ou.edges == up.edges
        return CheckOutcome(same, {"down_edges": len(down.edges), "up_edges": len(up.edges)})
    if name == "planar":
        return CheckOutcome(emb_err is None, {"down_edges": len(down.edges)})
    if name == "paths":
        bad = first_pair_without_triangle_path(down)
        vals = {"connected": int(down.is_connected())}
        if bad is not None:
            vals["bad_pair"] = f"{bad[0]}-{bad[1]}"
        return CheckOutcome(down.is_connected() and bad is None, vals)
    if name == "degree_one":
        k = len(degree_one_census(down))
        return CheckOutcome(k <= 3, {"count": k})
    if name == "faces":
        if emb is None:
            return CheckOutcome(n < 2 and emb_err is None, {"faces": 0})
        inner = [f for i, f in enumerate(emb.faces) if i != emb.outer_face]
        return CheckOutcome(check_internal_triangulation(emb), {"internal_faces": len(inner)})
    if name == "cut_outer":
        if emb is None or bc_down is None:
            return CheckOutcome(n < 2 and emb_err is None, {"cut_vertices": 0})
        return CheckOutcome(check_cut_vertices_on_outer_face(emb, bc_down), {"cut_vertices": len(bc_down.cut_vertices)})
    if name == "union_degree_one":
        k = len(degree_one_census(union))
        return CheckOutcome(k <= 2, {"count": k})
    if name == "union_cuts":
        if bc_union is None:
            return CheckOutcome(n <= 1, {})
        bad = cut_vertex_violations(union, bc_union)
        return CheckOutcome(not bad, {"cut_vertices": len(bc_union.cut_vertices), "violations": len(bad)})
    if name == "bc_path":
        if bc_union is None:
            return CheckOutcome(n <= 1, {})
        return CheckOutcome(bc_union.is_path(), {"blocks": len(bc_union.blocks), "is_path": int(bc_union.is_path())})
    if name == "edge_bound":
        m = len(union.edges)
        if n < 3:
            return CheckOutcome(True, {"edges": m}, asserted=False)
        return CheckOutcome(m <= 5 * n - 11, {"edges": m, "bound": 5 * n - 11})
    if name == "intersection":
        tree = hexagon_growth_tree(ps, down, up) if n >= 1 else []
        ok = (
            len(inter.edges) >= n - 1
            and inter.is_connected()
            and len(tree) == max(n - 1, 0)
            and all(inter.has_edge(u, v) for u, v in tree)
        )
        return CheckOutcome(ok, {"edges": len(inter.edges), "tree_edges": len(tree)})
    if name == "theorem2":
        size = max_matching(down).size
        bound = theorem2_bound(n)
        return CheckOutcome(size >= bound, {"matching": size, "bound": bound, "slack": size - bound})
    if name == "augment":
        if n < 3:
            return CheckOutcome(True, {"skipped": 1}, asserted=False)
        a = augment(down, emb)
        r = verify_augmented(a)
        m_prime = max_matching(a.graph)
        m_base = max_matching(down)
        transferred = transfer_matching(a, m_prime)
        transfer_ok = m_base.size >= transferred.size >= m_prime.size - len(a.added_vertices)
        try:
            nr = check_nishizeki(a.graph, strict=True, planar=r.checks["planar"])
            nish_ok = True
            case = nr.case
        except (BoundViolation, PreconditionError):
            nish_ok = False
            case = "failed"
        vals = {"k": a.k, "added": len(a.added_vertices), "n_prime": a.n_prime,
                "matching_prime": m_prime.size, "bound_case": case}
        vals.update({c: int(v) for c, v in r.checks.items()})
        return CheckOutcome(r.ok and transfer_ok and nish_ok, vals)
    if name == "union_faces":
        # informational only: the union graph need not be plane
        try:
            e = embed(union) if n >= 2 else None
        except PlanarityError:
            return CheckOutcome(True, {"plane": 0}, asserted=False)
        if e is None:
            return CheckOutcome(True, {"plane": 1}, asserted=False)
        non_tri = sum(1 for i, f in enumerate(e.faces) if i != e.outer_face and len(f) != 3)
        return CheckOutcome(True, {"plane": 1, "non_triangular": non_tri}, asserted=False)
    raise ValueError(name)


def corpus(n_random: int = 40, seed: int = 0, n_max: int = 60, families: bool = True):
    """Deterministic list of ``(generator, seed, PointSet)`` instances."""
    rng = np.random.default_rng(seed)
    out = []
    for t in range(n_random):
        n = int(rng.integers(2, n_max + 1))
        s = int(rng.integers(0, 2**31))
        out.append(("random", s, random_general_position(n, s)))
    if families:
        for m in (5, 6):
            out.append(("tight", m, tight_family(m)))
            out.append(("three-connected", m, three_connected_family(m)))
    return out


@dataclass
class ConjectureReport:
    trials: int
    counterexamples: list
    perfect: int
    slack_min: int | None
    slack_mean: float | None
    slack_max: int | None

    def to_kv(self) -> str:
        return format_kv([
            ("trials", self.trials),
            ("counterexamples", len(self.counterexamples)),
            ("perfect", self.perfect),
            ("slack_min", "" if self.slack_min is None else self.slack_min),
            ("slack_mean", "" if self.slack_mean is None else f"{self.slack_mean:.4f}"),
            ("slack_max", "" if self.slack_max is None else self.slack_max),
        ])


def conjecture_search(trials: int, n_min: int = 4, n_max: int = 40, seed: int = 0, dump_dir=None) -> ConjectureReport:
    """Compare the maximum matching of the union graph with floor(n/2).

    Slack is ``floor(n/2) - |M|`` (0 means the conjectured size is reached).
    Instances with positive slack are counterexamples; with ``dump_dir`` set
    their points files are written there.
    """
    from pathlib import Path

    from .io import write_points

    rng = np.random.default_rng(seed)
    slacks = []
    perfect = 0
    found = []
    for t in range(trials):
        n = int(rng.integers(n_min, n_max + 1))
        s = int(rng.integers(0, 2**31))
        ps = random_general_position(n, s)
        g = union_graph(build_cone_minimum(ps, "down"), build_cone_minimum(ps, "up"))
        size = max_matching(g).size
        slack = n // 2 - size
        slacks.append(slack)
        if n % 2 == 0 and size == n // 2:
            perfect += 1
        if slack > 0:
            found.append((t, n, s))
            if dump_dir is not None:
                Path(dump_dir).mkdir(parents=True, exist_ok=True)
                write_points(Path(dump_dir) / f"counterexample_t{t}_n{n}_s{s}.pts", ps)
    if not slacks:
        return ConjectureReport(0, [], 0, None, None, None)
    return ConjectureReport(trials, found, perfect, min(slacks), float(np.mean(slacks)), max(slacks))
