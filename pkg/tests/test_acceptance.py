"""Acceptance criteria, one test each; every test records a PASS/FAIL line.

The lines are printed in pytest's terminal summary (section
"acceptance criteria") and, when this file is run as a script, to stdout.
"""
import tempfile
import time

import numpy as np
import pytest

import conftest
from tripts.analysis import conjecture_search
from tripts.augment import augment, transfer_matching, verify_augmented
from tripts.generators import (
    near_sixty_chain,
    random_general_position,
    three_connected_family,
    tight_family,
    vertical_stack,
)
from tripts.graphs import build_cone_minimum, build_oracle, hexagon_growth_tree, intersect_graph, union_graph
from tripts.matching import brute_force_matching, check_nishizeki, max_matching, theorem2_bound
from tripts.structure import (
    PlanarityError,
    block_cut_tree,
    check_cut_vertices_on_outer_face,
    check_internal_triangulation,
    check_planarity_by_segments,
    cut_vertex_violations,
    degree_one_census,
    embed,
    first_pair_without_triangle_path,
    is_k_connected,
)


def record(num, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}" + (f" ({detail})" if detail else "")
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def _corpus():
    """Random sets (n in [2, 60] plus a few up to 200), both families, stress sets."""
    rng = np.random.default_rng(2024)
    out = []
    for _ in range(400):
        n = int(rng.integers(2, 61))
        out.append(random_general_position(n, int(rng.integers(0, 2**31))))
    for n in (80, 120, 160, 200):
        out.append(random_general_position(n, n))
    for m in range(5, 11):
        out.append(tight_family(m))
        out.append(three_connected_family(m, verify=False))
    out.append(tight_family(5).without(["a0", "b0"]))
    out.append(three_connected_family(5).without(["a0"]))
    out.append(three_connected_family(5).without(["a0", "b0"]))
    out += [near_sixty_chain(30, 1), vertical_stack(25, 1)]
    return out


@pytest.fixture(scope="module")
def corpus():
    sets = _corpus()
    return [(ps, build_cone_minimum(ps, "down"), build_cone_minimum(ps, "up")) for ps in sets]


def test_criterion_1_oracle_equivalence():
    rng = np.random.default_rng(1)
    t0 = time.perf_counter()
    mismatches = 0
    trials = 500
    for _ in range(trials):
        n = int(rng.integers(2, 61))
        ps = random_general_position(n, int(rng.integers(0, 2**31)))
        for f in ("down", "up"):
            if build_cone_minimum(ps, f).edges != build_oracle(ps, f).edges:
                mismatches += 1
    dt = time.perf_counter() - t0
    ok = mismatches == 0 and dt < 120
    record(1, "cone-minimum == oracle on 500 random sets, both flavors", ok, f"mismatches={mismatches}, {dt:.1f}s")
    assert ok


def test_criterion_2_theorem2(corpus):
    worst = None
    bad = 0
    for ps, down, _ in corpus:
        size = max_matching(down).size
        slack = size - theorem2_bound(len(ps))
        worst = slack if worst is None else min(worst, slack)
        bad += slack < 0
    ok = bad == 0
    record(2, "max matching of G_down >= ceil((n-2)/3)", ok, f"{len(corpus)} instances, min slack={worst}")
    assert ok


def test_criterion_3_tightness():
    sizes = {m: max_matching(build_cone_minimum(tight_family(m), "down")).size for m in range(5, 11)}
    ok = all(sizes[m] == -(-(3 * m - 2) // 3) for m in sizes)
    ps13 = tight_family(5).without(["a0", "b0"])
    m13 = max_matching(build_cone_minimum(ps13, "down")).size
    ok = ok and len(tight_family(5)) == 15 and sizes[5] == 5 and len(ps13) == 13 and m13 == 4
    record(3, "tight family matching exactly ceil((n-2)/3)", ok, f"m=5..10 -> {list(sizes.values())}, n=13 -> {m13}")
    assert ok


def test_criterion_4_three_connected():
    details = []
    ok = True
    base = three_connected_family(5)
    for drop in ([], ["a0"], ["a0", "b0"]):
        ps = base.without(drop) if drop else base
        g = build_cone_minimum(ps, "down")
        size = max_matching(g).size
        want = -(-(len(ps) + 5) // 3)
        conn = is_k_connected(g, 3)
        ok = ok and conn and size == want
        details.append(f"n={len(ps)} M={size}/{want} 3conn={int(conn)}")
    ok = ok and len(base) == 18 and max_matching(build_cone_minimum(base, "down")).size == 8
    record(4, "3-connected family and variants", ok, "; ".join(details))
    assert ok


def test_criterion_5_structural_lemmas(corpus):
    t0 = time.perf_counter()
    v = dict.fromkeys("abcdefgh", 0)
    for ps, down, up in corpus:
        union = union_graph(down, up)
        if not check_planarity_by_segments(down):
            v["a"] += 1
        if not down.is_connected() or first_pair_without_triangle_path(down) is not None:
            v["b"] += 1
        if len(ps) >= 3 and len(degree_one_census(down)) > 3:
            v["c"] += 1
        try:
            e = embed(down)
        except PlanarityError:
            v["d"] += 1
            v["e"] += 1
            e = None
        if e is not None:
            if not check_internal_triangulation(e):
                v["d"] += 1
            if not check_cut_vertices_on_outer_face(e, block_cut_tree(down)):
                v["e"] += 1
        if len(ps) >= 3 and len(degree_one_census(union)) > 2:
            v["f"] += 1
        bcu = block_cut_tree(union)
        if cut_vertex_violations(union, bcu):
            v["g"] += 1
        if not bcu.is_path():
            v["h"] += 1
    dt = time.perf_counter() - t0
    ok = not any(v.values()) and dt < 300
    record(5, "structural lemma suite (a)-(h)", ok,
           f"violations {' '.join(f'{k}={n}' for k, n in v.items())}, {dt:.1f}s")
    assert ok


def test_criterion_6_edge_bounds(corpus):
    bad_union = bad_inter = bad_tree = 0
    for ps, down, up in corpus:
        n = len(ps)
        union = union_graph(down, up)
        inter = intersect_graph(down, up)
        if n >= 3 and len(union.edges) > 5 * n - 11:
            bad_union += 1
        if len(inter.edges) < n - 1 or not inter.is_connected():
            bad_inter += 1
        tree = hexagon_growth_tree(ps, down, up)
        if len(tree) != n - 1 or not all(inter.has_edge(a, b) for a, b in tree):
            bad_tree += 1
    ok = bad_union == bad_inter == bad_tree == 0
    record(6, "|E(union)| <= 5n-11, intersection connected, hexagon tree", ok,
           f"violations union={bad_union} intersection={bad_inter} tree={bad_tree}")
    assert ok


def test_criterion_7_augmentation(corpus):
    fails = {"min_degree_3": 0, "two_connected": 0, "planar": 0, "vertex_count": 0, "transfer": 0, "nishizeki": 0}
    count = 0
    for ps, down, _ in corpus:
        if len(ps) < 3:
            continue
        count += 1
        a = augment(down)
        r = verify_augmented(a)
        for name, good in r.checks.items():
            fails[name] += not good
        mp = max_matching(a.graph)
        m = transfer_matching(a, mp)
        fails["transfer"] += not (max_matching(down).size >= m.size >= mp.size - len(a.added_vertices))
        rep = check_nishizeki(a.graph, strict=False, planar=r.checks["planar"])
        fails["nishizeki"] += not (rep.preconditions_ok and rep.holds)
    ok = not any(fails.values())
    record(7, "augmentation checks, matching transfer, Nishizeki bounds", ok,
           f"{count} instances, failures {' '.join(f'{k}={n}' for k, n in fails.items())}")
    assert ok


def test_criterion_8_blossom_vs_brute_force():
    rng = np.random.default_rng(8)
    checked = 0
    bad = 0
    while checked < 240:
        n = int(rng.integers(2, 13))
        ps = random_general_position(n, int(rng.integers(0, 2**31)))
        down, up = build_cone_minimum(ps, "down"), build_cone_minimum(ps, "up")
        for g in (down, up, union_graph(down, up), intersect_graph(down, up)):
            checked += 1
            bad += max_matching(g).size != brute_force_matching(g).size
    for m in (3, 4):
        g = build_cone_minimum(random_general_position(12, m), "down")
        checked += 1
        bad += max_matching(g).size != brute_force_matching(g).size
    ok = bad == 0 and checked >= 200
    record(8, "blossom == brute force on graphs with n <= 12", ok, f"{checked} graphs, mismatches={bad}")
    assert ok


def test_criterion_9_conjecture_sweep():
    t0 = time.perf_counter()
    with tempfile.TemporaryDirectory() as d:
        rep = conjecture_search(1000, 4, 40, seed=9, dump_dir=d)
    dt = time.perf_counter() - t0
    record(9, "floor(n/2) sweep on the union graph (report only)", True,
           f"trials={rep.trials} counterexamples={len(rep.counterexamples)} perfect={rep.perfect} "
           f"slack min/mean/max={rep.slack_min}/{rep.slack_mean:.3f}/{rep.slack_max}, {dt:.1f}s")
    assert rep.trials == 1000


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
