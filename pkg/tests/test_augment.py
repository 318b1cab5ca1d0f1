import pytest
from hypothesis import given

from conftest import point_sets, pts
from tripts.augment import augment, transfer_matching, verify_augmented
from tripts.generators import random_general_position, three_connected_family, tight_family
from tripts.graphs import TriGraph, build
from tripts.matching import check_nishizeki, max_matching, theorem2_bound
from tripts.structure import degree_one_census


def _pipeline(g):
    a = augment(g)
    r = verify_augmented(a)
    assert r.ok, r.failures()
    mp = max_matching(a.graph)
    m = transfer_matching(a, mp)
    assert max_matching(g).size >= m.size >= mp.size - len(a.added_vertices)
    check_nishizeki(a.graph)
    return a


def test_triangle_becomes_k4():
    ps = pts((0, 0), (4, 1), (1, 3))
    g = TriGraph.on(ps, [(0, 1), (1, 2), (0, 2)], "down")
    a = _pipeline(g)
    assert a.k == 0 and len(a.added_vertices) == 1
    assert len(a.graph.edges) == 6 and a.n_prime == 4


def test_k3_star(star4):
    g = build(star4, "down")
    a = _pipeline(g)
    assert a.k == 3 and len(a.added_vertices) == 3
    xs = a.added_vertices
    for i in range(3):
        assert a.graph.has_edge(xs[i], xs[(i + 1) % 3])
    deg = a.graph.degrees()
    assert all(deg[p] == 3 for p in degree_one_census(g))


def test_k2_single_cycle_edge():
    g = build(tight_family(5), "down")
    a = _pipeline(g)
    assert a.k == 2
    x0, x1 = a.added_vertices
    assert a.graph.has_edge(x0, x1)
    assert sum(1 for e in a.added_edges if set(e) == {x0, x1}) == 1


def test_k1_adds_x_and_y():
    for s in range(200):
        g = build(random_general_position(10, s), "down")
        if len(degree_one_census(g)) == 1:
            a = _pipeline(g)
            assert len(a.added_vertices) == 2 and a.n_prime == g.n + 2
            return
    pytest.fail("no k=1 instance in the search range")


def test_dense_k0():
    g = build(three_connected_family(5), "down")
    a = _pipeline(g)
    assert a.k == 0 and len(a.added_vertices) == 1


def test_random_20_nishizeki_case():
    g = build(random_general_position(20, 1), "down")
    a = _pipeline(g)
    r = check_nishizeki(a.graph)
    assert r.two_connected and r.case == "ceil((n+4)/3)"


def test_base_edges_untouched():
    g = build(random_general_position(25, 3), "down")
    a = augment(g)
    assert g.edges <= a.graph.edges
    extra = set(a.added_vertices)
    assert all(u in extra or v in extra for u, v in a.added_edges)


def test_preconditions():
    with pytest.raises(ValueError):
        augment(build(pts((0, 0), (1, 1)), "down"))


@given(point_sets(min_size=3, max_size=30))
def test_augmentation_property(ps):
    g = build(ps, "down")
    a = _pipeline(g)
    # removing the added vertices from M' recovers the base bound
    mp = max_matching(a.graph).size
    assert max_matching(g).size >= max(theorem2_bound(g.n), mp - len(a.added_vertices))
