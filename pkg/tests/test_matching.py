import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import point_sets, pts
from tripts.generators import random_general_position, tight_family
from tripts.graphs import SimpleGraph, build
from tripts.matching import (
    BoundViolation,
    Matching,
    PreconditionError,
    brute_force_matching,
    check_nishizeki,
    check_theorem2,
    has_augmenting_path,
    max_matching,
    nishizeki_bound,
    theorem2_bound,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph(n, edges)


def K(n):
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@pytest.mark.parametrize(
    "g,size",
    [
        (SimpleGraph(2, [(0, 1)]), 1),
        (SimpleGraph(4, [(0, 1), (1, 2), (2, 3)]), 2),
        (SimpleGraph(0, []), 0),
        (SimpleGraph(5, []), 0),
        (K(3), 1),
        (K(4), 2),
        (K(7), 3),
    ],
)
def test_small_sizes(g, size):
    assert max_matching(g).size == size
    assert brute_force_matching(g).size == size


def test_odd_cycle_blossom():
    # 5-cycle with a pendant: needs blossom contraction
    g = SimpleGraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5)])
    assert max_matching(g).size == 3


@given(graphs())
def test_blossom_equals_brute_force(g):
    m = max_matching(g)
    assert m.size == brute_force_matching(g).size
    assert not has_augmenting_path(g, m)


@given(graphs(max_n=30))
def test_blossom_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    assert max_matching(g).size == len(nx.max_weight_matching(h, maxcardinality=True))


def test_deterministic():
    g = build(random_general_position(40, 3), "union")
    assert max_matching(g) == max_matching(g)


def test_brute_force_guard():
    with pytest.raises(ValueError):
        brute_force_matching(SimpleGraph(15, []))


def test_validate():
    g = SimpleGraph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        Matching(frozenset({(0, 1), (1, 2)})).validate(g)
    with pytest.raises(ValueError):
        Matching(frozenset({(0, 2)})).validate(g)


def test_augmenting_path_found_for_non_maximum():
    g = SimpleGraph(4, [(0, 1), (1, 2), (2, 3)])
    assert has_augmenting_path(g, Matching(frozenset({(1, 2)})))


def test_bounds():
    assert [theorem2_bound(n) for n in (0, 1, 2, 3, 5, 15, 13)] == [0, 0, 0, 1, 1, 5, 4]
    assert nishizeki_bound(4, True) == (2, "floor(n/2)")
    assert nishizeki_bound(12, True) == (6, "floor(n/2)")
    assert nishizeki_bound(14, True)[0] == 6
    assert nishizeki_bound(10, False)[0] == 4
    assert nishizeki_bound(9, False)[0] == 4


def test_theorem2_examples():
    assert check_theorem2(pts((0, 0), (1, 3))).matching_size == 1
    rep = check_theorem2(tight_family(5))
    assert (rep.n, rep.matching_size, rep.bound, rep.slack) == (15, 5, 5, 0)


def test_theorem2_violation_is_loud():
    ps = random_general_position(9, 0)
    with pytest.raises(BoundViolation):
        check_theorem2(ps, graph=SimpleGraph(9, []))
    assert not check_theorem2(ps, strict=False, graph=SimpleGraph(9, [])).holds


@given(point_sets(max_size=40))
def test_theorem2_random(ps):
    assert check_theorem2(ps).holds


def test_nishizeki_k4_and_icosahedron():
    r = check_nishizeki(K(4))
    assert (r.bound, r.matching_size, r.two_connected) == (2, 2, True)
    ico = nx.icosahedral_graph()
    g = SimpleGraph(12, ico.edges)
    r = check_nishizeki(g)
    assert (r.min_degree, r.bound, r.matching_size) == (5, 6, 6)


def test_nishizeki_preconditions():
    with pytest.raises(PreconditionError):
        check_nishizeki(SimpleGraph(3, [(0, 1), (1, 2)]))
    assert not check_nishizeki(SimpleGraph(3, [(0, 1), (1, 2)]), strict=False).preconditions_ok
