from itertools import combinations

import pytest

from cdfree.generators import (
    UnsupportedOrder,
    named_graph,
    projective_plane_graph,
    projective_points,
    random_free_graph,
)
from cdfree.graph import serialize_graph
from cdfree.recognition import Kind, recognize_naive

from conftest import all_pairs_distances, is_c4_diamond_free

PRIMES = [2, 3, 5, 7, 11, 13]


def test_plane_p2_is_heawood():
    g = projective_plane_graph(2)
    assert (g.n, g.m) == (14, 21)
    assert {g.degree(v) for v in range(g.n)} == {3}
    # girth 6
    d = all_pairs_distances(g)
    assert all(
        d[u][v] == 1 or len(set(g.adj[u]) & set(g.adj[v])) <= 1 for u, v in combinations(range(14), 2)
    )


def test_plane_p3_counts():
    g = projective_plane_graph(3)
    assert (g.n, g.m) == (26, 52)
    assert {g.degree(v) for v in range(g.n)} == {4}
    assert recognize_naive(g).free


def test_plane_rejects_bad_orders():
    with pytest.raises(UnsupportedOrder, match="prime-power"):
        projective_plane_graph(4)
    with pytest.raises(ValueError):
        projective_plane_graph(1)


def test_points_are_normalized():
    pts = projective_points(3)
    assert len(pts) == 13 and pts == sorted(pts)
    assert pts[0] == (0, 0, 1) and pts[-1] == (1, 2, 2)


@pytest.mark.parametrize("p", PRIMES)
def test_plane_axioms(p):
    g = projective_plane_graph(p)
    q = p * p + p + 1
    assert g.n == 2 * q and g.m == q * (p + 1)
    sets = [set(g.adj[v]) for v in range(g.n)]
    assert all(len(s) == p + 1 for s in sets)
    for side in (range(q), range(q, 2 * q)):
        for a, b in combinations(side, 2):
            assert len(sets[a] & sets[b]) == 1
    assert recognize_naive(g).free


def test_named_graphs():
    d = named_graph("diamond")
    assert (d.n, d.m) == (4, 5)
    assert sorted((d.degree(v) for v in range(4)), reverse=True) == [3, 3, 2, 2]
    h = named_graph("house")
    assert (h.n, h.m) == (5, 6)
    pet = named_graph("petersen")
    assert (pet.n, pet.m) == (10, 15)
    assert {pet.degree(v) for v in range(10)} == {3}
    assert recognize_naive(pet).free
    assert named_graph("friendship", 3).n == 7
    assert named_graph("k_ab", 2, 3).m == 6
    assert named_graph("star", 4).m == 4
    assert named_graph("c_k", 7).m == 7
    assert named_graph("p_k", 1).m == 0
    assert named_graph("c4").m == 4


def test_petersen_girth_five():
    g = named_graph("petersen")
    for u, v in combinations(range(10), 2):
        common = set(g.adj[u]) & set(g.adj[v])
        assert len(common) == (0 if g.has_edge(u, v) else 1)


def test_house_contains_induced_c4():
    v = recognize_naive(named_graph("house"))
    assert v.kind is Kind.C4


def test_named_graph_errors():
    with pytest.raises(ValueError, match="supported"):
        named_graph("tesseract")
    with pytest.raises(ValueError):
        named_graph("star")


def test_random_small_cases():
    assert random_free_graph(1, 5, 0).n == 1
    assert random_free_graph(10, 0, 123).m == 0
    g = random_free_graph(20, 30, 42)
    assert g.n == 20 and g.m == 30
    assert recognize_naive(g).free


def test_random_graphs_stay_in_class():
    for seed in range(200):
        g = random_free_graph(5 + seed % 30, 2 * (5 + seed % 30), seed)
        assert is_c4_diamond_free(g)


def test_random_is_deterministic():
    a = serialize_graph(random_free_graph(30, 60, 99))
    b = serialize_graph(random_free_graph(30, 60, 99))
    assert a == b
    assert a != serialize_graph(random_free_graph(30, 60, 100))
