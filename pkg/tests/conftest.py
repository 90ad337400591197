"""Independent oracles and instance builders shared by the test modules."""

from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from cdfree.graph import Graph


def graph_from(n, edges):
    return Graph.from_edges(n, edges)


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def adjacency_sets(g):
    return [set(g.adj[v]) for v in range(g.n)]


def is_c4_diamond_free(g):
    """Pairwise definition: nonadjacent vertices share at most one neighbour."""
    a = adjacency_sets(g)
    return all(y in a[x] or len(a[x] & a[y]) <= 1 for x, y in combinations(range(g.n), 2))


def all_pairs_distances(g):
    """Floyd-Warshall style relaxation, independent of any BFS code."""
    inf = float("inf")
    d = [[0 if i == j else (1 if j in g.adj[i] else inf) for j in range(g.n)] for i in range(g.n)]
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def has_induced_p3(g, vertices):
    a = adjacency_sets(g)
    for x, y, z in permutations(vertices, 3):
        if x < z and y in a[x] and y in a[z] and z not in a[x]:
            return True
    return False


def _edge_sets_of(n, edges):
    out = set()
    for perm in permutations(range(n)):
        out.add(frozenset(frozenset((perm[u], perm[v])) for u, v in edges))
    return out


_HOUSES = _edge_sets_of(5, [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)])
_DIAMONDS = _edge_sets_of(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def _induced(a, vs):
    idx = {v: i for i, v in enumerate(vs)}
    return frozenset(frozenset((idx[u], idx[w])) for u, w in combinations(vs, 2) if w in a[u])


def is_house_diamond_free(g):
    a = adjacency_sets(g)
    return not any(_induced(a, vs) in _DIAMONDS for vs in combinations(range(g.n), 4)) and not any(
        _induced(a, vs) in _HOUSES for vs in combinations(range(g.n), 5)
    )


def random_house_diamond_free(n, seed, density=0.5):
    """Greedy random (house, diamond)-free graph; rejects edges that create an
    induced house or diamond through the new edge. Small n only."""
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    a = [set() for _ in range(n)]
    for u, v in pairs:
        if rng.random() > density:
            continue
        a[u].add(v)
        a[v].add(u)
        rest = [w for w in range(n) if w not in (u, v)]
        bad = any(_induced(a, (u, v, *c)) in _DIAMONDS for c in combinations(rest, 2)) or any(
            _induced(a, (u, v, *c)) in _HOUSES for c in combinations(rest, 3)
        )
        if bad:
            a[u].discard(v)
            a[v].discard(u)
    return Graph(n, [sorted(s) for s in a])


def maximal_cliques_by_subsets(g):
    """Exhaustive over all vertex subsets; n <= 12 only."""
    a = adjacency_sets(g)
    cliques = []
    for mask in range(1, 1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if all(w in a[u] for u, w in combinations(vs, 2)):
            cliques.append(frozenset(vs))
    return {c for c in cliques if not any(c < d for d in cliques)}


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@pytest.fixture
def c4():
    return graph_from(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def diamond():
    return graph_from(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
