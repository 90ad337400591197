"""Instance factories: projective-plane incidence graphs, small named graphs
and seeded random (C4, diamond)-free graphs.

Named graph numbering:

* ``c4``: cycle 0-1-2-3-0.
* ``diamond``: K4 on 0..3 minus the edge 2-3.
* ``house``: complement of the path 0-1-2-3-4.
* ``p_k k``: path 0-1-...-(k-1); ``c_k k``: cycle on 0..k-1.
* ``k_n n``: complete graph; ``k_ab a b``: parts 0..a-1 and a..a+b-1.
* ``petersen``: outer cycle 0..4, spokes i-(i+5), inner pentagram 5+i ~ 5+(i+2)%5.
* ``friendship k``: centre 0 with triangles 0-(2i+1)-(2i+2).
* ``star k``: centre 0 with leaves 1..k.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from .graph import Graph

RNG_ID = "python-random-mt19937"


class UnsupportedOrder(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def projective_points(p: int) -> list[tuple[int, int, int]]:
    """Normalized homogeneous triples over GF(p) in lexicographic order.

    The first nonzero coordinate of each triple is 1.
    """
    return [t for t in product(range(p), repeat=3) if any(t) and next(c for c in t if c) == 1]


def projective_plane_graph(p: int) -> Graph:
    """Point/line incidence graph of PG(2, p) for prime ``p``.

    Vertices ``0..q-1`` are lines and ``q..2q-1`` points, ``q = p*p + p + 1``.
    """
    if p < 2:
        raise ValueError(f"order must be >= 2, got {p}")
    if not _is_prime(p):
        raise UnsupportedOrder(
            f"order {p} is not prime; prime-power orders need extension-field arithmetic and are not supported"
        )
    pts = projective_points(p)
    q = len(pts)
    edges = []
    for i, (a, b, c) in enumerate(pts):
        for j, (x, y, z) in enumerate(pts):
            if (a * x + b * y + c * z) % p == 0:
                edges.append((i, q + j))
    return Graph.from_edges(2 * q, edges)


def _cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def _path(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs k >= 1")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def _complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def _complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def _friendship(k: int) -> Graph:
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, edges)


def _star(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def _house() -> Graph:
    path = {(i, i + 1) for i in range(4)}
    return Graph.from_edges(5, [e for e in combinations(range(5), 2) if e not in path])


_NAMED = {
    "c4": (0, lambda: _cycle(4)),
    "diamond": (0, lambda: Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])),
    "house": (0, _house),
    "petersen": (0, _petersen),
    "p_k": (1, _path),
    "c_k": (1, _cycle),
    "k_n": (1, _complete),
    "k_ab": (2, _complete_bipartite),
    "friendship": (1, _friendship),
    "star": (1, _star),
}

NAMED_GRAPHS = tuple(_NAMED)


def named_graph(name: str, *args: int) -> Graph:
    if name not in _NAMED:
        raise ValueError(f"unknown graph {name!r}; supported: {', '.join(NAMED_GRAPHS)}")
    arity, build = _NAMED[name]
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} integer argument(s), got {len(args)}")
    return build(*(int(a) for a in args))


def random_free_graph(n: int, edge_budget: int, seed: int) -> Graph:
    """Greedy seeded (C4, diamond)-free graph.

    Candidate pairs are visited in an order shuffled by ``random.Random(seed)``;
    a pair is added when no nonadjacent pair ends up with two common
    neighbours. Stops after ``edge_budget`` additions.
    """
    if n < 1 or edge_budget < 0:
        raise ValueError("need n >= 1 and edge_budget >= 0")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    added = 0
    for u, v in pairs:
        if added >= edge_budget:
            break
        if _addable(nbrs, u, v):
            nbrs[u].add(v)
            nbrs[v].add(u)
            added += 1
    return Graph(n, [sorted(s) for s in nbrs])


def _addable(nbrs: list[set[int]], u: int, v: int) -> bool:
    # Adding uv gives the pair (u, w) the extra common neighbour v for every
    # w in N(v) not adjacent to u, and symmetrically.
    for a, b in ((u, v), (v, u)):
        na = nbrs[a]
        for w in nbrs[b]:
            if w not in na and not na.isdisjoint(nbrs[w]):
                return False
    return True
