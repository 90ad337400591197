"""Maximal cliques in diamond-free and (house, diamond)-free graphs.

In a diamond-free graph every neighbourhood is a disjoint union of cliques,
so the maximal cliques through ``v`` are ``{v} | B`` for the blocks ``B`` of
``G[N(v)]``. Everything here builds on that fact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import P3, Graph, NotInClass, bfs_layers, disjoint_clique_partition
from .recognition import PrunableGraph, RecognitionConfig, default_threshold

BRUTE_FORCE_LIMIT = 40


class NotDiamondFree(NotInClass):
    def __init__(self, witness: P3):
        super().__init__(f"neighbourhood contains induced P3 {tuple(witness)}; graph is not diamond-free")
        self.witness = witness


@dataclass(frozen=True)
class CliqueSet:
    """Deduplicated maximal cliques as ascending tuples, sorted lexicographically."""

    cliques: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, cliques: Iterable[Iterable[int]]) -> CliqueSet:
        return cls(tuple(sorted({tuple(sorted(c)) for c in cliques})))

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.cliques)

    def __len__(self) -> int:
        return len(self.cliques)

    def __contains__(self, clique: object) -> bool:
        return tuple(sorted(clique)) in set(self.cliques)

    @property
    def size_sum(self) -> int:
        return sum(len(c) for c in self.cliques)

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.cliques}


@dataclass(frozen=True)
class CliqueStats:
    count: int
    size_sum: int


def _blocks(g: Graph, vertices: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    part = disjoint_clique_partition(g, vertices)
    if isinstance(part, P3):
        raise NotDiamondFree(part)
    return part.blocks


def _live(g: Graph, v: int, alive: Sequence[bool] | None) -> Sequence[int]:
    if alive is None:
        return g.adj[v]
    return [w for w in g.adj[v] if alive[w]]


def cliques_at_vertex(g: Graph, v: int, alive: Sequence[bool] | None = None) -> CliqueSet:
    """Maximal cliques containing ``v`` (in the live subgraph if ``alive`` is given)."""
    nbrs = _live(g, v, alive)
    if not nbrs:
        return CliqueSet(((v,),))
    return CliqueSet.of((v, *b) for b in _blocks(g, nbrs))


def cliques_touching_ball(g: Graph, v: int, alive: Sequence[bool] | None = None) -> CliqueSet:
    """All maximal cliques meeting ``{v} | N(v)`` in a (house, diamond)-free graph.

    Linear time: the blocks of ``N(v)`` give the cliques through ``v``; each
    remaining clique is ``{x} | R`` for ``x`` in ``N(v)`` and ``R`` a block of
    ``N(x)`` restricted to the second layer. Second-layer vertices seeing two
    or more first-layer vertices are necessarily isolated there.
    """
    bfs = bfs_layers(g, v, 2, alive)
    layer = bfs.layer_of
    n1, n2 = bfs.layer(1), bfs.layer(2)
    if not n1:
        return CliqueSet(((v,),))
    out = [(v, *b) for b in _blocks(g, n1)]

    adj = g.adj
    ups = dict.fromkeys(n2, 0)
    for x in n1:
        for y in adj[x]:
            if layer.get(y) == 2:
                ups[y] += 1
    multi = {y for y, c in ups.items() if c >= 2}

    for x in n1:
        ax = [y for y in adj[x] if layer.get(y) == 2]
        if not ax:
            continue
        ax_set = set(ax)
        plain = []
        for y in ax:
            if y in multi:
                out.append((x, y))
            else:
                plain.append(y)
        if not plain:
            continue
        for y in plain:
            for z in adj[y]:
                if z in multi and z in ax_set:
                    raise NotInClass(
                        f"vertices {y} and {z} are adjacent in the second layer below {x}; "
                        f"graph is not (house, diamond)-free"
                    )
        out.extend((x, *r) for r in _blocks(g, plain))
    return CliqueSet.of(out)


def enumerate_maximal_cliques(g: Graph) -> CliqueSet:
    """Every maximal clique of a diamond-free graph, each emitted once from its
    smallest vertex."""
    out = []
    for v in range(g.n):
        nbrs = g.adj[v]
        if not nbrs:
            out.append((v,))
            continue
        if nbrs[-1] < v:
            continue
        for b in _blocks(g, nbrs):
            if b[0] > v:
                out.append((v, *b))
    return CliqueSet.of(out)


def clique_stats(g: Graph) -> CliqueStats:
    cs = enumerate_maximal_cliques(g)
    return CliqueStats(len(cs), cs.size_sum)


def max_clique(g: Graph, cfg: RecognitionConfig | None = None) -> tuple[int, ...]:
    """A largest clique of a (house, diamond)-free graph.

    High-degree balls are enumerated and deleted while the live maximum degree
    exceeds ``f``; the low-degree remainder is handled vertex by vertex.
    """
    if g.n == 0:
        return ()
    f = cfg.f if cfg is not None else default_threshold(g.m)
    pg = PrunableGraph(g)
    best: tuple[int, ...] = ()
    while True:
        top = pg.max_degree_vertex()
        if top is None or top[1] <= f:
            break
        v = top[0]
        for c in cliques_touching_ball(g, v, pg.alive):
            if len(c) > len(best):
                best = c
        pg.delete([v, *pg.live_neighbors(v)])
    for v in pg.live_vertices():
        for c in cliques_at_vertex(g, v, pg.alive):
            if len(c) > len(best):
                best = c
    return best


def cut_edge_count(g: Graph, v: int) -> int:
    """Edges from N(v) to vertices outside ``{v} | N(v)``."""
    near = g.neighbor_set(v)
    return sum(1 for w in near for x in g.adj[w] if x != v and x not in near)


def brute_force_cliques(g: Graph) -> CliqueSet:
    """Reference enumeration by plain Bron-Kerbosch on bitmasks (no pivoting)."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute-force enumeration is limited to n <= {BRUTE_FORCE_LIMIT}, got n={g.n}")
    masks = [sum(1 << w for w in row) for row in g.adj]
    found: list[tuple[int, ...]] = []

    def expand(r: list[int], p: int, x: int) -> None:
        if not p and not x:
            found.append(tuple(r))
            return
        while p:
            low = p & -p
            u = low.bit_length() - 1
            r.append(u)
            expand(r, p & masks[u], x & masks[u])
            r.pop()
            p ^= low
            x |= low

    if g.n:
        expand([], (1 << g.n) - 1, 0)
    return CliqueSet.of(found)
