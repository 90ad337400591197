"""Recognition of (C4, diamond)-free graphs.

A graph is in the class iff every nonadjacent pair has at most one common
neighbour. Three engines decide membership:

* :func:`recognize_naive` checks every nonadjacent pair directly (the oracle);
* :func:`recognize_mdelta` runs a depth-2 search from every vertex, O(m * Delta);
* :func:`recognize_threshold` first discards high-degree balls with a depth-3
  search and local checks, then finishes with the depth-2 scan. With the
  default threshold ``ceil(m ** (1/3))`` this is O(m^(2/3) n).

All engines return a :class:`Verdict`; forbidden verdicts carry four vertices
inducing a C4 or a diamond.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .graph import P3, Graph, bfs_layers, disjoint_clique_partition


class Kind(Enum):
    C4 = "C4"
    DIAMOND = "DIAMOND"
    NEITHER = "NEITHER"


@dataclass(frozen=True)
class Verdict:
    kind: Kind | None = None
    witness: tuple[int, int, int, int] | None = None

    @property
    def free(self) -> bool:
        return self.kind is None

    def __str__(self) -> str:
        if self.kind is None:
            return "FREE"
        return " ".join([self.kind.value, *map(str, self.witness)])


FREE = Verdict()


@dataclass(frozen=True)
class RecognitionConfig:
    f: int

    def __post_init__(self):
        if self.f < 1:
            raise ValueError(f"degree threshold must be >= 1, got {self.f}")


@dataclass(frozen=True)
class BallDeleted:
    count: int


def ceil_cbrt(m: int) -> int:
    """Smallest k >= 0 with k**3 >= m, exact for all integers."""
    k = round(m ** (1 / 3)) if m > 0 else 0
    while k ** 3 < m:
        k += 1
    while k > 0 and (k - 1) ** 3 >= m:
        k -= 1
    return k


def default_threshold(m: int) -> int:
    return max(1, ceil_cbrt(m))


def _forbidden(g: Graph, x: int, y: int, a: int, b: int) -> Verdict:
    # x, y nonadjacent with common neighbours a, b
    kind = Kind.DIAMOND if b in g.neighbor_set(a) else Kind.C4
    return Verdict(kind, (x, y, a, b))


def find_witness_kind(g: Graph, four: Sequence[int]) -> Kind:
    if len(four) != 4 or len(set(four)) != 4:
        raise ValueError(f"need four distinct vertices, got {tuple(four)}")
    deg = dict.fromkeys(four, 0)
    edges = 0
    for i, u in enumerate(four):
        for w in four[i + 1:]:
            if g.has_edge(u, w):
                edges += 1
                deg[u] += 1
                deg[w] += 1
    if edges == 4 and all(d == 2 for d in deg.values()):
        return Kind.C4
    if edges == 5:
        return Kind.DIAMOND
    return Kind.NEITHER


def recognize_naive(g: Graph) -> Verdict:
    """Check every nonadjacent pair for two or more common neighbours."""
    sets = [g.neighbor_set(v) for v in range(g.n)]
    for x in range(g.n):
        nx = sets[x]
        for y in range(x + 1, g.n):
            if y in nx:
                continue
            common = nx & sets[y]
            if len(common) >= 2:
                a, b = sorted(common)[:2]
                return _forbidden(g, x, y, a, b)
    return FREE


def _depth_two_scan(g: Graph, roots: Iterable[int], alive: Sequence[bool] | None = None) -> Verdict:
    adj = g.adj
    for v in roots:
        near = {w for w in adj[v] if alive is None or alive[w]}
        first: dict[int, int] = {}
        for w in adj[v]:
            if w not in near:
                continue
            for u in adj[w]:
                if u == v or u in near or (alive is not None and not alive[u]):
                    continue
                a = first.get(u)
                if a is None:
                    first[u] = w
                else:
                    return _forbidden(g, v, u, a, w)
    return FREE


def recognize_mdelta(g: Graph) -> Verdict:
    """Search to depth 2 from each vertex; stop at the first distance-2 vertex
    reached from two different neighbours."""
    return _depth_two_scan(g, range(g.n))


class PrunableGraph:
    """Scratch view of a graph supporting ball deletion via liveness flags."""

    def __init__(self, base: Graph):
        self.base = base
        self.alive = [True] * base.n
        self.live_degree = [len(row) for row in base.adj]

    def live_neighbors(self, v: int) -> list[int]:
        alive = self.alive
        return [w for w in self.base.adj[v] if alive[w]]

    def live_vertices(self) -> list[int]:
        return [v for v, a in enumerate(self.alive) if a]

    def delete(self, vertices: Iterable[int]) -> None:
        adj, deg = self.base.adj, self.live_degree
        for v in vertices:
            self.alive[v] = False
            for w in adj[v]:
                deg[w] -= 1

    def max_degree_vertex(self) -> tuple[int, int] | None:
        """Live vertex of maximum live degree (smallest id on ties)."""
        best = None
        best_deg = -1
        for v, a in enumerate(self.alive):
            if a and self.live_degree[v] > best_deg:
                best, best_deg = v, self.live_degree[v]
        return None if best is None else (best, best_deg)


def prune_ball_check(pg: PrunableGraph, v: int) -> Verdict | BallDeleted:
    """Depth-3 search from ``v`` with the local checks that certify that no
    vertex of ``{v} | N(v)`` lies in an induced C4 or diamond.

    Returns a forbidden verdict as soon as a check fails, otherwise deletes
    the ball from ``pg``.
    """
    if not pg.alive[v]:
        raise ValueError(f"vertex {v} is not live")
    g = pg.base
    adj = g.adj
    bfs = bfs_layers(g, v, 3, pg.alive)
    layer, parent = bfs.layer_of, bfs.parent
    l1, l2, l3 = bfs.layer(1), bfs.layer(2), bfs.layer(3)

    # (a) N(v) is a disjoint union of cliques
    part = disjoint_clique_partition(g, l1)
    if isinstance(part, P3):
        return _forbidden(g, part.a, part.c, part.center, v)
    block_of = {u: i for i, blk in enumerate(part.blocks) for u in blk}

    # (b) no L2 vertex sees two L1 vertices
    for z in l2:
        ups = [w for w in adj[z] if layer.get(w) == 1]
        if len(ups) >= 2:
            return _forbidden(g, v, z, ups[0], ups[1])

    # (c) the L2-neighbourhood of each w in L1 is a disjoint union of cliques;
    # after (b) it is exactly the set of BFS children of w
    children: dict[int, list[int]] = {w: [] for w in l1}
    for z in l2:
        children[parent[z]].append(z)
    for w in l1:
        kids = children[w]
        if len(kids) >= 3:
            part = disjoint_clique_partition(g, kids)
            if isinstance(part, P3):
                return _forbidden(g, part.a, part.c, part.center, w)

    # (d) an L2 edge xy whose parents are distinct but adjacent closes a C4
    for x in l2:
        px = parent[x]
        for y in adj[x]:
            if y > x and layer.get(y) == 2:
                py = parent[y]
                if px != py and block_of[px] == block_of[py]:
                    return _forbidden(g, px, y, x, py)

    # (e) x in L2 sees two children a, b of some w != parent(x)
    for x in l2:
        px = parent[x]
        last: dict[int, int] = {}
        for a in adj[x]:
            if layer.get(a) != 2:
                continue
            pa = parent[a]
            if pa == px:
                continue
            if pa in last:
                return _forbidden(g, pa, x, last[pa], a)
            last[pa] = a

    # (f) z in L3 sees two children of the same w in L1; two L2 neighbours
    # with different parents are harmless (C6 is in the class)
    for z in l3:
        last = {}
        for a in adj[z]:
            if layer.get(a) != 2:
                continue
            pa = parent[a]
            if pa in last:
                return _forbidden(g, pa, z, last[pa], a)
            last[pa] = a

    ball = [v, *l1]
    pg.delete(ball)
    return BallDeleted(len(ball))


def recognize_threshold(g: Graph, cfg: RecognitionConfig | None = None) -> Verdict:
    """Delete balls around maximum-degree vertices while the live maximum
    degree exceeds ``f``, then run the depth-2 scan on what is left.

    ``f`` is fixed once from the input edge count when ``cfg`` is omitted.
    """
    f = cfg.f if cfg is not None else default_threshold(g.m)
    pg = PrunableGraph(g)
    while True:
        top = pg.max_degree_vertex()
        if top is None or top[1] <= f:
            break
        res = prune_ball_check(pg, top[0])
        if isinstance(res, Verdict):
            return res
    return _depth_two_scan(g, pg.live_vertices(), pg.alive)


ENGINES = {
    "naive": recognize_naive,
    "mdelta": recognize_mdelta,
    "threshold": recognize_threshold,
}


def recognize(g: Graph, engine: str = "threshold", f: int | None = None) -> Verdict:
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
    if engine == "threshold":
        return recognize_threshold(g, RecognitionConfig(f) if f is not None else None)
    if f is not None:
        raise ValueError("--f only applies to the threshold engine")
    return ENGINES[engine](g)
