"""Immutable simple undirected graphs, edge-list I/O, BFS layering and
the disjoint-union-of-cliques check used by every algorithm in the package.
"""

from __future__ import annotations

import sys
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence


class ParseError(ValueError):
    """Raised for malformed edge-list input; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class NotInClass(ValueError):
    """The input contradicts the structure promised by the graph class."""


class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with sorted adjacency.

    Build one with :meth:`from_edges`; instances are never mutated.
    """

    __slots__ = ("n", "adj", "m", "_sets")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        if n < 0 or len(adj) != n:
            raise ValueError("adjacency must have exactly n rows")
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in adj)
        total = 0
        for u, row in enumerate(self.adj):
            for i, v in enumerate(row):
                if not 0 <= v < n or v == u or (i and row[i - 1] >= v):
                    raise ValueError(f"bad adjacency row for vertex {u}")
            total += len(row)
        if total % 2:
            raise ValueError("adjacency is not symmetric")
        self.m = total // 2
        self._sets: tuple[frozenset[int], ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, [sorted(r) for r in rows])

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [()] * n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range [0, {self.n})")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        if self._sets is None:
            self._sets = tuple(frozenset(row) for row in self.adj)
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(r) for r in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        """Binary search in the sorted adjacency of ``u``."""
        self._check(u)
        self._check(v)
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in row[bisect_left(row, u):]:
                yield u, v

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        return induced_subgraph(self, vertices)


def adjacency_query(g: Graph, u: int, v: int) -> bool:
    return g.has_edge(u, v)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` (ascending old id) and the
    old-to-new id mapping."""
    keep = sorted(set(vertices))
    for v in keep:
        g._check(v)
    mapping = {old: new for new, old in enumerate(keep)}
    adj = [[mapping[u] for u in g.adj[old] if u in mapping] for old in keep]
    return Graph(len(keep), adj), mapping


def common_neighbors(g: Graph, u: int, v: int) -> list[int]:
    """Sorted-list merge of N(u) and N(v)."""
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    g._check(u)
    g._check(v)
    a, b = g.adj[u], g.adj[v]
    i = j = 0
    out = []
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            out.append(a[i])
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return out


# --- edge-list text format -------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header plus ``u v`` edge-line format.

    Lines starting with ``#`` and blank lines are ignored. Duplicate edge
    lines collapse into one edge, but the header's ``m`` must equal the
    number of distinct edges.
    """
    header: tuple[int, int] | None = None
    header_line = 0
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(lineno, f"expected two non-negative integers, got {raw!r}")
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            header, header_line = (a, b), lineno
            continue
        n = header[0]
        if a >= n or b >= n:
            raise ParseError(lineno, f"vertex id out of range for n={n}: {raw!r}")
        if a == b:
            raise ParseError(lineno, f"self-loop at vertex {a}")
        edges.add((a, b) if a < b else (b, a))
    if header is None:
        raise ParseError(0, "missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(header_line, f"header declares m={m} but input has {len(edges)} distinct edges")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph, comment: str | None = None) -> str:
    """Canonical edge-list text: optional ``#`` lines, header, sorted edges."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# --- BFS -------------------------------------------------------------------

@dataclass
class BfsLayers:
    root: int
    layers: list[list[int]]
    layer_of: dict[int, int] = field(default_factory=dict)
    parent: dict[int, int] = field(default_factory=dict)

    def layer(self, i: int) -> list[int]:
        return self.layers[i] if i < len(self.layers) else []


def bfs_layers(g: Graph, root: int, max_depth: int, alive: Sequence[bool] | None = None) -> BfsLayers:
    """Distance classes from ``root`` up to ``max_depth``.

    Each layer is scanned in ascending id order, so the recorded parent of a
    vertex is its smallest-id neighbour in the previous layer. With ``alive``
    given, dead vertices are invisible.
    """
    g._check(root)
    if max_depth < 0:
        raise ValueError("max_depth must be non-negative")
    layer_of = {root: 0}
    parent: dict[int, int] = {}
    layers = [[root]]
    adj = g.adj
    for depth in range(1, max_depth + 1):
        nxt = []
        for u in layers[-1]:
            for w in adj[u]:
                if w not in layer_of and (alive is None or alive[w]):
                    layer_of[w] = depth
                    parent[w] = u
                    nxt.append(w)
        if not nxt:
            break
        nxt.sort()
        layers.append(nxt)
    return BfsLayers(root, layers, layer_of, parent)


def bfs_distances(g: Graph, root: int) -> list[int]:
    """Plain all-depth BFS; -1 for unreachable vertices."""
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# --- disjoint union of cliques ---------------------------------------------

class P3(NamedTuple):
    """Induced path ``a - center - c`` (``a`` and ``c`` nonadjacent)."""

    a: int
    center: int
    c: int


@dataclass(frozen=True)
class CliquePartition:
    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


def disjoint_clique_partition(g: Graph, vertices: Iterable[int]) -> CliquePartition | P3:
    """Split ``G[S]`` into connected components and verify each is complete.

    Returns the partition (blocks ascending, ordered by smallest member) or an
    induced P3 inside ``S`` when some component is not a clique.
    """
    member_set = set(vertices)
    members = sorted(member_set)
    label: dict[int, int] = {}
    adj = g.adj
    blocks = []
    for s in members:
        if s in label:
            continue
        comp = [s]
        label[s] = s
        i = 0
        while i < len(comp):
            for w in adj[comp[i]]:
                if w not in label and w in member_set:
                    label[w] = s
                    comp.append(w)
            i += 1
        size = len(comp)
        if size > 2:
            for u in comp:
                inside = sum(1 for w in adj[u] if label.get(w) == s)
                if inside != size - 1:
                    return _p3_from(g, u, set(comp))
        blocks.append(tuple(sorted(comp)))
    return CliquePartition(tuple(blocks))


def _p3_from(g: Graph, start: int, comp: set[int]) -> P3:
    # start has a non-neighbour in its connected component, so BFS inside the
    # component reaches depth 2; the first such vertex closes an induced P3.
    seen = {start: None}
    frontier = sorted(w for w in g.adj[start] if w in comp)
    for w in frontier:
        seen[w] = start
    for mid in frontier:
        for z in g.adj[mid]:
            if z in comp and z not in seen:
                return P3(start, mid, z)
    raise AssertionError("component is connected but no P3 found")
