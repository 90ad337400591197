"""Build validation without the test harness: exhaustive engine agreement on
small graphs plus randomized clique-structure and codec checks."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Iterator

from .cliques import (
    brute_force_cliques,
    cliques_at_vertex,
    cliques_touching_ball,
    cut_edge_count,
    enumerate_maximal_cliques,
    max_clique,
)
from .codec import decode_graph, encode_graph
from .generators import projective_plane_graph, random_free_graph
from .graph import Graph
from .recognition import RecognitionConfig, find_witness_kind, recognize_mdelta, recognize_naive, recognize_threshold


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def check_engine_agreement(max_n: int) -> str | None:
    for n in range(max_n + 1):
        for g in all_graphs(n):
            verdicts = [recognize_naive(g), recognize_mdelta(g)]
            verdicts += [recognize_threshold(g, RecognitionConfig(f)) for f in (1, 2, 3)]
            if len({v.free for v in verdicts}) != 1:
                return f"engines disagree on {list(g.edges())} (n={n})"
            for v in verdicts:
                if not v.free and find_witness_kind(g, v.witness) is not v.kind:
                    return f"invalid witness {v} on {list(g.edges())}"
    return None


def _random_instances(count: int, max_n: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        yield random_free_graph(n, rng.randint(0, 2 * n), rng.getrandbits(64))


def check_clique_structure(count: int, max_n: int, seed: int) -> str | None:
    for g in _random_instances(count, max_n, seed):
        oracle = brute_force_cliques(g)
        if enumerate_maximal_cliques(g) != oracle:
            return f"enumeration differs from brute force on {list(g.edges())}"
        if len(max_clique(g)) != max(map(len, oracle)):
            return f"max_clique is not maximum on {list(g.edges())}"
        for v in range(g.n):
            d = g.degree(v)
            at_v = cliques_at_vertex(g, v)
            if d and (len(at_v) > d or at_v.size_sum > 2 * d):
                return f"per-vertex clique bounds fail at {v} on {list(g.edges())}"
            ball = {v, *g.adj[v]}
            expect = [c for c in oracle if ball.intersection(c)]
            if list(cliques_touching_ball(g, v)) != expect:
                return f"ball enumeration incomplete at {v} on {list(g.edges())}"
            if cut_edge_count(g, v) > g.n:
                return f"cut edge count exceeds n at {v} on {list(g.edges())}"
    return None


def check_codec(count: int, max_n: int, seed: int) -> str | None:
    graphs = [projective_plane_graph(p) for p in (2, 3, 5)]
    graphs += list(_random_instances(count, max_n, seed))
    for g in graphs:
        if decode_graph(encode_graph(g)) != g:
            return f"roundtrip failed for {g}"
    return None


def run_selftest(max_n: int = 6, instances: int = 200, seed: int = 0,
                 emit: Callable[[str], None] = print) -> bool:
    checks = [
        (f"engine agreement, all graphs n<={max_n}", lambda: check_engine_agreement(max_n)),
        (f"clique structure, {instances} random instances", lambda: check_clique_structure(instances, 25, seed)),
        (f"codec roundtrip, planes + {instances} random", lambda: check_codec(instances, 60, seed)),
    ]
    ok = True
    for name, run in checks:
        problem = run()
        emit(f"{'PASS' if problem is None else 'FAIL'} {name}" + ("" if problem is None else f": {problem}"))
        ok = ok and problem is None
    return ok
