"""CSV benchmark runner.

Each (instance, engine) cell is run ``reps`` times; a ``<engine>/median`` row
follows the repetitions. Set ``CDFREE_BENCH_JOBS`` to run cells in parallel
processes (rows are emitted in the same order either way).
"""

from __future__ import annotations

import csv
import io
import logging
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import Sequence

from .cliques import enumerate_maximal_cliques, max_clique
from .codec import encode_graph
from .graph import Graph
from .recognition import ENGINES

log = logging.getLogger(__name__)

RECOGNIZERS = tuple(ENGINES)
BENCH_ENGINES = RECOGNIZERS + ("maxclique", "enum", "codec")
JOBS_ENV = "CDFREE_BENCH_JOBS"


@dataclass(frozen=True)
class BenchRow:
    instance: str
    n: int
    m: int
    engine: str
    outcome: str
    usec: int
    aux: int


HEADER = [f.name for f in fields(BenchRow)]


def _run_once(g: Graph, engine: str) -> tuple[str, int]:
    if engine in ENGINES:
        verdict = ENGINES[engine](g)
        return ("free" if verdict.free else "forbidden"), 0
    if engine == "maxclique":
        return "n/a", len(max_clique(g))
    if engine == "enum":
        return "n/a", len(enumerate_maximal_cliques(g))
    if engine == "codec":
        return "n/a", 8 * len(encode_graph(g))
    raise ValueError(f"unknown bench engine {engine!r}; choose from {', '.join(BENCH_ENGINES)}")


def _cell(label: str, g: Graph, engine: str, reps: int) -> list[BenchRow]:
    rows = []
    for _ in range(reps):
        start = time.perf_counter_ns()
        try:
            outcome, aux = _run_once(g, engine)
        except Exception as exc:  # recorded, never aborts the suite
            log.warning("%s on %s failed: %s", engine, label, exc)
            outcome, aux = "n/a", 0
        usec = (time.perf_counter_ns() - start) // 1000
        rows.append(BenchRow(label, g.n, g.m, engine, outcome, usec, aux))
    med = statistics.median_low(r.usec for r in rows)
    last = rows[-1]
    rows.append(BenchRow(label, g.n, g.m, f"{engine}/median", last.outcome, med, last.aux))
    return rows


def run_bench_rows(
    instances: Sequence[tuple[str, Graph]],
    engines: Sequence[str],
    reps: int = 1,
    jobs: int | None = None,
) -> list[BenchRow]:
    if reps < 1:
        raise ValueError("reps must be >= 1")
    for e in engines:
        if e not in BENCH_ENGINES:
            raise ValueError(f"unknown bench engine {e!r}; choose from {', '.join(BENCH_ENGINES)}")
    if jobs is None:
        jobs = int(os.environ.get(JOBS_ENV, "1"))
    cells = [(label, g, e, reps) for label, g in instances for e in engines]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cell, *zip(*cells)))
    else:
        results = [_cell(*c) for c in cells]
    return [row for chunk in results for row in chunk]


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in rows:
        w.writerow(astuple(r))
    return buf.getvalue()


def run_bench(instances: Sequence[tuple[str, Graph]], engines: Sequence[str], reps: int = 1,
              jobs: int | None = None) -> str:
    return rows_to_csv(run_bench_rows(instances, engines, reps, jobs))
