"""Command-line front end.

Exit codes: 0 success (or FREE), 1 forbidden subgraph found (``recognize``
only) or failed self-test, 2 usage/input error, 3 input outside the class a
command requires.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from . import bench, codec
from .cliques import clique_stats, enumerate_maximal_cliques, max_clique
from .generators import RNG_ID, named_graph, projective_plane_graph, random_free_graph
from .graph import NotInClass, ParseError, read_graph, serialize_graph
from .recognition import ENGINES, RecognitionConfig, recognize
from .selftest import run_selftest

EXIT_OK, EXIT_FORBIDDEN, EXIT_USAGE, EXIT_CLASS = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return val


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cdfree", description="(C4, diamond)-free graph toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("recognize", help="decide (C4, diamond)-freeness")
    r.add_argument("--engine", choices=list(ENGINES), default="threshold")
    r.add_argument("--f", type=_positive, default=None, help="degree threshold (threshold engine)")
    r.add_argument("file")

    c = sub.add_parser("cliques", help="maximal cliques of diamond-free graphs")
    c.add_argument("action", choices=["enum", "max", "stats"])
    c.add_argument("--f", type=_positive, default=None, help="degree threshold for 'max'")
    c.add_argument("file")

    g = sub.add_parser("gen", help="write a graph in edge-list format")
    gsub = g.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    gp = gsub.add_parser("plane", help="projective plane incidence graph")
    gp.add_argument("p", type=int)
    gn = gsub.add_parser("named", help="named small graph")
    gn.add_argument("name")
    gn.add_argument("args", nargs="*", type=int)
    gr = gsub.add_parser("random", help="seeded random (C4, diamond)-free graph")
    gr.add_argument("n", type=int)
    gr.add_argument("edges", type=int)
    gr.add_argument("seed", type=int)

    k = sub.add_parser("codec", help="binary encoding of (C4, diamond)-free graphs")
    k.add_argument("action", choices=["encode", "decode", "size"])
    k.add_argument("file")

    b = sub.add_parser("bench", help="CSV timings")
    b.add_argument("files", nargs="*", help="extra edge-list instances")
    b.add_argument("--planes", type=_int_list, default=[], help="comma-separated plane orders")
    b.add_argument("--random", type=int, default=0, metavar="COUNT", help="number of random instances")
    b.add_argument("--random-n", type=int, default=60)
    b.add_argument("--random-edges", type=int, default=120)
    b.add_argument("--seed", type=int, default=0, help="seed of the first random instance")
    b.add_argument("--engines", default=",".join(bench.RECOGNIZERS),
                   help=f"comma-separated subset of {','.join(bench.BENCH_ENGINES)}")
    b.add_argument("--reps", type=_positive, default=1)

    s = sub.add_parser("selftest", help="validate this build")
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--instances", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    return p


def _gen(args) -> str:
    if args.kind == "plane":
        return serialize_graph(projective_plane_graph(args.p), f"cdfree gen plane {args.p}")
    if args.kind == "named":
        g = named_graph(args.name, *args.args)
        return serialize_graph(g, " ".join(["cdfree gen named", args.name, *map(str, args.args)]))
    g = random_free_graph(args.n, args.edges, args.seed)
    return serialize_graph(g, f"cdfree gen random {args.n} {args.edges} {args.seed} rng={RNG_ID}")


def _bench_instances(args) -> list:
    inst = [(f"plane-{p}", projective_plane_graph(p)) for p in args.planes]
    for i in range(args.random):
        seed = args.seed + i
        inst.append((f"random-{args.random_n}-{args.random_edges}-{seed}",
                     random_free_graph(args.random_n, args.random_edges, seed)))
    inst += [(path, read_graph(path)) for path in args.files]
    return inst


def _dispatch(args) -> int:
    out = sys.stdout
    if args.command == "recognize":
        verdict = recognize(read_graph(args.file), args.engine, args.f)
        print(verdict, file=out)
        return EXIT_OK if verdict.free else EXIT_FORBIDDEN
    if args.command == "cliques":
        g = read_graph(args.file)
        if args.action == "enum":
            for c in enumerate_maximal_cliques(g):
                print(*c, file=out)
        elif args.action == "max":
            print(*max_clique(g, RecognitionConfig(args.f) if args.f else None), file=out)
        else:
            st = clique_stats(g)
            print(f"count={st.count} sizesum={st.size_sum}", file=out)
        return EXIT_OK
    if args.command == "gen":
        out.write(_gen(args))
        return EXIT_OK
    if args.command == "codec":
        if args.action == "encode":
            data = codec.encode_graph(read_graph(args.file))
            out.flush()
            sys.stdout.buffer.write(data)
            sys.stdout.buffer.flush()
        elif args.action == "decode":
            if args.file == "-":
                data = sys.stdin.buffer.read()
            else:
                with open(args.file, "rb") as fh:
                    data = fh.read()
            out.write(serialize_graph(codec.decode_graph(data)))
        else:
            bits, bound = codec.encoded_size_report(read_graph(args.file))
            print(f"bits={bits} bound={bound}", file=out)
        return EXIT_OK
    if args.command == "bench":
        engines = [e for e in args.engines.split(",") if e]
        out.write(bench.run_bench(_bench_instances(args), engines, args.reps))
        return EXIT_OK
    ok = run_selftest(args.max_n, args.instances, args.seed, emit=lambda s: print(s, file=out))
    return EXIT_OK if ok else EXIT_FORBIDDEN


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except NotInClass as exc:
        print(f"cdfree: not in class: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except (ParseError, codec.DecodeError, ValueError, OSError) as exc:
        print(f"cdfree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
