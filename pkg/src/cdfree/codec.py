"""Lossless binary encoding of (C4, diamond)-free graphs in O(n^1.5 log n) bits.

The encoder peels the graph with threshold ``t = ceil(sqrt(n))``:

(a) a vertex with at most ``t`` live neighbours is written with its neighbours;
(b) otherwise a vertex with at most ``t`` live non-neighbours is written with
    its non-neighbours;
(c) otherwise the live set splits into ``G1 = {v} | N(v)`` and the rest
    ``G2``. Every G2 vertex has at most one neighbour in G1, so the edges
    between the parts fit in one ``(y, x)`` pair per G2 vertex. Both parts are
    then handled recursively, G1 first.

Stream layout: ``b"CDFG"``, version byte ``1``, varint ``n``, then records,
each a tag byte followed by varint fields::

    0x01 REMOVE_NBR    v k u_1..u_k
    0x02 REMOVE_NONNBR v k w_1..w_k
    0x03 SPLIT         v s g_1..g_s c y_1 x_1 .. y_c x_c
    0x00 END

The decoder keeps a stack of live sets. Records apply to the top set; SPLIT
replaces it with G2 and then G1 (so G1 is on top), END pops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .graph import Graph, NotInClass

MAGIC = b"CDFG"
VERSION = 1

REMOVE_NBR = 0x01
REMOVE_NONNBR = 0x02
SPLIT = 0x03
END = 0x00

# Frozen from the calibration run in tests/test_acceptance.py; see README.
SIZE_CONSTANT = 40

_MAX_VARINT_BITS = 64


class DecodeError(ValueError):
    pass


class BadMagicError(DecodeError):
    pass


class BadVersionError(DecodeError):
    pass


class VarintOverflowError(DecodeError):
    pass


class TruncatedStreamError(DecodeError):
    pass


class VertexNotLiveError(DecodeError):
    pass


class DuplicateEdgeError(DecodeError):
    pass


class SplitMemberError(DecodeError):
    pass


class MalformedRecordError(DecodeError):
    pass


def encode_varint(value: int) -> bytes:
    if value < 0:
        raise ValueError(f"cannot encode negative value {value}")
    out = bytearray()
    while value > 0x7F:
        out.append((value & 0x7F) | 0x80)
        value >>= 7
    out.append(value)
    return bytes(out)


def decode_varint(data: bytes, offset: int = 0) -> tuple[int, int]:
    """Return ``(value, new_offset)``."""
    value = shift = 0
    while True:
        if offset >= len(data):
            raise TruncatedStreamError("stream ends inside a varint")
        byte = data[offset]
        offset += 1
        value |= (byte & 0x7F) << shift
        shift += 7
        if value >> _MAX_VARINT_BITS:
            raise VarintOverflowError("varint exceeds 64 bits")
        if not byte & 0x80:
            return value, offset
        if shift >= 70:
            raise VarintOverflowError("varint longer than 10 bytes")


@dataclass(frozen=True)
class RemoveNbr:
    v: int
    nbrs: tuple[int, ...]


@dataclass(frozen=True)
class RemoveNonNbr:
    v: int
    non_nbrs: tuple[int, ...]


@dataclass(frozen=True)
class Split:
    v: int
    members: tuple[int, ...]
    cross: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class End:
    pass


Record = Union[RemoveNbr, RemoveNonNbr, Split, End]


def size_threshold(n: int) -> int:
    return math.isqrt(n - 1) + 1 if n > 0 else 0


# --- encoder ---------------------------------------------------------------

def decompose(g: Graph) -> list[Record]:
    """Record sequence for ``g`` in replay order."""
    t = size_threshold(g.n)
    nbr_sets = [g.neighbor_set(v) for v in range(g.n)]
    out: list[Record] = []

    def peel(live: set[int]) -> None:
        deg = {v: sum(1 for w in g.adj[v] if w in live) for v in live}
        while live:
            order = sorted(live)
            size = len(live)
            pick = next((v for v in order if deg[v] <= t), None)
            if pick is not None:
                rec: Record = RemoveNbr(pick, tuple(w for w in g.adj[pick] if w in live))
            else:
                pick = next((v for v in order if size - 1 - deg[v] <= t), None)
                if pick is not None:
                    near = nbr_sets[pick]
                    rec = RemoveNonNbr(pick, tuple(w for w in order if w != pick and w not in near))
            if pick is None:
                split_at(order[0], live)
                return
            out.append(rec)
            live.discard(pick)
            for w in g.adj[pick]:
                if w in live:
                    deg[w] -= 1
        out.append(End())

    def split_at(v: int, live: set[int]) -> None:
        g1 = {v, *(w for w in g.adj[v] if w in live)}
        g2 = live - g1
        if len(g1) <= t or len(g2) <= t:
            raise AssertionError(f"split at {v} leaves a part of size <= {t}")
        cross = []
        for y in sorted(g2):
            hits = [x for x in g.adj[y] if x in g1]
            if len(hits) > 1:
                raise NotInClass(
                    f"vertex {y} sees {hits[0]} and {hits[1]} in the neighbourhood of {v}; "
                    f"graph is not (C4, diamond)-free"
                )
            if hits:
                cross.append((y, hits[0]))
        out.append(Split(v, tuple(sorted(g1)), tuple(cross)))
        peel(g1)
        peel(g2)

    peel(set(range(g.n)))
    return out


def _write_record(buf: bytearray, rec: Record) -> None:
    if isinstance(rec, End):
        buf.append(END)
        return
    if isinstance(rec, Split):
        buf.append(SPLIT)
        buf += encode_varint(rec.v)
        buf += encode_varint(len(rec.members))
        for u in rec.members:
            buf += encode_varint(u)
        buf += encode_varint(len(rec.cross))
        for y, x in rec.cross:
            buf += encode_varint(y)
            buf += encode_varint(x)
        return
    tag, items = (REMOVE_NBR, rec.nbrs) if isinstance(rec, RemoveNbr) else (REMOVE_NONNBR, rec.non_nbrs)
    buf.append(tag)
    buf += encode_varint(rec.v)
    buf += encode_varint(len(items))
    for u in items:
        buf += encode_varint(u)


def encode_graph(g: Graph) -> bytes:
    buf = bytearray(MAGIC)
    buf.append(VERSION)
    buf += encode_varint(g.n)
    for rec in decompose(g):
        _write_record(buf, rec)
    return bytes(buf)


# --- decoder ---------------------------------------------------------------

def read_records(data: bytes) -> tuple[int, list[Record]]:
    """Parse the header and the record stream without replaying it."""
    if len(data) < 5 and MAGIC.startswith(bytes(data[:4])):
        raise TruncatedStreamError("stream ends inside the header")
    if data[:4] != MAGIC:
        raise BadMagicError(f"bad magic {bytes(data[:4])!r}")
    if data[4] != VERSION:
        raise BadVersionError(f"unsupported version {data[4]}")
    n, pos = decode_varint(data, 5)

    def ints(count: int) -> list[int]:
        nonlocal pos
        vals = []
        for _ in range(count):
            val, pos = decode_varint(data, pos)
            vals.append(val)
        return vals

    records: list[Record] = []
    while pos < len(data):
        tag = data[pos]
        pos += 1
        if tag == END:
            records.append(End())
        elif tag in (REMOVE_NBR, REMOVE_NONNBR):
            v, k = ints(2)
            if k > n:
                raise MalformedRecordError(f"list length {k} exceeds n={n}")
            items = tuple(ints(k))
            records.append(RemoveNbr(v, items) if tag == REMOVE_NBR else RemoveNonNbr(v, items))
        elif tag == SPLIT:
            v, s = ints(2)
            if s > n:
                raise MalformedRecordError(f"split size {s} exceeds n={n}")
            members = tuple(ints(s))
            (c,) = ints(1)
            if c > n:
                raise MalformedRecordError(f"cross-pair count {c} exceeds n={n}")
            flat = ints(2 * c)
            records.append(Split(v, members, tuple(zip(flat[::2], flat[1::2]))))
        else:
            raise MalformedRecordError(f"unknown record tag 0x{tag:02x} at byte {pos - 1}")
    return n, records


def decode_graph(data: bytes) -> Graph:
    n, records = read_records(data)
    edges: set[tuple[int, int]] = set()
    stack = [set(range(n))]

    def assert_edge(a: int, b: int) -> None:
        e = (a, b) if a < b else (b, a)
        if e in edges:
            raise DuplicateEdgeError(f"edge {e} asserted twice")
        edges.add(e)

    def need_live(live: set[int], u: int) -> None:
        if u not in live:
            raise VertexNotLiveError(f"vertex {u} is not live")

    for rec in records:
        if not stack:
            raise MalformedRecordError("records continue after the last subgraph ended")
        live = stack[-1]
        if isinstance(rec, End):
            stack.pop()
        elif isinstance(rec, RemoveNbr):
            need_live(live, rec.v)
            for u in rec.nbrs:
                need_live(live, u)
                if u == rec.v:
                    raise MalformedRecordError(f"vertex {u} listed as its own neighbour")
                assert_edge(rec.v, u)
            live.discard(rec.v)
        elif isinstance(rec, RemoveNonNbr):
            need_live(live, rec.v)
            skip = set(rec.non_nbrs)
            for u in skip:
                need_live(live, u)
            if rec.v in skip or len(skip) != len(rec.non_nbrs):
                raise MalformedRecordError(f"bad non-neighbour list for vertex {rec.v}")
            for u in sorted(live - skip - {rec.v}):
                assert_edge(rec.v, u)
            live.discard(rec.v)
        else:
            g1 = set(rec.members)
            if len(g1) != len(rec.members) or rec.v not in g1:
                raise SplitMemberError(f"split at {rec.v} has a malformed member list")
            for u in g1:
                if u not in live:
                    raise SplitMemberError(f"split member {u} is not live")
            g2 = live - g1
            for y, x in rec.cross:
                if y not in g2 or x not in g1:
                    raise SplitMemberError(f"cross pair ({y}, {x}) does not join G2 to G1")
                assert_edge(y, x)
            stack.pop()
            stack.append(g2)
            stack.append(g1)
    if stack:
        raise TruncatedStreamError(f"{len(stack)} subgraph(s) never ended")
    return Graph.from_edges(n, edges)


def size_bound(n: int, constant: int = SIZE_CONSTANT) -> int:
    """``constant * ceil(n^1.5) * ceil(log2(n + 2))`` in exact integer arithmetic."""
    n32 = math.isqrt(n ** 3 - 1) + 1 if n > 0 else 0
    return constant * n32 * (n + 1).bit_length()


def encoded_size_report(g: Graph, constant: int = SIZE_CONSTANT) -> tuple[int, int]:
    """``(bits, bound)`` for the encoding of ``g``."""
    return 8 * len(encode_graph(g)), size_bound(g.n, constant)
