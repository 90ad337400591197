import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdfree import codec
from cdfree.codec import (
    End,
    RemoveNbr,
    RemoveNonNbr,
    Split,
    decode_graph,
    decode_varint,
    encode_graph,
    encode_varint,
    encoded_size_report,
    read_records,
    size_bound,
    size_threshold,
)
from cdfree.generators import named_graph, projective_plane_graph, random_free_graph
from cdfree.graph import Graph, NotInClass

from conftest import graphs, is_c4_diamond_free


@pytest.mark.parametrize("value, raw", [(0, b"\x00"), (127, b"\x7f"), (128, b"\x80\x01"), (300, b"\xac\x02")])
def test_varint_known_values(value, raw):
    assert encode_varint(value) == raw
    assert decode_varint(raw) == (value, len(raw))


@given(st.integers(0, 2**64 - 1))
def test_varint_roundtrip(value):
    raw = encode_varint(value)
    assert decode_varint(raw + b"\xff", 0) == (value, len(raw))


def test_varint_errors():
    with pytest.raises(codec.VarintOverflowError):
        decode_varint(b"\xff" * 10 + b"\x01")
    with pytest.raises(codec.TruncatedStreamError):
        decode_varint(b"\x80")
    with pytest.raises(ValueError):
        encode_varint(-1)


def test_size_threshold():
    assert [size_threshold(n) for n in (0, 1, 2, 3, 4, 5, 9, 10, 62)] == [0, 1, 2, 2, 2, 3, 3, 4, 8]


def test_single_vertex_stream():
    data = encode_graph(Graph.empty(1))
    assert data == b"CDFG\x01\x01" + b"\x01\x00\x00" + b"\x00"
    assert decode_graph(data) == Graph.empty(1)


def test_triangle_records():
    n, recs = read_records(encode_graph(named_graph("k_n", 3)))
    assert n == 3
    assert recs == [RemoveNbr(0, (1, 2)), RemoveNbr(1, (2,)), RemoveNbr(2, ()), End()]


def test_empty_graphs_roundtrip():
    for n in (0, 7):
        assert decode_graph(encode_graph(Graph.empty(n))) == Graph.empty(n)


def _two_cliques(extra):
    a = [(u, v) for u in range(10) for v in range(u + 1, 10)]
    b = [(u + 10, v + 10) for u, v in a]
    return Graph.from_edges(20, a + b + extra)


def test_complete_graph_uses_non_neighbour_rule():
    # t = 3: degrees 5 and 4 use rule (b), then K4 falls to rule (a)
    g = named_graph("k_n", 6)
    _, recs = read_records(encode_graph(g))
    assert recs[:3] == [RemoveNonNbr(0, ()), RemoveNonNbr(1, ()), RemoveNbr(2, (3, 4, 5))]
    assert decode_graph(encode_graph(g)) == g


def test_split_with_cross_pairs():
    # n = 20, t = 5: every vertex has > 5 neighbours and > 5 non-neighbours
    g = _two_cliques([(0, 10)])
    _, recs = read_records(encode_graph(g))
    assert recs[0] == Split(0, tuple(range(11)), tuple((y, 10) for y in range(11, 20)))
    assert sum(isinstance(r, End) for r in recs) == 2
    assert decode_graph(encode_graph(g)) == g


def test_plane_needs_no_split():
    _, recs = read_records(encode_graph(projective_plane_graph(11)))
    assert not any(isinstance(r, Split) for r in recs)


def test_encoder_rejects_out_of_class():
    # vertex 10 sees 1 and 2 inside the ball of 0
    with pytest.raises(NotInClass):
        encode_graph(_two_cliques([(1, 10), (2, 10)]))


def test_size_bound_exact_integers():
    assert size_bound(1, 1) == 1 * 2
    assert size_bound(4, 1) == 8 * 3
    assert size_bound(62, 1) == 489 * 6
    assert size_bound(0, 1) == 0


def test_size_report_examples():
    bits, bound = encoded_size_report(Graph.empty(1))
    assert bits == 80 and bits <= bound
    bits, bound = encoded_size_report(projective_plane_graph(5))
    assert bits <= bound
    worst = max(encoded_size_report(random_free_graph(60, 120, s))[0] for s in range(50))
    assert worst <= size_bound(60)


# --- decoder error kinds ----------------------------------------------------

def _stream(n, body):
    return b"CDFG\x01" + encode_varint(n) + bytes(body)


@pytest.mark.parametrize(
    "data, error",
    [
        (b"XDFG\x01\x01\x00", codec.BadMagicError),
        (b"CDF", codec.TruncatedStreamError),
        (b"CDFG\x02\x01\x00", codec.BadVersionError),
        (b"CDFG\x01" + b"\xff" * 11, codec.VarintOverflowError),
        # REMOVE_NBR of vertex 0 twice: the second names a removed vertex
        (_stream(2, [1, 0, 0, 1, 0, 0, 0]), codec.VertexNotLiveError),
        # 0-1 asserted by v=0's list, then again by v=1's list naming 0
        (_stream(2, [1, 0, 1, 1, 1, 1, 1, 0, 0]), codec.VertexNotLiveError),
        (_stream(3, [1, 0, 2, 1, 1]), codec.DuplicateEdgeError),
        (_stream(3, [3, 0, 2, 0, 5, 0, 0]), codec.SplitMemberError),
        (_stream(2, [1, 0, 0]), codec.TruncatedStreamError),
        (_stream(2, [1, 0]), codec.TruncatedStreamError),
        (_stream(1, [9]), codec.MalformedRecordError),
        (_stream(1, [1, 0, 0, 0, 0]), codec.MalformedRecordError),
    ],
)
def test_decode_errors(data, error):
    with pytest.raises(error):
        decode_graph(data)


def test_decode_error_kinds_are_distinct():
    kinds = {
        codec.BadMagicError, codec.BadVersionError, codec.VarintOverflowError, codec.VertexNotLiveError,
        codec.DuplicateEdgeError, codec.SplitMemberError, codec.TruncatedStreamError,
    }
    assert len(kinds) == 7
    assert all(issubclass(k, codec.DecodeError) for k in kinds)


def test_remove_named_removed_vertex_is_not_live():
    bad = _stream(2, [1, 0, 0, 1, 0, 0, 0])
    with pytest.raises(codec.VertexNotLiveError, match="not live"):
        decode_graph(bad)


@settings(max_examples=300)
@given(graphs(max_n=30))
def test_any_accepted_graph_roundtrips(g):
    try:
        data = encode_graph(g)
    except NotInClass:
        assert not is_c4_diamond_free(g)
        return
    assert decode_graph(data) == g


def test_random_free_roundtrip_and_record_bounds():
    for seed in range(200):
        n = 1 + seed % 60
        g = random_free_graph(n, 2 * n + seed % 7, seed)
        data = encode_graph(g)
        assert decode_graph(data) == g
        t = size_threshold(n)
        _, recs = read_records(data)
        splits = [r for r in recs if isinstance(r, Split)]
        assert len(splits) <= t
        for r in recs:
            if isinstance(r, RemoveNbr):
                assert len(r.nbrs) <= t
            elif isinstance(r, RemoveNonNbr):
                assert len(r.non_nbrs) <= t
