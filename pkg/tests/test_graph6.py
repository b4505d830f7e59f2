import io

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from satlab.enumerate import enumerate_graphs
from satlab.errors import Graph6ParseError
from satlab.graph import Graph, complete, empty
from satlab.graph6 import decode, encode, read_graph6, write_graph6

from oracles import atlas_by_order, to_nx
from test_graph import graphs


def test_hand_vectors():
    assert encode(complete(3)) == "Bw"
    assert encode(empty(0)) == "?"
    assert encode(empty(1)) == "@"
    assert encode(complete(2)) == "A_"
    assert encode(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])) == "Dhc"


def test_decode_tolerates_newline_and_header():
    assert decode("Bw\n") == complete(3)
    assert decode(b">>graph6<<Bw") == complete(3)


@pytest.mark.parametrize(
    "line, offset",
    [
        ("", 0),
        ("B", 1),  # truncated: three bits need one data byte
        ("Bww", 2),  # trailing garbage
        ("Bx", 1),  # non-zero padding bits
        ("B\x7f", 1),  # byte out of the printable range
        ("~", 0),  # large-order prefix is beyond the supported orders
        ("Bé", 1),
    ],
)
def test_decode_errors_report_offsets(line, offset):
    with pytest.raises(Graph6ParseError) as info:
        decode(line)
    assert info.value.offset == offset


def test_stream_roundtrip():
    gs = [complete(3), empty(2), complete(5)]
    buf = io.StringIO()
    assert write_graph6(gs, buf) == 3
    buf.seek(0)
    assert list(read_graph6(buf)) == gs


@given(graphs(12))
def test_roundtrip_and_networkx_bytes(g):
    code = encode(g)
    assert decode(code) == g
    assert code.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()


def test_every_small_graph_matches_networkx_encoding():
    for n, gs in atlas_by_order().items():
        for g in gs:
            assert encode(g).encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()


def test_large_order_rejected_explicitly():
    with pytest.raises(Graph6ParseError):
        decode("~?@?")
