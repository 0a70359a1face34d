import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from medico.errors import OrderTooLarge, ParseError
from medico.generators import complete_bipartite, cycle, hypercube, path
from medico.graph import Graph
from medico.io import (
    infer_format,
    iter_graph6,
    parse_edgelist,
    parse_graph,
    parse_graph6,
    serialize,
    to_edgelist,
    to_graph6,
)


def test_known_graph6_strings():
    # strings produced by the networkx encoder
    assert to_graph6(Graph.empty(0)) == "?"
    assert to_graph6(path(2)) == "A_"
    assert to_graph6(complete_bipartite(2, 3)) == "D]o"
    assert to_graph6(cycle(6)) == "EhEG"


def test_header_is_accepted():
    assert parse_graph6(">>graph6<<D]o\n") == complete_bipartite(2, 3)
    assert to_graph6(path(2), header=True) == ">>graph6<<A_"


@given(graphs(max_n=20))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


@given(graphs(max_n=12))
def test_graph6_matches_networkx_decoder(g):
    h = nx.from_graph6_bytes(to_graph6(g).encode())
    assert sorted(map(tuple, map(sorted, h.edges()))) == list(g.edges())
    assert h.number_of_nodes() == g.n


@given(graphs(max_n=12))
def test_edgelist_round_trip(g):
    assert parse_edgelist(to_edgelist(g)) == g


def test_graph6_errors():
    with pytest.raises(ParseError) as info:
        parse_graph6("D!o")
    assert info.value.offset == 1
    with pytest.raises(ParseError):
        parse_graph6("D]")  # too short
    with pytest.raises(ParseError):
        parse_graph6("A`")  # padding bit set
    with pytest.raises(OrderTooLarge):
        parse_graph6("~?@A" + "?" * 10)
    with pytest.raises(OrderTooLarge):
        to_graph6(Graph.empty(63))


def test_stream_errors_carry_line_numbers():
    with pytest.raises(ParseError) as info:
        list(iter_graph6(["A_", "", "A!"]))
    assert info.value.offset == 3
    assert [g.n for g in iter_graph6(["A_\n", "\n", "D]o\n"])] == [2, 5]


def test_edgelist_parsing():
    g = parse_edgelist("# ring\n0 1\n1 2\n2 0\n1 0\n")
    assert g.n == 3 and g.m == 3
    assert parse_edgelist("n=5\n0 1\n").n == 5
    assert parse_edgelist("n=1\n").n == 1
    with pytest.raises(ParseError) as info:
        parse_edgelist("0 1\n2 2\n")
    assert info.value.offset == 2
    with pytest.raises(ParseError):
        parse_edgelist("0 x\n")


def test_edgelist_header_only_when_needed():
    assert to_edgelist(cycle(3)) == "0 1\n0 2\n1 2\n"
    assert to_edgelist(Graph.from_edges(4, [(0, 1)])).startswith("n=4\n")


def test_format_helpers():
    assert infer_format("a.g6") == "graph6"
    assert infer_format("a.edgelist") == "edgelist"
    assert infer_format("a.txt") == "edgelist"
    assert infer_format("-") == "graph6"
    g = hypercube(3)
    for fmt in ("graph6", "edgelist"):
        assert parse_graph(serialize(g, fmt), fmt) == g
    with pytest.raises(ValueError):
        serialize(g, "dot")
