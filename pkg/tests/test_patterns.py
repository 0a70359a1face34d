import pytest
from hypothesis import given

from conftest import connected_bipartite, graphs
from medico import brute
from medico.errors import BoundExceeded, NotAnEdge, NotC6, UnknownPattern
from medico.generators import SplitMix64, complete_bipartite, cycle, grid, hypercube, hypercube_minus, random_tree
from medico.graph import Graph
from medico.metric import Metric
from medico.patterns import (
    DELTA_FORMS,
    Embedding,
    classify_delta,
    delta_profile,
    edge_on_cycle,
    edge_on_induced_c4,
    find_all_induced,
    find_induced,
    induced_cycles,
    is_convex_cycle,
    is_induced_embedding,
    is_isometric_cycle,
)

PATTERNS = ("K23", "K33", "Q3minus", "C4", "C6")


def ring(length):
    return [(i, (i + 1) % length) for i in range(length)]


def test_find_induced_examples():
    assert find_induced(hypercube_minus(3), "C6") is not None
    assert find_induced(complete_bipartite(2, 3), "C4") is not None
    assert find_induced(complete_bipartite(2, 3), "K33") is None
    emb = find_induced(complete_bipartite(2, 3), "K23")
    assert emb.vertices == (0, 1, 2, 3, 4)
    assert emb.roles == ("small", "small", "large", "large", "large")


def test_q3_contains_an_induced_six_cycle():
    # removing an antipodal pair of the 3-cube leaves an induced 6-cycle
    g = hypercube(3)
    emb = find_induced(g, "C6")
    assert emb is not None and is_induced_embedding(g, emb)
    assert set(emb.vertices) == set(range(8)) - {2, 5}
    assert brute.has_pattern(g, "C6")
    assert len(find_all_induced(g, "C6").embeddings) == 4


def test_q3minus_roles():
    emb = find_induced(hypercube_minus(3), "Q3minus")
    assert emb.vertices[0] == 0
    assert set(emb.vertices[1:4]) == {1, 2, 4}
    assert emb.roles == ("center",) + ("inner",) * 3 + ("outer",) * 3


def test_unknown_pattern():
    with pytest.raises(UnknownPattern):
        find_induced(cycle(4), "Petersen")


def test_cap_and_complete_flag():
    g = complete_bipartite(3, 4)
    full = find_all_induced(g, "K23")
    assert full.complete and len(full.embeddings) == 3 * 4 + 6 * 1
    part = find_all_induced(g, "K23", cap=5)
    assert not part.complete and len(part.embeddings) == 5
    assert find_all_induced(g, "K23", cap=18).complete


@given(graphs(max_n=8))
def test_patterns_match_subset_oracle(g):
    for pattern in PATTERNS:
        found = find_all_induced(g, pattern)
        sets = [frozenset(e.vertices) for e in found.embeddings]
        assert found.complete
        assert len(sets) == len(set(sets))
        assert set(sets) == brute.pattern_sets(g, pattern)
        assert all(is_induced_embedding(g, e) for e in found.embeddings)
        assert (find_induced(g, pattern) is None) == (not sets)


@given(graphs(max_n=8))
def test_induced_cycles_match_subset_oracle(g):
    cycles = induced_cycles(g, 8)
    by_len = {}
    for emb in cycles:
        assert is_induced_embedding(g, emb)
        by_len.setdefault(len(emb.vertices), set()).add(frozenset(emb.vertices))
    assert len(cycles) == sum(map(len, by_len.values()))
    for length in range(3, min(g.n, 8) + 1):
        assert by_len.get(length, set()) == set(brute.induced_vertex_sets(g, length, ring(length)))


@given(connected_bipartite(max_n=10))
def test_induced_and_isometric_six_cycles_coincide_in_bipartite_graphs(g):
    for emb in induced_cycles(g, 6):
        if len(emb.vertices) == 6:
            assert is_isometric_cycle(g, emb)


def test_cycle_bound():
    with pytest.raises(BoundExceeded):
        induced_cycles(cycle(5), 13)
    assert [len(e.vertices) for e in induced_cycles(cycle(12))] == [12]


def test_cycle_properties():
    c6 = cycle(6)
    emb = induced_cycles(c6)[0]
    assert is_isometric_cycle(c6, emb) and is_convex_cycle(Metric(c6), emb)
    q = hypercube_minus(3)
    rim = Embedding("C6", (1, 3, 2, 6, 4, 5), ("ring",) * 6)
    assert is_induced_embedding(q, rim) and is_isometric_cycle(q, rim)
    assert not is_convex_cycle(Metric(q), rim)
    assert Metric(q).convex_hull(rim.vertices) == set(range(7))


def test_edge_helpers():
    tree = random_tree(9, SplitMix64(2))
    assert not any(edge_on_cycle(tree, e) for e in tree.edges())
    assert edge_on_induced_c4(cycle(4), (0, 1)) is not None
    c6 = cycle(6)
    assert all(edge_on_cycle(c6, e) and edge_on_induced_c4(c6, e) is None for e in c6.edges())
    assert all(edge_on_induced_c4(grid(3, 3), e) for e in grid(3, 3).edges())
    with pytest.raises(NotAnEdge):
        edge_on_cycle(c6, (0, 2))


@given(graphs(max_n=8))
def test_edge_on_induced_c4_matches_oracle(g):
    c4_sets = brute.pattern_sets(g, "C4")
    for a, b in g.edges():
        emb = edge_on_induced_c4(g, (a, b))
        if emb is None:
            assert not any({a, b} <= s for s in c4_sets)
        else:
            assert is_induced_embedding(g, emb) and emb.vertices[:2] == (a, b)


def test_delta_profiles():
    c6 = cycle(6)
    emb = induced_cycles(c6)[0]
    assert delta_profile(c6, emb, 0) == (0, 1, 2, 3, 2, 1)
    # the shape is that of Delta4 with l = 1; C6 itself has no medico vertex
    assert classify_delta((0, 1, 2, 3, 2, 1)) == "Delta4"
    q = hypercube_minus(3)
    rim = Embedding("C6", (1, 3, 2, 6, 4, 5), ("ring",) * 6)
    assert delta_profile(q, rim, 0) == (1, 2, 1, 2, 1, 2)
    assert classify_delta(delta_profile(q, rim, 0)) == "Delta1"
    assert classify_delta((0, 1, 0, 1, 0, 2)) is None
    with pytest.raises(NotC6):
        delta_profile(cycle(4), induced_cycles(cycle(4))[0], 0)


def test_every_medico_view_of_a_six_cycle_is_a_delta_form():
    for g in (hypercube_minus(3), hypercube(3), hypercube(4), hypercube_minus(4)):
        m = Metric(g)
        sixes = [e for e in induced_cycles(g, 6) if len(e.vertices) == 6]
        assert sixes
        for mu in m.medico_set():
            for emb in sixes:
                assert classify_delta(delta_profile(g, emb, mu)) in DELTA_FORMS
