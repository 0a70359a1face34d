import json

from medico.generators import complete_bipartite, cycle, hypercube, hypercube_minus
from medico.graph import Graph
from medico.report import analyze, format_text


def test_k23_report():
    r = analyze(complete_bipartite(2, 3))
    assert r.k == 2 and set(r.medico) == {0, 1}
    assert r.flags["modular"] and not r.flags["median"]
    assert r.patterns["k23"] is not None and r.patterns["k33"] is None
    assert [c.c1.ok for c in r.conditions] == [True, True, False, False, False]


def test_q3minus_report():
    r = analyze(hypercube_minus(3))
    assert r.k == 4
    assert r.patterns["q3minus"] is not None and r.patterns["c6"] is not None
    assert r.flags["modular"] is False and r.flags["meshed"] is False
    kinds = {w["kind"] for w in r.witnesses}
    assert {"non_medico", "empty_median_set", "quadrangle_failure"} <= kinds


def test_document_schema():
    doc = analyze(hypercube(3)).to_document("graph6")
    assert doc["schema"] == 1 and doc["format"] == "graph6"
    assert set(doc) >= {"n", "m", "flags", "k", "medico", "conditions", "patterns", "witnesses", "timings_ms"}
    assert set(doc["flags"]) == {"connected", "bipartite", "median", "modular", "meshed", "interval_monotone"}
    assert doc["medico"] == sorted(doc["medico"]) == list(range(8))
    assert set(doc["conditions"]) == {"c0", "c1", "c2", "mu_meshed"}
    assert all(len(v) == 8 for v in doc["conditions"].values())
    assert set(doc["patterns"]) == {"k23", "k33", "q3minus", "c6"}
    assert json.loads(json.dumps(doc)) == doc


def test_disconnected_and_odd_graphs():
    doc = analyze(Graph.from_edges(4, [(0, 1), (2, 3)])).to_document()
    assert doc["k"] == 0 and doc["flags"]["connected"] is False
    assert doc["flags"]["meshed"] is None and doc["flags"]["interval_monotone"] is None
    assert doc["conditions"]["c0"] == [None] * 4
    r = analyze(cycle(5))
    assert not r.flags["bipartite"]
    assert r.notes == ["non-bipartite: v-convex subgraph not unique"]
    assert any(w["kind"] == "odd_closed_walk" for w in r.witnesses)


def test_trivial_graphs():
    assert analyze(Graph.empty(1)).flags["median"]
    doc = analyze(Graph.empty(0)).to_document()
    assert doc["k"] == 0 and doc["flags"]["median"] is False


def test_text_output():
    text = format_text(analyze(complete_bipartite(2, 3)))
    assert "k=2 medico=[0, 1]" in text
    assert "k23: 0 1 2 3 4" in text
