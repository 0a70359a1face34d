"""Counterexample searches for three open questions about k-median graphs.

``P1_Q3M_K23``
    A graph with a medico vertex that is not median, yet has neither an
    induced K2,3 nor an induced Q3-minus.
``P2_K23FREE``
    A K2,3-free graph with a medico vertex that is not median and fails the
    battery of structural checks below. The battery includes the
    Djokovic-Winkler partial-cube test, which is necessary for an isometric
    embedding into a hypercube or a median graph; no embedding is built.
``P3_CONVEX_1MED``
    A graph with a medico vertex that has a sampled convex subgraph without
    any medico vertex.

Candidates found by the fast code are re-evaluated with the definition-level
routines in :mod:`medico.brute` before they are logged.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice

from . import brute
from .graph import Graph, is_bipartite
from .metric import Metric
from .patterns import edge_on_cycle, edge_on_induced_c4, find_induced
from .verify import DEFAULT_SAMPLES, graph_record, sample_convex_sets


@dataclass(frozen=True)
class SearchProblem:
    id: str
    number: int
    description: str
    note: str | None = None


PROBLEMS = {
    "P1_Q3M_K23": SearchProblem(
        "P1_Q3M_K23", 1, "k >= 1, not median, no induced K2,3 and no induced Q3-minus"
    ),
    "P2_K23FREE": SearchProblem(
        "P2_K23FREE",
        2,
        "K2,3-free, k >= 1, not median, failing the structural battery",
        "hypercube embedding not constructed; partial-cube test only",
    ),
    "P3_CONVEX_1MED": SearchProblem(
        "P3_CONVEX_1MED", 3, "k >= 1 with a sampled convex subgraph that has no medico vertex"
    ),
}


def get_problem(key: str | int) -> SearchProblem:
    """Look up a problem by id or by number (``1``, ``"2"``...)."""
    if isinstance(key, SearchProblem):
        return key
    text = str(key).strip().upper()
    for p in PROBLEMS.values():
        if text in (p.id, str(p.number), f"P{p.number}"):
            return p
    raise KeyError(key)


@dataclass
class SearchLog:
    problem: SearchProblem
    graphs: int = 0
    hits: list[dict] = field(default_factory=list)

    def summary(self) -> str:
        return f"{len(self.hits)} hits / {self.graphs} graphs"


def theta_transitive(g: Graph) -> bool:
    """Djokovic-Winkler test: a connected bipartite graph is a partial cube
    iff the relation Theta on its edges is transitive."""
    rows = g.distances.rows
    edges = list(g.edges())

    def theta(e, f):
        (x, y), (u, v) = e, f
        return rows[x][u] + rows[y][v] != rows[x][v] + rows[y][u]

    parent = list(range(len(edges)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    related = {}
    for i, j in combinations(range(len(edges)), 2):
        related[i, j] = theta(edges[i], edges[j])
        if related[i, j]:
            parent[find(i)] = find(j)
    return all(ok or find(i) != find(j) for (i, j), ok in related.items())


def structure_battery(g: Graph) -> dict[str, bool]:
    """Structural properties every candidate of Problem 2 is expected to
    have. All values True means nothing odd was found."""
    bip = is_bipartite(g)
    c6 = find_induced(g, "C6") is not None
    q3m = find_induced(g, "Q3minus") is not None
    return {
        "bipartite": bip,
        "k33_free": find_induced(g, "K33") is None,
        "cycle_edges_on_c4": all(
            edge_on_induced_c4(g, e) is not None for e in g.edges() if edge_on_cycle(g, e)
        ),
        "c6_iff_q3minus": c6 == q3m,
        "partial_cube": bip and theta_transitive(g),
    }


def _p1(g: Graph, seed: int, samples: int) -> dict | None:
    m = Metric(g)
    k = m.k_median_number()
    if k == 0 or k == g.n:
        return None
    if find_induced(g, "K23") is not None or find_induced(g, "Q3minus") is not None:
        return None
    med = brute.medico_set(g)
    if not med or len(med) == g.n or brute.has_pattern(g, "K23") or brute.has_pattern(g, "Q3minus"):
        return None
    return {"k": len(med), "medico": sorted(med)}


def _p2(g: Graph, seed: int, samples: int) -> dict | None:
    m = Metric(g)
    k = m.k_median_number()
    if k == 0 or k == g.n or find_induced(g, "K23") is not None:
        return None
    battery = structure_battery(g)
    if all(battery.values()):
        return None
    med = brute.medico_set(g)
    if not med or len(med) == g.n or brute.has_pattern(g, "K23"):
        return None
    if all(structure_battery(g).values()):
        return None
    return {"k": len(med), "medico": sorted(med), "battery": battery}


def _p3(g: Graph, seed: int, samples: int) -> dict | None:
    m = Metric(g)
    if m.k_median_number() == 0:
        return None
    for bits in sample_convex_sets(m, samples, seed):
        h, labels = g.induced_subgraph(bits)
        if Metric(h).k_median_number():
            continue
        # second evaluation from the definitions
        if brute.medico_set(g) and brute.is_convex_set(g, labels) and not brute.medico_set(h):
            med = brute.medico_set(g)
            return {"k": len(med), "medico": sorted(med), "convex_subset": labels}
    return None


_EVALUATORS: dict[str, Callable[[Graph, int, int], dict | None]] = {
    "P1_Q3M_K23": _p1,
    "P2_K23FREE": _p2,
    "P3_CONVEX_1MED": _p3,
}


def evaluate(problem: SearchProblem | str, g: Graph, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> dict | None:
    """Hit record for one graph, or None."""
    p = get_problem(problem)
    found = _EVALUATORS[p.id](g, seed, samples)
    if found is None:
        return None
    hit = {"problem": p.id, **graph_record(g), "n": g.n, "m": g.m, **found}
    if p.note:
        hit["note"] = p.note
    return hit


def _work(item):
    problem_id, index, n, adj, seed, samples = item
    return index, evaluate(problem_id, Graph(n, adj), seed + index, samples)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("MEDICO_JOBS", "1")))
    except ValueError:
        return 1


def search(
    problem: SearchProblem | str,
    graphs: Iterable[Graph],
    budget: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    samples: int = DEFAULT_SAMPLES,
    on_hit: Callable[[dict], None] | None = None,
) -> SearchLog:
    """Scan up to ``budget`` graphs from ``graphs`` in order.

    Hits carry their 0-based stream ``index`` and arrive in stream order
    whatever the number of worker processes. Parse errors from the stream
    propagate unchanged.
    """
    p = get_problem(problem)
    log = SearchLog(p)
    stream = graphs if budget is None else islice(graphs, budget)
    items = ((p.id, i, g.n, g.adj, seed, samples) for i, g in enumerate(stream))

    def record(index, hit):
        log.graphs = index + 1
        if hit is not None:
            hit = {"index": index, **hit}
            log.hits.append(hit)
            if on_hit:
                on_hit(hit)

    if jobs <= 1:
        for item in items:
            record(*_work(item))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for index, hit in pool.map(_work, items, chunksize=16):
                record(index, hit)
    return log
