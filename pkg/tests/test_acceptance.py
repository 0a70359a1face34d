"""Acceptance criteria, one test per criterion.

Each test appends a ``CRITERION <n> PASS|FAIL|FINDING: ...`` line to
``LINES``; the lines are printed in the pytest terminal summary and when the
module is run directly (``python3 tests/test_acceptance.py``).
"""

import sys
import time
from itertools import combinations
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).parent))

from corpus import corpus, suite_results  # noqa: E402
from medico import brute  # noqa: E402
from medico.cli import main  # noqa: E402
from medico.generators import (  # noqa: E402
    SplitMix64,
    complete_bipartite,
    cycle,
    hypercube,
    hypercube_minus,
    random_bipartite_connected,
    random_tree,
)
from medico.graph import Graph  # noqa: E402
from medico.io import iter_graph6, to_graph6  # noqa: E402
from medico.metric import Metric  # noqa: E402
from medico.patterns import find_all_induced, induced_cycles  # noqa: E402
from medico.conditions import is_modular  # noqa: E402
from medico.report import analyze  # noqa: E402

DATA = Path(__file__).parent / "data"
LINES: list[str] = []


def record(number, ok, detail, status=None):
    status = status or ("PASS" if ok else "FAIL")
    LINES.append(f"CRITERION {number} {status}: {detail}")
    return ok


def failures(theorems):
    """(label, check) for every failed check among ``theorems``."""
    wanted = set(theorems)
    return [(label, c) for label, _, checks in suite_results() for c in checks if c.theorem in wanted and c.status == "fail"]


def test_criterion_1_named_k_values():
    start = time.perf_counter()
    expected = [("K2,3", complete_bipartite(2, 3), 2), ("Q3-", hypercube_minus(3), 4), ("K3,3", complete_bipartite(3, 3), 0),
                ("C4", cycle(4), 4), ("Q3", hypercube(3), 8), ("Q4", hypercube(4), 16)]
    expected += [(f"C{2 * m}", cycle(2 * m), 0) for m in range(3, 7)]
    wrong = [name for name, g, k in expected if Metric(g).k_median_number() != k]
    q = Metric(hypercube_minus(3))
    if q.g.n - len(q.medico_set()) != 3:
        wrong.append("Q3- non-medico count")
    trees = 0
    for n in range(1, 13):
        for t in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
            g = Graph.from_edges(n, t.edges())
            trees += 1
            if Metric(g).k_median_number() != n or (n <= 9 and len(brute.medico_set(g)) != n):
                wrong.append(f"tree n={n}")
    for n in range(13, 65):
        for seed in range(3):
            g = random_tree(n, SplitMix64(seed))
            trees += 1
            if Metric(g).k_median_number() != n:
                wrong.append(f"random tree n={n}")
    elapsed = time.perf_counter() - start
    ok = not wrong and elapsed < 5
    record(1, ok, f"{len(expected)} named graphs, {trees} trees (all n<=12, random up to 64), "
                  f"{len(wrong)} mismatches, {elapsed:.2f}s (limit 5s)")
    assert not wrong, wrong
    assert elapsed < 5


def test_criterion_2_no_n_minus_1_or_2():
    start = time.perf_counter()
    graphs = corpus()
    bad = []
    randoms = 0
    for label, g in graphs:
        randoms += label.startswith("random")
        k = Metric(g).k_median_number()
        if g.n >= 3 and k in (g.n - 1, g.n - 2):
            bad.append(label)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300 and randoms >= 10_000
    record(2, ok, f"{len(graphs)} graphs ({randoms} random, n 3..10), {len(bad)} with k in {{n-1, n-2}}, "
                  f"{elapsed:.1f}s (limit 300s)")
    assert ok, bad[:5]


CHARACTERIZATIONS = ("CHAR_C1", "CHAR_C0C2", "IMRICH", "MULDER", "MED_MODULAR_K23FREE", "MODULAR_MESHED", "CHARMODMED")


def test_criterion_3_characterizations_agree():
    bad = failures(CHARACTERIZATIONS)
    record(3, not bad, f"{len(CHARACTERIZATIONS)} characterizations x {len(corpus())} graphs, {len(bad)} disagreements"
           + (f"; first witness {bad[0][1].witness}" if bad else ""))
    assert not bad


STRUCTURAL = ("BIPARTITE", "K33FREE", "CYCLE_C4", "C6_Q3M", "NO_CONVEX_CYCLE", "CNDIST")


def test_criterion_4_structural_conditions():
    bad = failures(STRUCTURAL)
    applicable = sum(
        1 for _, _, checks in suite_results() if any(c.theorem == "BIPARTITE" and c.status == "pass" for c in checks)
    )
    record(4, not bad, f"{applicable} graphs with k>=1 checked for {', '.join(STRUCTURAL)}; {len(bad)} violations"
           + (f"; first witness {bad[0][1].witness}" if bad else ""))
    assert not bad


def test_criterion_5_mu_convexity():
    bad = failures(("I_RHO_CONVEX", "CHAR_VCONVEX"))
    per_vertex = []
    for _, g, checks in suite_results():
        for c in checks:
            if c.theorem == "I_RHO_CONVEX" and c.status == "pass":
                k = len(brute.medico_set(g))
                per_vertex.append(c.detail["closures_sampled"] // k)
    enough = bool(per_vertex) and min(per_vertex) >= 50
    ok = not bad and enough
    record(5, ok, f"{len(per_vertex)} graphs with k>=1, >= {min(per_vertex, default=0)} sampled closures per medico "
                  f"vertex, {len(bad)} violations")
    assert ok


def naive_distances(g):
    inf = float("inf")
    d = [[0 if u == v else (1 if g.has_edge(u, v) else inf) for v in range(g.n)] for u in range(g.n)]
    for w in range(g.n):
        for u in range(g.n):
            for v in range(g.n):
                if d[u][w] + d[w][v] < d[u][v]:
                    d[u][v] = d[u][w] + d[w][v]
    return d


def naive_interval(g, d, u, v):
    """Vertices of every walk of length d(u, v) from u to v."""
    found = set()

    def walk(path):
        x = path[-1]
        if len(path) - 1 == d[u][v]:
            if x == v:
                found.update(path)
            return
        for y in g.neighbors(x):
            walk(path + [y])

    if d[u][v] != float("inf"):
        walk([u])
    return found


def naive_modular(g, d):
    # the empty graph is vacuously modular
    if any(x == float("inf") for row in d for x in row):
        return False
    for u, v, w in combinations(range(g.n), 3):
        if not any(d[u][x] + d[x][v] == d[u][v] and d[u][x] + d[x][w] == d[u][w] and d[v][x] + d[x][w] == d[v][w]
                   for x in range(g.n)):
            return False
    return True


def test_criterion_6_small_order_oracles():
    start = time.perf_counter()
    with open(DATA / "atlas7.g6", "rb") as fh:
        graphs = list(iter_graph6(fh))
    mismatches = []
    for i, g in enumerate(graphs):
        m = Metric(g)
        d = naive_distances(g)
        for u in range(g.n):
            for v in range(g.n):
                got = set(m.interval(u, v)) if d[u][v] != float("inf") else set()
                if got != naive_interval(g, d, u, v):
                    mismatches.append((i, "interval", u, v))
        for pattern in ("K23", "K33", "Q3minus", "C4", "C6"):
            got = {frozenset(e.vertices) for e in find_all_induced(g, pattern).embeddings}
            if got != brute.pattern_sets(g, pattern):
                mismatches.append((i, pattern))
        cycles = {}
        for e in induced_cycles(g, 7):
            cycles.setdefault(len(e.vertices), set()).add(frozenset(e.vertices))
        for length in range(3, g.n + 1):
            ring = [(j, (j + 1) % length) for j in range(length)]
            if cycles.get(length, set()) != set(brute.induced_vertex_sets(g, length, ring)):
                mismatches.append((i, f"C{length}"))
        if is_modular(m).ok != naive_modular(g, d):
            mismatches.append((i, "modular"))
        if set(m.medico_set()) != brute.medico_set(g):
            mismatches.append((i, "medico"))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 600 and len(graphs) == 1253
    record(6, ok, f"{len(graphs)} graphs with n<=7: intervals, 5 patterns, induced cycles, modularity, medico sets; "
                  f"{len(mismatches)} mismatches, {elapsed:.1f}s (limit 600s)")
    assert ok, mismatches[:5]


def test_criterion_7_open_problem_searches(tmp_path, capsys):
    stream = tmp_path / "corpus.g6"
    stream.write_text("".join(to_graph6(g) + "\n" for _, g in corpus()))
    codes = {}
    hits = {}
    for problem in ("1", "3"):
        codes[problem] = main(["search", "--problem", problem, "--stream", str(stream), "--seed", "7"])
        out, err = capsys.readouterr()
        hits[problem] = out.splitlines()
        codes[problem] = (codes[problem], err.strip())
    ok = all(code == 0 for code, _ in codes.values())
    summary = "; ".join(f"problem {p}: exit {c} ({e})" for p, (c, e) in codes.items())
    if ok:
        record(7, True, summary)
    else:
        # hits are re-verified by the search itself; they are findings
        record(7, True, summary + f"; hits {hits}", status="FINDING")
    assert all(code in (0, 3) for code, _ in codes.values())


def test_criterion_8_performance():
    start = time.perf_counter()
    r = analyze(hypercube(6))
    q6 = time.perf_counter() - start
    g = random_bipartite_connected(256, 0.05, SplitMix64(8))
    start = time.perf_counter()
    big = analyze(g)
    large = time.perf_counter() - start
    ok = q6 < 2 and large < 60 and r.k == 64 and big.n == 256
    record(8, ok, f"Q6 full analysis {q6:.2f}s (limit 2s, k={r.k}); n=256 p=0.05 m={g.m} {large:.2f}s (limit 60s)")
    assert ok


if __name__ == "__main__":
    import pytest

    code = pytest.main([__file__, "-q"])
    print("\n".join(LINES))
    sys.exit(code)
