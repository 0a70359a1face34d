"""Theorem cross-checks.

Every check evaluates a known characterization twice: once from the raw
distance matrix (:mod:`medico.brute`) and once through the fast machinery in
:mod:`medico.metric`, :mod:`medico.conditions` and :mod:`medico.patterns`.
Implications are checked premise first; when the premise fails the check is
``skipped`` with the reason.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from . import brute
from .conditions import (
    check_C0,
    check_C1,
    check_C2,
    charmodmed_check,
    enumerate_quartets,
    is_meshed,
    is_modular,
    is_mu_meshed,
)
from .errors import Incomplete
from .generators import SplitMix64
from .graph import Graph, is_bipartite
from .io import MAX_GRAPH6_ORDER, to_edgelist, to_graph6
from .metric import Metric
from .patterns import edge_on_cycle, edge_on_induced_c4, find_induced, induced_cycles
from .vertexset import iter_bits

THEOREMS = (
    "CHAR_C1",
    "CHAR_C0C2",
    "CHAR_VCONVEX",
    "IMRICH",
    "MULDER",
    "MED_MODULAR_K23FREE",
    "MODULAR_MESHED",
    "CHARMODMED",
    "PROP_N12",
    "CYCLE_C4",
    "C6_Q3M",
    "K33FREE",
    "BIPARTITE",
    "CNDIST",
    "QUARTET_C4",
    "TWO_QUARTETS",
    "NO_CONVEX_CYCLE",
    "CONVEX_MODULAR_1MED",
    "I_RHO_CONVEX",
)

DEFAULT_SAMPLES = 50
# Above this order the convex-subgraph sampler draws random triples instead
# of taking every triple.
ALL_TRIPLES_MAX_N = 9
CYCLE_LENGTH_LIMIT = 12


def graph_record(g: Graph) -> dict:
    """Self-contained encoding of ``g`` that ``medico analyze`` can replay."""
    if g.n <= MAX_GRAPH6_ORDER:
        return {"graph6": to_graph6(g)}
    return {"edgelist": to_edgelist(g)}


@dataclass
class TheoremCheck:
    theorem: str
    status: str  # "pass", "fail" or "skipped"
    witness: dict | None = None
    reason: str | None = None
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        out = {"theorem": self.theorem, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        if self.detail:
            out["detail"] = self.detail
        return out


class _Context:
    """Lazily shared evaluations for one graph."""

    def __init__(self, g: Graph, seed: int, samples: int):
        self.g = g
        self.seed = seed
        self.samples = samples

    @cached_property
    def m(self) -> Metric:
        return Metric(self.g)

    @cached_property
    def D(self) -> np.ndarray | None:
        return brute.distance_array(self.g)

    @cached_property
    def medico(self) -> frozenset[int]:
        return brute.medico_set(self.g)

    @cached_property
    def median(self) -> bool:
        return self.g.n >= 1 and len(self.medico) == self.g.n

    @cached_property
    def modular(self) -> bool:
        return brute.is_modular(self.g)

    @cached_property
    def cycles(self):
        return induced_cycles(self.g, CYCLE_LENGTH_LIMIT)

    @cached_property
    def rings(self) -> dict[int, np.ndarray]:
        """Induced cycles grouped by length, one ring per array row."""
        by_length: dict[int, list[tuple[int, ...]]] = {}
        for emb in self.cycles:
            by_length.setdefault(len(emb.vertices), []).append(emb.vertices)
        return {k: np.array(v, dtype=np.intp) for k, v in by_length.items()}

    @cached_property
    def _views(self) -> dict:
        return {}

    @cached_property
    def _closures(self) -> dict:
        return {}

    def view(self, bits: int):
        """Distance matrix of the subgraph induced by ``bits`` (None when it
        is disconnected) and its sorted vertex list."""
        if bits not in self._views:
            h, labels = self.g.induced_subgraph(bits)
            self._views[bits] = (brute.distance_array(h), labels)
        return self._views[bits]

    def closures(self, mu: int) -> list[int]:
        """``samples`` random mu-convex closures of 1 to 3 seed vertices from
        the component of ``mu``; duplicates collapse, first-seen order kept."""
        if mu not in self._closures:
            rows = self.g.distances.rows
            comp = [v for v in self.g.vertices if rows[mu][v] is not None]
            rng = SplitMix64(self.seed * 1000003 + mu)
            seen: dict[int, None] = {}
            for _ in range(self.samples):
                seeds = 0
                for _ in range(1 + rng.below(min(3, len(comp)))):
                    seeds |= 1 << comp[rng.below(len(comp))]
                seen.setdefault(self.m.closure_bits(mu, seeds))
            self._closures[mu] = list(seen)
        return self._closures[mu]

    def fail(self, theorem: str, **detail) -> TheoremCheck:
        witness = dict(graph_record(self.g), theorem=theorem, **detail)
        return TheoremCheck(theorem, "fail", witness=witness)


def _pass(theorem: str, **detail) -> TheoremCheck:
    return TheoremCheck(theorem, "pass", detail=detail)


def _skip(theorem: str, reason: str) -> TheoremCheck:
    return TheoremCheck(theorem, "skipped", reason=reason)


def _need_medico(ctx: _Context, theorem: str) -> TheoremCheck | None:
    if not ctx.medico:
        return _skip(theorem, "no medico vertex")
    return None


def _check_char_c1(ctx: _Context) -> TheoremCheck:
    for mu in ctx.g.vertices:
        char = check_C1(ctx.m, mu).ok
        if char != (mu in ctx.medico):
            return ctx.fail("CHAR_C1", vertex=mu, definition=mu in ctx.medico, characterization=char)
    return _pass("CHAR_C1", medico=sorted(ctx.medico))


def _check_char_c0c2(ctx: _Context) -> TheoremCheck:
    m = ctx.m
    frame = m.connected and m.bipartite
    for mu in ctx.g.vertices:
        char = frame and check_C0(m, mu).ok and check_C2(m, mu).ok
        if char != (mu in ctx.medico):
            return ctx.fail("CHAR_C0C2", vertex=mu, definition=mu in ctx.medico, characterization=char)
    return _pass("CHAR_C0C2", medico=sorted(ctx.medico))


def _medico_in_bits(ctx: _Context, mu: int, bits: int) -> bool:
    D_h, labels = ctx.view(bits)
    if D_h is None:
        return False
    i = labels.index(mu)
    return _all_unique(brute.median_counts(D_h, i), i)


def _all_unique(counts: np.ndarray, mu: int) -> bool:
    mask = np.ones_like(counts, dtype=bool)
    mask[mu, :] = mask[:, mu] = False
    np.fill_diagonal(mask, False)
    return bool(np.all(counts[mask] == 1))


def _check_char_vconvex(ctx: _Context) -> TheoremCheck:
    if not ctx.m.connected:
        return _skip("CHAR_VCONVEX", "graph is disconnected")
    everywhere = set()
    drawn = 0
    for mu in ctx.g.vertices:
        closures = [ctx.g.all_bits] + ctx.closures(mu)
        drawn += ctx.samples
        if all(_medico_in_bits(ctx, mu, c) for c in closures):
            everywhere.add(mu)
    if everywhere != set(ctx.medico):
        diff = sorted(everywhere ^ set(ctx.medico))
        return ctx.fail("CHAR_VCONVEX", vertices=diff, definition=sorted(ctx.medico), characterization=sorted(everywhere))
    return _pass("CHAR_VCONVEX", closures_sampled=drawn)


def _check_imrich(ctx: _Context) -> TheoremCheck:
    char = ctx.m.imrich_condition().ok
    if char != ctx.median:
        return ctx.fail("IMRICH", definition=ctx.median, characterization=char)
    return _pass("IMRICH", median=ctx.median)


def _check_mulder(ctx: _Context) -> TheoremCheck:
    m = ctx.m
    if ctx.g.n == 0 or not m.connected:
        char = False
    else:
        char = m.is_interval_monotone().ok and all(check_C0(m, mu).ok for mu in ctx.g.vertices)
    if char != ctx.median:
        return ctx.fail("MULDER", definition=ctx.median, characterization=char)
    return _pass("MULDER", median=ctx.median)


def _check_med_modular(ctx: _Context) -> TheoremCheck:
    char = is_modular(ctx.m).ok and find_induced(ctx.g, "K23") is None
    if char != ctx.median:
        return ctx.fail("MED_MODULAR_K23FREE", definition=ctx.median, characterization=char)
    return _pass("MED_MODULAR_K23FREE", median=ctx.median)


def _check_modular_meshed(ctx: _Context) -> TheoremCheck:
    m = ctx.m
    char = m.connected and m.bipartite and is_meshed(m).ok
    if char != ctx.modular:
        return ctx.fail("MODULAR_MESHED", definition=ctx.modular, characterization=char)
    if ctx.medico and m.connected and is_meshed(m).ok != ctx.modular:
        return ctx.fail("MODULAR_MESHED", definition=ctx.modular, meshed=not ctx.modular)
    return _pass("MODULAR_MESHED", modular=ctx.modular)


def _check_charmodmed(ctx: _Context) -> TheoremCheck:
    if not ctx.modular:
        return _skip("CHARMODMED", "graph is not modular")
    try:
        char = {mu for mu in ctx.g.vertices if charmodmed_check(ctx.m, mu)}
    except Incomplete as exc:
        return _skip("CHARMODMED", str(exc))
    if char != set(ctx.medico):
        return ctx.fail("CHARMODMED", definition=sorted(ctx.medico), characterization=sorted(char))
    return _pass("CHARMODMED", medico=sorted(ctx.medico))


def _check_prop_n12(ctx: _Context) -> TheoremCheck:
    n = ctx.g.n
    if n < 3:
        return _skip("PROP_N12", "fewer than three vertices")
    k = len(ctx.medico)
    if k in (n - 1, n - 2):
        return ctx.fail("PROP_N12", k=k, n=n, medico=sorted(ctx.medico))
    return _pass("PROP_N12", k=k)


def _check_cycle_c4(ctx: _Context) -> TheoremCheck:
    if skip := _need_medico(ctx, "CYCLE_C4"):
        return skip
    for e in ctx.g.edges():
        if edge_on_cycle(ctx.g, e) and edge_on_induced_c4(ctx.g, e) is None:
            return ctx.fail("CYCLE_C4", edge=list(e))
    return _pass("CYCLE_C4")


def _check_c6_q3m(ctx: _Context) -> TheoremCheck:
    if skip := _need_medico(ctx, "C6_Q3M"):
        return skip
    c6 = find_induced(ctx.g, "C6")
    q3m = find_induced(ctx.g, "Q3minus")
    if (c6 is None) != (q3m is None):
        found = c6 or q3m
        return ctx.fail("C6_Q3M", found=found.to_dict())
    return _pass("C6_Q3M", present=c6 is not None)


def _check_k33free(ctx: _Context) -> TheoremCheck:
    if skip := _need_medico(ctx, "K33FREE"):
        return skip
    emb = find_induced(ctx.g, "K33")
    if emb is not None:
        return ctx.fail("K33FREE", embedding=emb.to_dict())
    return _pass("K33FREE")


def _check_bipartite(ctx: _Context) -> TheoremCheck:
    """Bipartiteness of k-median graphs, together with the unit distance gap
    across every edge seen from a medico vertex that it rests on."""
    if skip := _need_medico(ctx, "BIPARTITE"):
        return skip
    if not is_bipartite(ctx.g):
        return ctx.fail("BIPARTITE", medico=sorted(ctx.medico))
    D = ctx.D
    for mu in sorted(ctx.medico):
        for a, b in ctx.g.edges():
            if abs(int(D[mu, a]) - int(D[mu, b])) != 1:
                return ctx.fail("BIPARTITE", vertex=mu, edge=[a, b])
    return _pass("BIPARTITE")


def _cndist_violations(dist: np.ndarray) -> np.ndarray:
    """Rows of ``dist`` (distances from one vertex around an induced cycle,
    one cycle per row) that break the parity profile from some closest
    start."""
    length = dist.shape[1]
    idx = np.arange(length)
    step = np.abs(idx[:, None] - idx[None, :])
    ring = np.minimum(step, length - step)  # ring[start, j]
    low = dist.min(axis=1, keepdims=True)
    gap = (dist - low)[:, None, :]  # [row, start, j]
    bad = (gap > ring) | ((ring - gap) % 2 == 1)
    is_start = dist == low
    return np.any(bad.any(axis=2) & is_start, axis=1)


def _check_cndist(ctx: _Context) -> TheoremCheck:
    if skip := _need_medico(ctx, "CNDIST"):
        return skip
    D = ctx.D
    for mu in sorted(ctx.medico):
        for rings in ctx.rings.values():
            dist = D[mu][rings]
            bad = _cndist_violations(dist)
            if bad.any():
                ring = rings[int(np.argmax(bad))].tolist()
                return ctx.fail("CNDIST", vertex=mu, cycle=ring, distances=[int(D[mu, v]) for v in ring])
    return _pass("CNDIST", cycles=len(ctx.cycles))


def _static_triple(D: np.ndarray, mu: int, x: int, z: int, y: int) -> bool:
    """Definition of a distance-l-static quartet (x, z, y, mu); the caller
    guarantees that y is adjacent to x and z."""
    return x != z and D[x, z] == 2 and D[mu, x] == D[mu, z] == D[mu, y] - 1


def _check_quartet_c4(ctx: _Context) -> TheoremCheck:
    """Quartets from a medico vertex are exactly the P3s closing into an
    induced C4 through a closer fourth vertex; such a vertex is mu-meshed and
    every induced cycle carries a quartet on two consecutive edges."""
    if skip := _need_medico(ctx, "QUARTET_C4"):
        return skip
    g, D = ctx.g, ctx.D
    adj = g.adj
    for mu in sorted(ctx.medico):
        for y in g.vertices:
            nb = g.neighbors(y)
            for x, z in combinations(nb, 2):
                static = _static_triple(D, mu, x, z, y)
                fourth = [
                    u
                    for u in iter_bits(adj[x] & adj[z] & ~adj[y] & ~(1 << y))
                    if D[mu, u] < min(D[mu, x], D[mu, y], D[mu, z])
                ]
                if static != bool(fourth):
                    return ctx.fail("QUARTET_C4", vertex=mu, path=[x, y, z], static=static, closing=fourth)
        if not is_mu_meshed(ctx.m, mu).ok:
            return ctx.fail("QUARTET_C4", vertex=mu, mu_meshed=False)
        for rings in ctx.rings.values():
            # on an induced cycle of length >= 4 the ends of a 2-path are at
            # distance 2, so only the levels matter
            d = D[mu][rings]
            peak = (np.roll(d, 1, axis=1) == d - 1) & (np.roll(d, -1, axis=1) == d - 1)
            lacking = ~peak.any(axis=1)
            if rings.shape[1] < 4:
                lacking[:] = True
            if lacking.any():
                return ctx.fail("QUARTET_C4", vertex=mu, cycle=rings[int(np.argmax(lacking))].tolist())
    return _pass("QUARTET_C4")


def _check_two_quartets(ctx: _Context) -> TheoremCheck:
    """Two quartets sharing x and y force an induced K2,3 or Q3-minus; in
    Q3-minus-free graphs the converse holds for K2,3."""
    if skip := _need_medico(ctx, "TWO_QUARTETS"):
        return skip
    g = ctx.g
    has_k23 = find_induced(g, "K23") is not None
    has_q3m = find_induced(g, "Q3minus") is not None
    for mu in sorted(ctx.medico):
        pairs: dict[tuple[int, int], set[int]] = {}
        for q in enumerate_quartets(ctx.m, mu):
            pairs.setdefault((q.x, q.y), set()).add(q.z)
        double = next(((xy, zs) for xy, zs in pairs.items() if len(zs) > 1), None)
        if double is not None and not (has_k23 or has_q3m):
            (x, y), zs = double
            return ctx.fail("TWO_QUARTETS", vertex=mu, x=x, y=y, z=sorted(zs)[:2])
        if not has_q3m and has_k23 != (double is not None):
            return ctx.fail("TWO_QUARTETS", vertex=mu, k23=has_k23, two_quartets=double is not None)
    return _pass("TWO_QUARTETS", k23=has_k23, q3minus=has_q3m)


def _check_no_convex_cycle(ctx: _Context) -> TheoremCheck:
    if skip := _need_medico(ctx, "NO_CONVEX_CYCLE"):
        return skip
    for emb in ctx.cycles:
        if len(emb.vertices) > 4 and ctx.m.convexity_violation(emb.vertex_bits) is None:
            return ctx.fail("NO_CONVEX_CYCLE", cycle=list(emb.vertices))
    return _pass("NO_CONVEX_CYCLE")


def sample_convex_sets(m: Metric, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> list[int]:
    """Convex hulls of every vertex pair, plus every triple when
    ``n <= ALL_TRIPLES_MAX_N`` or ``samples`` random triples otherwise.

    The hull of a pair contains its interval, so intervals are covered by the
    pair hulls. Only sets inside one component are produced.
    """
    g = m.g
    comp_of = g.components
    seen: dict[int, None] = {}

    def add(vs):
        if len({comp_of[v] for v in vs}) == 1:
            seen.setdefault(m.hull_bits(sum(1 << v for v in set(vs))))

    for pair in combinations(g.vertices, 2):
        add(pair)
    if g.n <= ALL_TRIPLES_MAX_N:
        for triple in combinations(g.vertices, 3):
            add(triple)
    elif g.n:
        rng = SplitMix64(seed)
        for _ in range(samples):
            add([rng.below(g.n) for _ in range(3)])
    return list(seen)


def _check_convex_modular(ctx: _Context) -> TheoremCheck:
    """Convex subgraphs of modular k-median graphs are 1-median, and those of
    median graphs are median."""
    if not ctx.medico:
        return _skip("CONVEX_MODULAR_1MED", "no medico vertex")
    if not ctx.modular:
        return _skip("CONVEX_MODULAR_1MED", "graph is not modular")
    sets = sample_convex_sets(ctx.m, ctx.samples, ctx.seed)
    for bits in sets:
        h, labels = ctx.g.induced_subgraph(bits)
        med = brute.medico_set(h)
        if not med or (ctx.median and len(med) != h.n):
            return ctx.fail("CONVEX_MODULAR_1MED", subset=labels, medico_in_subgraph=sorted(labels[i] for i in med))
    return _pass("CONVEX_MODULAR_1MED", convex_sets=len(sets))


def _rho_violation(ctx: _Context, mu: int, bits: int, counts_g: np.ndarray) -> str | None:
    """Name of the first failing property of the mu-convex set ``bits``."""
    labels = list(iter_bits(bits))
    for x in labels:
        if not brute.interval(ctx.g, mu, x) <= set(labels):
            return "not mu-convex"
    D_h, _ = ctx.view(bits)
    if D_h is None or not np.array_equal(D_h, ctx.D[np.ix_(labels, labels)]):
        return "not isometric"
    i = labels.index(mu)
    counts_h = brute.median_counts(D_h, i)
    if not _all_unique(counts_h, i):
        return "mu not medico in subgraph"
    if not np.array_equal(counts_h, counts_g[np.ix_(labels, labels)]):
        return "median differs from the host graph"
    return None


def _check_i_rho_convex(ctx: _Context) -> TheoremCheck:
    """Intervals from a medico vertex and sampled mu-convex closures are
    isometric and 1-median with the same medians as the host graph."""
    if skip := _need_medico(ctx, "I_RHO_CONVEX"):
        return skip
    drawn = 0
    for mu in sorted(ctx.medico):
        counts_g = brute.median_counts(ctx.D, mu)
        intervals = [ctx.m.interval_bits(mu, v) for v in ctx.g.vertices]
        closures = ctx.closures(mu)
        drawn += ctx.samples
        for bits in dict.fromkeys(intervals + closures):
            problem = _rho_violation(ctx, mu, bits, counts_g)
            if problem:
                return ctx.fail("I_RHO_CONVEX", vertex=mu, subset=list(iter_bits(bits)), problem=problem)
    return _pass("I_RHO_CONVEX", closures_sampled=drawn)


_CHECKS = {
    "CHAR_C1": _check_char_c1,
    "CHAR_C0C2": _check_char_c0c2,
    "CHAR_VCONVEX": _check_char_vconvex,
    "IMRICH": _check_imrich,
    "MULDER": _check_mulder,
    "MED_MODULAR_K23FREE": _check_med_modular,
    "MODULAR_MESHED": _check_modular_meshed,
    "CHARMODMED": _check_charmodmed,
    "PROP_N12": _check_prop_n12,
    "CYCLE_C4": _check_cycle_c4,
    "C6_Q3M": _check_c6_q3m,
    "K33FREE": _check_k33free,
    "BIPARTITE": _check_bipartite,
    "CNDIST": _check_cndist,
    "QUARTET_C4": _check_quartet_c4,
    "TWO_QUARTETS": _check_two_quartets,
    "NO_CONVEX_CYCLE": _check_no_convex_cycle,
    "CONVEX_MODULAR_1MED": _check_convex_modular,
    "I_RHO_CONVEX": _check_i_rho_convex,
}


def parse_theorems(text: str) -> list[str]:
    """``"all"`` or a comma-separated list of ids; raises KeyError on an
    unknown id."""
    if text.strip().lower() == "all":
        return list(THEOREMS)
    ids = [t.strip().upper() for t in text.split(",") if t.strip()]
    if not ids:
        raise KeyError(text)
    for t in ids:
        if t not in _CHECKS:
            raise KeyError(t)
    return ids


def run_theorem_suite(g: Graph, which=None, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> list[TheoremCheck]:
    """Run the selected checks (default: all) in the canonical order."""
    wanted = THEOREMS if which is None else [t for t in THEOREMS if t in set(which)]
    unknown = set(which or ()) - set(THEOREMS)
    if unknown:
        raise KeyError(sorted(unknown)[0])
    if g.n == 0:
        return [_skip(t, "empty graph") for t in wanted]
    ctx = _Context(g, seed, samples)
    return [_CHECKS[t](ctx) for t in wanted]


def _verify_work(item):
    index, n, adj, which, seed, samples = item
    return index, run_theorem_suite(Graph(n, adj), which, seed, samples)


def verify_stream(graphs, which=None, seed: int = 0, samples: int = DEFAULT_SAMPLES, jobs: int = 1):
    """Yield ``(index, graph, checks)`` for every graph, in input order.

    With ``jobs > 1`` the suites run in a process pool; results are still
    delivered in stream order.
    """
    which = list(which) if which is not None else None
    if jobs <= 1:
        for i, g in enumerate(graphs):
            yield i, g, run_theorem_suite(g, which, seed, samples)
        return
    pending = []

    def items():
        for i, g in enumerate(graphs):
            pending.append(g)
            yield i, g.n, g.adj, which, seed, samples

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for index, checks in pool.map(_verify_work, items(), chunksize=8):
            yield index, pending[index], checks
            pending[index] = None
