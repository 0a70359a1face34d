"""Intervals, medians, medico vertices and the convexity operators.

Everything here reads the BFS layers of :class:`~medico.graph.DistanceMatrix`.
For vertices ``u, v`` at distance ``D`` the interval is

    I(u, v) = OR_{k=0..D} layer(u, k) & layer(v, D - k)

so the full :class:`IntervalTable` costs ``O(n^2 * diam)`` word-parallel
ANDs, and a median set ``I(u,v) & I(u,w) & I(v,w)`` is two more.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DifferentComponents, Disconnected
from .graph import Graph, is_bipartite, is_connected
from .verdict import PASS, Verdict
from .vertexset import VertexSet, bits_of, iter_bits, lowest

DEFAULT_PRECOMPUTE_THRESHOLD = 1024


class IntervalTable:
    """``I(u, v)`` for every pair, as bitmasks; empty across components.

    For graphs above ``threshold`` vertices rows are built on first use
    instead of eagerly.
    """

    def __init__(self, g: Graph, threshold: int = DEFAULT_PRECOMPUTE_THRESHOLD):
        self.n = g.n
        self._dist = g.distances
        self.precomputed = g.n <= threshold
        self._rows: list[list[int] | None] = [None] * g.n
        if self.precomputed:
            for u in range(g.n):
                self._rows[u] = self._build_row(u)

    def _pair(self, u: int, v: int) -> int:
        d = self._dist.rows[u][v]
        if d is None:
            return 0
        lu, lv = self._dist.levels[u], self._dist.levels[v]
        b = 0
        for k in range(d + 1):
            b |= lu[k] & lv[d - k]
        return b

    def _build_row(self, u: int) -> list[int]:
        row = [0] * self.n
        for v in range(self.n):
            if v < u and self._rows[v] is not None:
                row[v] = self._rows[v][u]
            else:
                row[v] = self._pair(u, v)
        return row

    def row(self, u: int) -> list[int]:
        r = self._rows[u]
        if r is None:
            r = self._rows[u] = self._build_row(u)
        return r

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.row(u)[v]


@dataclass(frozen=True)
class MedianResult:
    triple: tuple[int, int, int]
    median_set: VertexSet

    @property
    def unique(self) -> bool:
        return len(self.median_set) == 1

    @property
    def median(self) -> int | None:
        return next(iter(self.median_set)) if self.unique else None


def _single(b: int) -> bool:
    return b != 0 and b & (b - 1) == 0


class Metric:
    """Interval structure of one graph.

    Construct once per graph; all queries are read-only and cached where
    repeated use is expected (medico set, interval table).
    """

    def __init__(self, g: Graph, precompute_threshold: int = DEFAULT_PRECOMPUTE_THRESHOLD):
        self.g = g
        self.n = g.n
        self.dist = g.distances
        self.table = IntervalTable(g, precompute_threshold)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.g)

    def _check_same_component(self, *vs: int) -> None:
        rows = self.dist.rows
        for v in vs[1:]:
            if rows[vs[0]][v] is None:
                raise DifferentComponents(f"vertices {vs[0]} and {v} lie in different components")

    def _require_connected(self) -> None:
        if not self.connected:
            raise Disconnected("graph is not connected")

    @cached_property
    def edge_toward(self) -> tuple[dict[int, int], ...]:
        """``edge_toward[v][y]`` for each neighbour ``y`` of ``v``: the vertices
        ``w`` with ``y in I(v, w)``, i.e. ``d(w, y) = d(w, v) - 1``."""
        levels = self.dist.levels
        out = []
        for v in range(self.n):
            lv = levels[v]
            per = {}
            for y in iter_bits(self.g.adj[v]):
                ly = levels[y]
                b = 0
                for k in range(1, min(len(lv), len(ly) + 1)):
                    b |= lv[k] & ly[k - 1]
                per[y] = b
            out.append(per)
        return tuple(out)

    def through_bits(self, mu: int, v: int) -> int:
        """Vertices ``w`` with ``v in I(mu, w)``."""
        d = self.dist.rows[mu][v]
        if d is None:
            return 0
        lv, lm = self.dist.levels[v], self.dist.levels[mu]
        b = 0
        for k in range(len(lv)):
            if d + k >= len(lm):
                break
            b |= lv[k] & lm[d + k]
        return b

    # intervals and medians

    def interval_bits(self, u: int, v: int) -> int:
        return self.table.row(u)[v]

    def interval(self, u: int, v: int) -> VertexSet:
        self._check_same_component(u, v)
        return VertexSet(self.interval_bits(u, v), self.n)

    def median_bits(self, u: int, v: int, w: int) -> int:
        ru = self.table.row(u)
        return ru[v] & ru[w] & self.table.row(v)[w]

    def median_set(self, u: int, v: int, w: int) -> MedianResult:
        self._check_same_component(u, v, w)
        return MedianResult((u, v, w), VertexSet(self.median_bits(u, v, w), self.n))

    # medico vertices

    def is_medico(self, mu: int) -> Verdict:
        """Is ``|I(mu, v, w)| = 1`` for all distinct ``v, w`` other than ``mu``?

        Disconnected graphs have no medico vertex. On failure the witness is
        the lexicographically first offending pair ``(v, w)``.
        """
        n = self.n
        if not self.connected:
            return Verdict(False, None, "graph is disconnected")
        rmu = self.table.row(mu)
        for v in range(n):
            if v == mu:
                continue
            a = rmu[v]
            rv = self.table.row(v)
            for w in range(v + 1, n):
                if w == mu:
                    continue
                if not _single(a & rmu[w] & rv[w]):
                    return Verdict(False, (v, w), "median not unique")
        return PASS

    @cached_property
    def medico_verdicts(self) -> tuple[Verdict, ...]:
        return tuple(self.is_medico(mu) for mu in range(self.n))

    def medico_set(self) -> VertexSet:
        return VertexSet(bits_of(mu for mu, r in enumerate(self.medico_verdicts) if r.ok), self.n)

    def k_median_number(self) -> int:
        """Number of medico vertices: the largest ``k`` for which the graph is
        a k-median graph, or 0 if it is none."""
        return len(self.medico_set())

    def is_median_graph(self) -> bool:
        return self.n >= 1 and self.k_median_number() == self.n

    def is_proper_k_median(self, k: int) -> bool:
        return k >= 1 and self.k_median_number() == k

    # interval subgraphs

    def interval_subgraph(self, u: int, v: int) -> frozenset[tuple[int, int]]:
        """Edges lying on some shortest ``(u, v)``-path, as ``(a, b)`` with ``a < b``."""
        self._check_same_component(u, v)
        du, dv = self.dist.rows[u], self.dist.rows[v]
        duv = du[v]
        inside = self.interval_bits(u, v)
        edges = set()
        for a in iter_bits(inside):
            for b in iter_bits(self.g.adj[a] & inside):
                if a < b and (du[a] + 1 + dv[b] == duv or du[b] + 1 + dv[a] == duv):
                    edges.add((a, b))
        return frozenset(edges)

    def triple_graph(self, u: int, v: int, w: int) -> tuple[VertexSet, frozenset[tuple[int, int]]]:
        """``G(u,v) & G(u,w) & G(v,w)`` as (vertex set, edge set)."""
        self._check_same_component(u, v, w)
        verts = VertexSet(self.median_bits(u, v, w), self.n)
        edges = self.interval_subgraph(u, v) & self.interval_subgraph(u, w) & self.interval_subgraph(v, w)
        return verts, edges

    def imrich_condition(self) -> Verdict:
        """Is ``G(u, v, w)`` non-empty and connected for every triple?

        An edge ``ab`` inside ``I(u,v)`` is on a shortest ``(u,v)``-path iff
        ``d(u,a) != d(u,b)``; that test replaces explicit edge-set intersections.
        Returns false on the empty graph so that it agrees with
        :meth:`is_median_graph`.
        """
        n = self.n
        if n == 0:
            return Verdict(False, None, "empty graph")
        if not self.connected:
            return Verdict(False, None, "graph is disconnected")
        rows = self.dist.rows
        adj = self.g.adj
        for u in range(n):
            ru = self.table.row(u)
            du = rows[u]
            for v in range(u, n):
                rv = self.table.row(v)
                dv = rows[v]
                a = ru[v]
                for w in range(v, n):
                    s = a & ru[w] & rv[w]
                    if _single(s):
                        continue
                    if not s:
                        return Verdict(False, (u, v, w), "empty")
                    start = lowest(s)
                    seen = 1 << start
                    stack = [start]
                    while stack:
                        x = stack.pop()
                        for y in iter_bits(adj[x] & s & ~seen):
                            if du[x] != du[y] and dv[x] != dv[y]:
                                seen |= 1 << y
                                stack.append(y)
                    if seen != s:
                        return Verdict(False, (u, v, w), "disconnected")
        return PASS

    # convexity

    def _bits(self, s: VertexSet | Iterable[int] | int) -> int:
        if isinstance(s, VertexSet):
            return s.bits
        if isinstance(s, int):
            return s
        return bits_of(s)

    def _check_one_component(self, s: int) -> None:
        if s:
            first = lowest(s)
            reach = self.dist.reach(first)
            if s & ~reach:
                raise DifferentComponents(f"vertex {lowest(s & ~reach)} not in the component of {first}")

    def hull_bits(self, s: int) -> int:
        hull = s
        frontier = s
        while frontier:
            new = 0
            for x in iter_bits(frontier):
                row = self.table.row(x)
                for y in iter_bits(hull):
                    new |= row[y]
            frontier = new & ~hull
            hull |= new
        return hull

    def convex_hull(self, s) -> VertexSet:
        b = self._bits(s)
        self._check_one_component(b)
        return VertexSet(self.hull_bits(b), self.n)

    def convexity_violation(self, s: int) -> tuple[int, int] | None:
        """First pair ``x < y`` in ``s`` whose interval leaves ``s``."""
        for x in iter_bits(s):
            row = self.table.row(x)
            acc = 0
            for y in iter_bits(s):
                acc |= row[y]
            if acc & ~s:
                for y in iter_bits(s):
                    if row[y] & ~s:
                        return (min(x, y), max(x, y))
        return None

    def is_convex(self, s) -> bool:
        b = self._bits(s)
        self._check_one_component(b)
        return self.convexity_violation(b) is None

    def closure_bits(self, v: int, s: int) -> int:
        row = self.table.row(v)
        t = s | 1 << v
        frontier = t
        while frontier:
            new = 0
            for x in iter_bits(frontier):
                new |= row[x]
            frontier = new & ~t
            t |= new
        return t

    def v_convex_closure(self, v: int, s) -> VertexSet:
        """Smallest superset ``T`` of ``s + {v}`` with ``I(v, x) <= T`` for all ``x`` in ``T``.

        The subgraph meant is the one induced on ``T``; on bipartite graphs it is
        the only v-convex subgraph with that vertex set (see
        :attr:`v_convex_unique`).
        """
        b = self._bits(s) | 1 << v
        self._check_one_component(b)
        return VertexSet(self.closure_bits(v, b), self.n)

    def is_v_convex(self, v: int, s) -> bool:
        b = self._bits(s)
        if not b >> v & 1:
            return False
        self._check_one_component(b)
        return self.closure_bits(v, b) == b

    @property
    def v_convex_unique(self) -> bool:
        return self.bipartite

    def is_interval_monotone(self) -> Verdict:
        """Is every interval convex? Witness ``(u, v, x, y)`` with
        ``x, y in I(u,v)`` but ``I(x,y)`` not inside ``I(u,v)``."""
        self._require_connected()
        n = self.n
        for u in range(n):
            ru = self.table.row(u)
            for v in range(u + 1, n):
                s = ru[v]
                if s.bit_count() <= 2:
                    continue
                bad = self.convexity_violation(s)
                if bad is not None:
                    return Verdict(False, (u, v) + bad, "interval not convex")
        return PASS
