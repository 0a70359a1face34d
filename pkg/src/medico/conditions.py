"""Per-vertex conditions C0, C1, C2, distance-static quartets, meshedness
and modularity.

All functions take a :class:`~medico.metric.Metric` so the interval table is
shared between calls.
"""

from __future__ import annotations

from dataclasses import dataclass
import weakref

from .errors import Disconnected, Incomplete, NotModular
from .metric import Metric
from .verdict import PASS, Verdict
from .vertexset import iter_bits, lowest


def _connected_bits(adj, s: int) -> bool:
    start = lowest(s)
    seen = 1 << start
    stack = [start]
    while stack:
        x = stack.pop()
        nxt = adj[x] & s & ~seen
        seen |= nxt
        stack.extend(iter_bits(nxt))
    return seen == s


def check_C0(m: Metric, mu: int) -> Verdict:
    """``I(mu,v) & I(v,w) = {v}`` implies ``v in I(mu,w)``, for all ordered ``(v, w)``.

    If ``I(mu,v) & I(v,w)`` holds a vertex other than ``v`` it also holds a
    neighbour ``y`` of ``v`` with ``d(mu,y) = d(mu,v) - 1``, so the premise
    fails exactly for ``w`` in ``edge_toward[v][y]`` for such ``y``. That
    turns the inner loop over ``w`` into a few bitmask operations.
    """
    if not m.connected:
        raise Disconnected("C0 is only defined on connected graphs")
    rows = m.dist.rows
    toward = m.edge_toward
    everything = m.g.all_bits
    for v in range(m.n):
        dv = rows[mu][v]
        down = m.g.adj[v] & m.dist.level(mu, dv - 1) if dv > 0 else 0
        blocked = 0
        for y in iter_bits(down):
            blocked |= toward[v][y]
        bad = everything & ~blocked & ~m.through_bits(mu, v)
        if bad:
            return Verdict(False, (v, lowest(bad)), "I(mu,v) & I(v,w) = {v} but v not in I(mu,w)")
    return PASS


def check_C1(m: Metric, mu: int) -> Verdict:
    """``G[I(mu,v,w)]`` is non-empty and connected for all ``v, w``."""
    adj = m.g.adj
    rmu = m.table.row(mu)
    for v in range(m.n):
        a = rmu[v]
        rv = m.table.row(v)
        for w in range(v, m.n):
            s = a & rmu[w] & rv[w]
            if not s:
                return Verdict(False, (v, w), "empty")
            if s & (s - 1) and not _connected_bits(adj, s):
                return Verdict(False, (v, w), "disconnected")
    return PASS


def check_C2(m: Metric, mu: int) -> Verdict:
    """``G[I(mu,v,w)]`` has an edge whenever it has two or more vertices."""
    adj = m.g.adj
    rmu = m.table.row(mu)
    for v in range(m.n):
        a = rmu[v]
        rv = m.table.row(v)
        for w in range(v, m.n):
            s = a & rmu[w] & rv[w]
            if s & (s - 1) and not any(adj[x] & s for x in iter_bits(s)):
                return Verdict(False, (v, w), "independent median set")
    return PASS


@dataclass(frozen=True, order=True)
class Quartet:
    """Distance-static quartet: ``d(x,w) = d(z,w) = level = d(y,w) - 1``,
    ``d(x,z) = 2`` and ``y`` a common neighbour of ``x`` and ``z``."""

    x: int
    z: int
    y: int
    w: int
    level: int


def enumerate_quartets(m: Metric, w: int) -> list[Quartet]:
    """All quartets with reference ``w``, both orientations of ``(x, z)``,
    sorted by ``(y, x, z)``."""
    if not m.connected:
        raise Disconnected("quartets need a connected graph")
    adj = m.g.adj
    dw = m.dist.rows[w]
    out = []
    for y in range(m.n):
        ly = dw[y] - 1
        if ly < 1:
            continue
        same = [x for x in iter_bits(adj[y]) if dw[x] == ly]
        for x in same:
            for z in same:
                if z != x and not adj[x] >> z & 1:
                    out.append(Quartet(x, z, y, w, ly))
    return out


def satisfies_quadrangle(m: Metric, q: Quartet) -> bool:
    dw = m.dist.rows[q.w]
    common = m.g.adj[q.x] & m.g.adj[q.z]
    return any(dw[u] == q.level - 1 for u in iter_bits(common))


_QUADRANGLE_CACHE: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def _quadrangle_failures(m: Metric) -> tuple[int, dict[int, Quartet]]:
    if m not in _QUADRANGLE_CACHE:
        _QUADRANGLE_CACHE[m] = _scan_quadrangles(m)
    return _QUADRANGLE_CACHE[m]


def _scan_quadrangles(m: Metric) -> tuple[int, dict[int, Quartet]]:
    """Bitmask of reference vertices with a quartet violating the quadrangle
    property, plus the first such quartet per reference vertex.

    Works per non-adjacent pair ``x < z`` with common neighbours ``C``: at
    level ``l`` the references are ``layer(x,l) & layer(z,l)`` that some
    ``y in C`` sees at ``l+1``, and they fail if no ``u in C`` sees them at
    ``l-1``.
    """
    adj = m.g.adj
    levels = m.dist.levels
    failing = 0
    first: dict[int, Quartet] = {}
    for x in range(m.n):
        lx = levels[x]
        for z in iter_bits(m.dist.level(x, 2)):
            if z < x:
                continue
            common = adj[x] & adj[z]
            lz = levels[z]
            for lvl in range(1, min(len(lx), len(lz))):
                refs = lx[lvl] & lz[lvl]
                if not refs:
                    continue
                up = down = 0
                for u in iter_bits(common):
                    lu = levels[u]
                    if lvl + 1 < len(lu):
                        up |= lu[lvl + 1]
                    down |= lu[lvl - 1]
                bad = refs & up & ~down
                if not bad:
                    continue
                new = bad & ~failing
                failing |= bad
                for w in iter_bits(new):
                    y = next(u for u in iter_bits(common) if m.dist.rows[u][w] == lvl + 1)
                    first[w] = Quartet(x, z, y, w, lvl)
    return failing, first


def is_mu_meshed(m: Metric, mu: int) -> Verdict:
    if not m.connected:
        raise Disconnected("meshedness needs a connected graph")
    failing, first = _quadrangle_failures(m)
    if failing >> mu & 1:
        return Verdict(False, first[mu], "quadrangle property fails")
    return PASS


def is_meshed(m: Metric) -> Verdict:
    if not m.connected:
        raise Disconnected("meshedness needs a connected graph")
    failing, first = _quadrangle_failures(m)
    if failing:
        return Verdict(False, first[lowest(failing)], "quadrangle property fails")
    return PASS


def is_modular(m: Metric) -> Verdict:
    """``I(u,v,w)`` non-empty for every triple; disconnected graphs are not modular."""
    if not m.connected:
        return Verdict(False, None, "graph is disconnected")
    n = m.n
    for u in range(n):
        ru = m.table.row(u)
        for v in range(u + 1, n):
            a = ru[v]
            rv = m.table.row(v)
            for w in range(v + 1, n):
                if not a & ru[w] & rv[w]:
                    return Verdict(False, (u, v, w), "empty median set")
    return PASS


def charmodmed_check(m: Metric, mu: int, k23=None, cap: int = 10**6) -> bool:
    """On a modular graph: for every induced K2,3 with degree-3 vertices
    ``u, v``, ``u in I(mu,v)`` or ``v in I(mu,u)``.

    ``k23`` may pass a precomputed :class:`~medico.patterns.Enumeration`.
    """
    from .patterns import find_all_induced

    if not is_modular(m):
        raise NotModular("the K2,3 criterion applies to modular graphs only")
    if k23 is None:
        k23 = find_all_induced(m.g, "K23", cap)
    if not k23.complete:
        raise Incomplete(f"K2,3 enumeration truncated at {len(k23.embeddings)}")
    row = m.table.row(mu)
    for emb in k23.embeddings:
        u, v = emb.vertices[0], emb.vertices[1]
        if not (row[v] >> u & 1 or row[u] >> v & 1):
            return False
    return True


@dataclass(frozen=True)
class ConditionReport:
    vertex: int
    c0: Verdict
    c1: Verdict
    c2: Verdict
    mu_meshed: Verdict


def condition_report(m: Metric, mu: int) -> ConditionReport:
    if m.connected:
        c0 = check_C0(m, mu)
        mesh = is_mu_meshed(m, mu)
    else:
        c0 = mesh = Verdict(False, None, "graph is disconnected")
    return ConditionReport(mu, c0, check_C1(m, mu), check_C2(m, mu), mesh)
