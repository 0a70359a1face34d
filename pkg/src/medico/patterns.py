"""Induced-subgraph and cycle detection for a fixed list of patterns.

Supported tags: ``K23``, ``K33``, ``Q3minus``, ``C4``, ``C6`` and ``C<len>``
for any induced cycle length. Searches are deterministic backtracking over
bitmask candidate sets, so the first embedding found is reproducible.

Role labels per tag:

* ``K23`` / ``K33``: ``small`` / ``A`` side first, then ``large`` / ``B``;
  each side ascending.
* ``Q3minus``: ``center`` (the vertex opposite the deleted corner), three
  ``inner`` vertices ascending, then the three ``outer`` vertices in the order
  (inner0,inner1), (inner0,inner2), (inner1,inner2) of their two neighbours.
* cycles: ``ring`` labels in cyclic order starting at the smallest vertex,
  with the smaller of its two ring neighbours second.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import islice

from .errors import BoundExceeded, NotAnEdge, NotC6, UnknownPattern
from .graph import Graph, is_bipartite
from .metric import Metric
from .vertexset import bits_of, iter_bits

DEFAULT_CAP = 10**6
MAX_CYCLE_BOUND = 12

_Q3M_EDGES = ((0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (1, 5), (3, 5), (2, 6), (3, 6))


@dataclass(frozen=True)
class Embedding:
    pattern: str
    vertices: tuple[int, ...]
    roles: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"pattern": self.pattern, "vertices": list(self.vertices), "roles": list(self.roles)}

    @property
    def vertex_bits(self) -> int:
        return bits_of(self.vertices)


@dataclass(frozen=True)
class Enumeration:
    embeddings: list[Embedding]
    complete: bool


def _cycle_len(pattern: str) -> int | None:
    m = re.fullmatch(r"C(\d+)", pattern)
    return int(m.group(1)) if m else None


def pattern_edges(pattern: str) -> list[tuple[int, int]]:
    """Edge list of the pattern on embedding positions ``0..p-1``."""
    if pattern == "K23":
        return [(i, j) for i in range(2) for j in range(2, 5)]
    if pattern == "K33":
        return [(i, j) for i in range(3) for j in range(3, 6)]
    if pattern == "Q3minus":
        return list(_Q3M_EDGES)
    length = _cycle_len(pattern)
    if length is not None and length >= 3:
        return [(i, (i + 1) % length) for i in range(length)]
    raise UnknownPattern(pattern)


def is_induced_embedding(g: Graph, emb: Embedding) -> bool:
    """Check that ``emb`` maps the pattern onto an induced subgraph exactly."""
    vs = emb.vertices
    if len(set(vs)) != len(vs):
        return False
    want = {frozenset(e) for e in pattern_edges(emb.pattern)}
    if max((max(e) for e in want), default=-1) + 1 != len(vs):
        return False
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if g.has_edge(vs[i], vs[j]) != (frozenset((i, j)) in want):
                return False
    return True


def _k23(g: Graph) -> Iterator[Embedding]:
    adj = g.adj
    roles = ("small",) * 2 + ("large",) * 3
    for a in range(g.n):
        if adj[a].bit_count() < 3:
            continue
        for b in range(a + 1, g.n):
            if adj[a] >> b & 1:
                continue
            common = adj[a] & adj[b]
            if common.bit_count() < 3:
                continue
            for c1 in iter_bits(common):
                rest1 = common & ~adj[c1] & ~((2 << c1) - 1)
                for c2 in iter_bits(rest1):
                    for c3 in iter_bits(rest1 & ~adj[c2] & ~((2 << c2) - 1)):
                        yield Embedding("K23", (a, b, c1, c2, c3), roles)


def _independent_triples(adj, cand: int) -> Iterator[tuple[int, int, int]]:
    for c1 in iter_bits(cand):
        rest1 = cand & ~adj[c1] & ~((2 << c1) - 1)
        for c2 in iter_bits(rest1):
            for c3 in iter_bits(rest1 & ~adj[c2] & ~((2 << c2) - 1)):
                yield c1, c2, c3


def _k33(g: Graph) -> Iterator[Embedding]:
    adj = g.adj
    roles = ("A",) * 3 + ("B",) * 3
    for a in range(g.n):
        if adj[a].bit_count() < 3:
            continue
        above_a = ~((2 << a) - 1)
        for b in range(a + 1, g.n):
            if adj[a] >> b & 1:
                continue
            ab = adj[a] & adj[b] & above_a
            if ab.bit_count() < 3:
                continue
            for c in range(b + 1, g.n):
                if adj[c] >> a & 1 or adj[c] >> b & 1:
                    continue
                abc = ab & adj[c]
                if abc.bit_count() < 3:
                    continue
                for t in _independent_triples(adj, abc):
                    yield Embedding("K33", (a, b, c) + t, roles)


def _c4(g: Graph) -> Iterator[Embedding]:
    adj = g.adj
    roles = ("ring",) * 4
    for a in range(g.n):
        above_a = ~((2 << a) - 1)
        for b in range(a + 1, g.n):
            if adj[a] >> b & 1:
                continue
            common = adj[a] & adj[b] & above_a
            for c in iter_bits(common):
                for d in iter_bits(common & ~adj[c] & ~((2 << c) - 1)):
                    yield Embedding("C4", (a, c, b, d), roles)


def _q3minus(g: Graph) -> Iterator[Embedding]:
    adj = g.adj
    roles = ("center",) + ("inner",) * 3 + ("outer",) * 3
    for c in range(g.n):
        nc = adj[c]
        if nc.bit_count() < 3:
            continue
        avoid = nc | 1 << c
        for x1, x2, x3 in _independent_triples(adj, nc):
            for y12 in iter_bits(adj[x1] & adj[x2] & ~avoid & ~adj[x3]):
                for y13 in iter_bits(adj[x1] & adj[x3] & ~avoid & ~adj[x2] & ~adj[y12]):
                    for y23 in iter_bits(adj[x2] & adj[x3] & ~avoid & ~adj[x1] & ~adj[y12] & ~adj[y13]):
                        yield Embedding("Q3minus", (c, x1, x2, x3, y12, y13, y23), roles)


def _cycles(g: Graph, min_len: int, max_len: int) -> Iterator[Embedding]:
    """Induced cycles with ``min_len <= length <= max_len``, each once."""
    adj = g.adj
    if max_len < 3 or min_len > max_len:
        return
    if is_bipartite(g):
        if min_len == max_len and min_len % 2:
            return
        # odd lengths cannot close, so the last useful depth is even
        max_len -= max_len % 2

    def extend(path: list[int], blocked: int, v0_adj: int) -> Iterator[Embedding]:
        last = path[-1]
        k = len(path) - 1
        for u in iter_bits(adj[last] & ~blocked):
            if k >= 1 and v0_adj >> u & 1:
                length = k + 2
                if length >= min_len and path[1] < u:
                    ring = tuple(path) + (u,)
                    yield Embedding(f"C{length}", ring, ("ring",) * length)
                continue
            if len(path) + 2 <= max_len:
                nb = blocked if k == 0 else blocked | adj[last] | 1 << last
                yield from extend(path + [u], nb, v0_adj)

    for v0 in range(g.n):
        if adj[v0].bit_count() < 2:
            continue
        yield from extend([v0], (2 << v0) - 1, adj[v0])


def _generator(g: Graph, pattern: str) -> Iterator[Embedding]:
    if pattern == "K23":
        return _k23(g)
    if pattern == "K33":
        return _k33(g)
    if pattern == "Q3minus":
        return _q3minus(g)
    if pattern == "C4":
        return _c4(g)
    length = _cycle_len(pattern)
    if length is not None and length >= 3:
        return _cycles(g, length, length)
    raise UnknownPattern(pattern)


def find_all_induced(g: Graph, pattern: str, cap: int = DEFAULT_CAP) -> Enumeration:
    """Up to ``cap`` induced embeddings, one per vertex set.

    ``complete`` is true when the search ran to the end.
    """
    it = _generator(g, pattern)
    found = list(islice(it, cap))
    complete = len(found) < cap or next(it, None) is None
    return Enumeration(found, complete)


def find_induced(g: Graph, pattern: str) -> Embedding | None:
    return next(_generator(g, pattern), None)


def induced_cycles(g: Graph, max_len: int = MAX_CYCLE_BOUND, bound: int = MAX_CYCLE_BOUND) -> list[Embedding]:
    if max_len > bound:
        raise BoundExceeded(f"max_len {max_len} exceeds the configured bound {bound}")
    return list(_cycles(g, 3, max_len))


def is_isometric_cycle(g: Graph, emb: Embedding) -> bool:
    ring = emb.vertices
    length = len(ring)
    rows = g.distances.rows
    for i in range(length):
        for j in range(i + 1, length):
            if rows[ring[i]][ring[j]] != min(j - i, length - (j - i)):
                return False
    return True


def is_convex_cycle(m: Metric, emb: Embedding) -> bool:
    return m.convexity_violation(emb.vertex_bits) is None


def edge_on_induced_c4(g: Graph, e: tuple[int, int]) -> Embedding | None:
    """An induced C4 ``(a, b, c, d)`` containing the edge ``ab``, if any."""
    a, b = e
    if not g.has_edge(a, b):
        raise NotAnEdge(f"({a}, {b}) is not an edge")
    adj = g.adj
    for c in iter_bits(adj[b] & ~adj[a] & ~(1 << a)):
        for d in iter_bits(adj[a] & adj[c] & ~adj[b] & ~(1 << b)):
            return Embedding("C4", (a, b, c, d), ("ring",) * 4)
    return None


def edge_on_cycle(g: Graph, e: tuple[int, int]) -> bool:
    """True iff the edge is not a bridge."""
    a, b = e
    if not g.has_edge(a, b):
        raise NotAnEdge(f"({a}, {b}) is not an edge")
    adj = list(g.adj)
    adj[a] &= ~(1 << b)
    adj[b] &= ~(1 << a)
    seen = 1 << a
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        if seen >> b & 1:
            return True
    return False


# Distance profiles of an induced 6-cycle seen from a medico vertex, as
# offsets from the closest vertex (which sits at level l - 1).
DELTA_FORMS = {
    "Delta1": (0, 1, 0, 1, 0, 1),
    "Delta2": (0, 1, 0, 1, 2, 1),
    "Delta2*": (0, 1, 2, 1, 0, 1),
    "Delta3": (0, 1, 2, 1, 2, 1),
    "Delta4": (0, 1, 2, 3, 2, 1),
}


def delta_profile(g: Graph, emb: Embedding, mu: int) -> tuple[int, ...]:
    """Distances from ``mu`` around an induced C6, starting at a closest
    vertex; among all such starts and both directions the lexicographically
    smallest tuple is returned."""
    if len(emb.vertices) != 6 or not emb.pattern == "C6" or not is_induced_embedding(g, emb):
        raise NotC6("delta profiles are defined for induced 6-cycles")
    row = g.distances.rows[mu]
    dist = [row[v] for v in emb.vertices]
    if any(d is None for d in dist):
        raise NotC6("cycle not in the component of mu")
    low = min(dist)
    options = []
    for i in range(6):
        if dist[i] != low:
            continue
        options.append(tuple(dist[(i + j) % 6] for j in range(6)))
        options.append(tuple(dist[(i - j) % 6] for j in range(6)))
    return min(options)


def classify_delta(profile: tuple[int, ...]) -> str | None:
    """Name of the matching form (up to reflection), or None."""
    base = profile[0]
    offsets = tuple(d - base for d in profile)
    mirrored = (offsets[0],) + offsets[:0:-1]
    for name, form in DELTA_FORMS.items():
        if offsets == form or mirrored == form:
            return name
    return None
