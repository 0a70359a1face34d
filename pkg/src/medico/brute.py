"""Definition-level evaluations that read only the distance matrix.

These are the "definition side" of every cross-check: they never touch the
interval table, bitmask layers or condition helpers, so a bug there cannot
hide a disagreement.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations, permutations

import numpy as np

from .graph import Graph


def distance_array(g: Graph) -> np.ndarray | None:
    """Dense distance matrix, or None when ``g`` is disconnected."""
    rows = g.distances.rows
    if any(d is None for row in rows for d in row):
        return None
    return np.array(rows, dtype=np.int64).reshape(g.n, g.n)


def median_counts(D: np.ndarray, mu: int) -> np.ndarray:
    """``counts[v, w] = |I(mu, v, w)|`` straight from the median definition."""
    a = D[mu]
    on_mu = a[:, None] + D == a[None, :]  # [x, v]: x on a shortest mu-v path
    on_pair = D[:, :, None] + D[:, None, :] == D[None, :, :]  # [x, v, w]
    both = on_mu[:, :, None] & on_mu[:, None, :] & on_pair
    return both.sum(axis=0)


def medico_set(g: Graph) -> frozenset[int]:
    D = distance_array(g)
    if D is None:
        return frozenset()
    out = set()
    for mu in range(g.n):
        counts = median_counts(D, mu)
        mask = np.ones_like(counts, dtype=bool)
        mask[mu, :] = mask[:, mu] = False
        np.fill_diagonal(mask, False)
        if np.all(counts[mask] == 1):
            out.add(mu)
    return frozenset(out)


def is_median(g: Graph) -> bool:
    return g.n >= 1 and len(medico_set(g)) == g.n


def interval(g: Graph, u: int, v: int) -> frozenset[int]:
    rows = g.distances.rows
    d = rows[u][v]
    return frozenset(x for x in range(g.n) if rows[u][x] is not None and rows[u][x] + rows[x][v] == d)


def is_modular(g: Graph) -> bool:
    D = distance_array(g)
    if D is None:
        return False
    for u in range(g.n):
        if np.any(median_counts(D, u) == 0):
            return False
    return True


def is_medico_in(g: Graph, mu: int) -> bool:
    D = distance_array(g)
    if D is None:
        return False
    counts = median_counts(D, mu)
    mask = np.ones_like(counts, dtype=bool)
    mask[mu, :] = mask[:, mu] = False
    np.fill_diagonal(mask, False)
    return bool(np.all(counts[mask] == 1))


def median_of(g: Graph, u: int, v: int, w: int) -> frozenset[int]:
    return interval(g, u, v) & interval(g, u, w) & interval(g, v, w)


def _pattern_degrees(p: int, edges) -> list[int]:
    deg = [0] * p
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return deg


def induced_vertex_sets(g: Graph, p: int, edges) -> Iterator[frozenset[int]]:
    """Every vertex set of size ``p`` whose induced subgraph is isomorphic to
    the pattern on ``0..p-1`` with the given edges. Plain subset enumeration
    with a permutation test; meant as an oracle for small graphs."""
    want = {frozenset(e) for e in edges}
    target = sorted(_pattern_degrees(p, edges))
    for subset in combinations(range(g.n), p):
        sub_edges = [(i, j) for i, j in combinations(range(p), 2) if g.has_edge(subset[i], subset[j])]
        if len(sub_edges) != len(want) or sorted(_pattern_degrees(p, sub_edges)) != target:
            continue
        have = {frozenset(e) for e in sub_edges}
        for perm in permutations(range(p)):
            if all(frozenset((perm[a], perm[b])) in have for a, b in edges):
                yield frozenset(subset)
                break


def has_induced(g: Graph, p: int, edges) -> bool:
    return next(induced_vertex_sets(g, p, edges), None) is not None


def is_convex_set(g: Graph, vertices) -> bool:
    s = frozenset(vertices)
    return all(interval(g, u, v) <= s for u, v in combinations(sorted(s), 2))


# Pattern graphs written out independently of the search code.
PATTERNS = {
    "K23": (5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    "K33": (6, [(a, b) for a in range(3) for b in range(3, 6)]),
    # 3-cube on bit labels 0..6 with corner 7 removed
    "Q3minus": (7, [(a, a ^ 1 << i) for a in range(7) for i in range(3) if a < a ^ 1 << i < 7]),
    "C4": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "C6": (6, [(i, (i + 1) % 6) for i in range(6)]),
}


def pattern_sets(g: Graph, pattern: str) -> set[frozenset[int]]:
    p, edges = PATTERNS[pattern]
    return set(induced_vertex_sets(g, p, edges))


def has_pattern(g: Graph, pattern: str) -> bool:
    p, edges = PATTERNS[pattern]
    return has_induced(g, p, edges)
