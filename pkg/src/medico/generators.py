"""Deterministic graph families and reproducible random corpora.

Labelings:

* ``path(n)``: ``0 - 1 - ... - n-1``; ``cycle(n)``: ring order.
* ``complete_bipartite(a, b)``: the ``a``-side is ``0..a-1``.
* ``hypercube(d)``: vertex ``i`` has the binary coordinates of ``i``.
* ``hypercube_minus(d)``: ``hypercube(d)`` without the all-ones vertex.
* ``grid(r, c)``: vertex ``i*c + j`` at row ``i``, column ``j``.
* ``star(k)``: ``K_{1,k}`` with centre 0.

Randomness comes from SplitMix64 (state += 0x9E3779B97F4A7C15, then the
xor-shift-multiply finaliser with 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB,
shifts 30/27/31). ``below(b)`` is ``(next() * b) >> 64`` and ``random()`` is
``(next() >> 11) * 2**-53``; this is enough to replay a corpus bit for bit in
any language.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterator
from dataclasses import dataclass, field

from .errors import InvalidSpec, ResampleCapExceeded
from .graph import Graph, is_connected

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
DEFAULT_RESAMPLE_CAP = 10_000


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return (self.next() * bound) >> 64

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def split(self) -> SplitMix64:
        return SplitMix64(self.next())


FAMILIES = {
    "path": 1,
    "cycle": 1,
    "complete_bipartite": 2,
    "hypercube": 1,
    "hypercube_minus": 1,
    "grid": 2,
    "star": 1,
    "random_tree": 1,
    "random_bipartite_connected": 1,
}
RANDOM_FAMILIES = {"random_tree", "random_bipartite_connected"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    sizes: tuple[int, ...]
    p: float | None = None
    seed: int = 0
    resample_cap: int = field(default=DEFAULT_RESAMPLE_CAP, compare=False)

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidSpec(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        if len(self.sizes) != FAMILIES[self.family]:
            raise InvalidSpec(f"{self.family} takes {FAMILIES[self.family]} size parameter(s), got {len(self.sizes)}")
        if any(s < 0 for s in self.sizes):
            raise InvalidSpec("sizes must be non-negative")
        if self.family == "cycle" and self.sizes[0] < 3:
            raise InvalidSpec("cycle length must be at least 3")
        if self.family == "hypercube_minus" and self.sizes[0] < 1:
            raise InvalidSpec("hypercube_minus needs dimension >= 1")
        if self.family in ("hypercube", "hypercube_minus") and self.sizes[0] > 12:
            raise InvalidSpec("hypercube dimension above 12 is not supported")
        if self.family == "random_bipartite_connected":
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise InvalidSpec("random_bipartite_connected needs a probability p in [0, 1]")
        elif self.p is not None:
            raise InvalidSpec(f"{self.family} takes no probability")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(d: int) -> Graph:
    n = 1 << d
    return Graph.from_edges(n, [(i, i ^ (1 << k)) for i in range(n) for k in range(d) if not i >> k & 1])


def hypercube_minus(d: int) -> Graph:
    cube = hypercube(d)
    g, _ = cube.induced_subgraph(range(cube.n - 1))
    return g


def grid(r: int, c: int) -> Graph:
    edges = []
    for i in range(r):
        for j in range(c):
            v = i * c + j
            if j + 1 < c:
                edges.append((v, v + 1))
            if i + 1 < r:
                edges.append((v, v + c))
    return Graph.from_edges(r * c, edges)


def star(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def random_tree(n: int, rng: SplitMix64) -> Graph:
    """Uniform labelled tree via Pruefer decoding."""
    if n <= 2:
        return path(n)
    seq = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_bipartite_connected(n: int, p: float, rng: SplitMix64, cap: int = DEFAULT_RESAMPLE_CAP) -> Graph:
    """Random side per vertex, cross edges with probability ``p`` (pairs in
    lexicographic order), resampled until connected."""
    for _ in range(cap):
        side = [rng.below(2) for _ in range(n)]
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if side[u] != side[v] and rng.random() < p:
                    edges.append((u, v))
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g
    raise ResampleCapExceeded(f"no connected sample for n={n}, p={p} within {cap} attempts")


def _build(spec: FamilySpec, rng: SplitMix64 | None) -> Graph:
    f, s = spec.family, spec.sizes
    if f == "path":
        return path(s[0])
    if f == "cycle":
        return cycle(s[0])
    if f == "complete_bipartite":
        return complete_bipartite(*s)
    if f == "hypercube":
        return hypercube(s[0])
    if f == "hypercube_minus":
        return hypercube_minus(s[0])
    if f == "grid":
        return grid(*s)
    if f == "star":
        return star(s[0])
    if f == "random_tree":
        return random_tree(s[0], rng)
    return random_bipartite_connected(s[0], spec.p, rng, spec.resample_cap)


def generate(spec: FamilySpec) -> Graph:
    spec.validate()
    rng = SplitMix64(spec.seed) if spec.family in RANDOM_FAMILIES else None
    return _build(spec, rng)


def random_corpus(spec: FamilySpec, count: int, seed: int | None = None) -> Iterator[Graph]:
    """``count`` graphs from one generator stream seeded with ``seed``
    (default ``spec.seed``). Deterministic families repeat the same graph."""
    spec.validate()
    if count < 0:
        raise InvalidSpec("count must be non-negative")
    rng = SplitMix64(spec.seed if seed is None else seed)
    for _ in range(count):
        yield _build(spec, rng)
