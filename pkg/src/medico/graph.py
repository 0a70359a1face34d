"""Immutable simple graphs, hop distances and elementary predicates."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property

from .verdict import Verdict
from .vertexset import VertexSet, bits_of, iter_bits

# Distance between vertices in different components. Never compared or added
# as a number; every interval routine checks for it explicitly.
UNREACHABLE = None


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask. Instances are
    immutable and hashable; derived data (distances, components) is cached.
    """

    __slots__ = ("n", "adj", "__dict__")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        adj = tuple(int(a) for a in adj)
        for v, a in enumerate(adj):
            if a < 0 or a >> n:
                raise ValueError(f"neighbour of {v} outside 0..{n - 1}")
            if a >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in iter_bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def neighbor_set(self, v: int) -> VertexSet:
        return VertexSet(self.adj[v], self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, a in enumerate(self.adj):
            for v in iter_bits(a >> (u + 1)):
                yield u, u + 1 + v

    @property
    def all_bits(self) -> int:
        return (1 << self.n) - 1

    def induced_subgraph(self, vertices: Iterable[int] | int) -> tuple[Graph, list[int]]:
        """Return ``(H, labels)`` where ``H`` is induced on ``vertices``.

        ``labels[i]`` is the vertex of this graph that became vertex ``i`` of
        ``H``; relative order is preserved.
        """
        mask = vertices if isinstance(vertices, int) else bits_of(vertices)
        labels = list(iter_bits(mask))
        index = {v: i for i, v in enumerate(labels)}
        adj = []
        for v in labels:
            adj.append(bits_of(index[u] for u in iter_bits(self.adj[v] & mask)))
        return Graph(len(labels), adj), labels

    @cached_property
    def distances(self) -> DistanceMatrix:
        return DistanceMatrix(self)

    @cached_property
    def components(self) -> tuple[int, ...]:
        """Component id of every vertex, numbered in order of smallest member."""
        comp = [-1] * self.n
        c = 0
        for s in range(self.n):
            if comp[s] >= 0:
                continue
            reach = self.distances.reach(s)
            for v in iter_bits(reach):
                comp[v] = c
            c += 1
        return tuple(comp)


class DistanceMatrix:
    """All-pairs hop distances from one bitset BFS per source.

    Besides the ``n x n`` grid (``rows[u][v]``, :data:`UNREACHABLE` across
    components), the BFS layers are kept: ``levels[u][k]`` is the bitmask of
    vertices at distance exactly ``k`` from ``u``. Interval and quartet
    computations are phrased as ANDs of these layers.
    """

    def __init__(self, g: Graph):
        self.n = g.n
        levels: list[tuple[int, ...]] = []
        rows: list[tuple[int | None, ...]] = []
        adj = g.adj
        for s in range(g.n):
            layer = 1 << s
            seen = layer
            lv = [layer]
            row: list[int | None] = [UNREACHABLE] * g.n
            row[s] = 0
            k = 0
            while True:
                nxt = 0
                for v in iter_bits(layer):
                    nxt |= adj[v]
                nxt &= ~seen
                if not nxt:
                    break
                k += 1
                for v in iter_bits(nxt):
                    row[v] = k
                seen |= nxt
                lv.append(nxt)
                layer = nxt
            levels.append(tuple(lv))
            rows.append(tuple(row))
        self.levels = tuple(levels)
        self.rows = tuple(rows)

    def __call__(self, u: int, v: int) -> int | None:
        return self.rows[u][v]

    def __getitem__(self, uv: tuple[int, int]) -> int | None:
        u, v = uv
        return self.rows[u][v]

    def level(self, u: int, k: int) -> int:
        lv = self.levels[u]
        return lv[k] if 0 <= k < len(lv) else 0

    def eccentricity(self, u: int) -> int:
        return len(self.levels[u]) - 1

    def reach(self, u: int) -> int:
        r = 0
        for layer in self.levels[u]:
            r |= layer
        return r

    def to_lists(self) -> list[list[int | None]]:
        return [list(r) for r in self.rows]


def distances(g: Graph) -> DistanceMatrix:
    return g.distances


def is_connected(g: Graph) -> bool:
    """Connectivity; the empty graph counts as connected."""
    if g.n == 0:
        return True
    return g.distances.reach(0) == g.all_bits


def two_coloring(g: Graph) -> Verdict:
    """2-colour ``g`` by BFS.

    On success the witness is a tuple of colours (0/1) per vertex. Otherwise
    it is an odd closed walk ``[v0, v1, ..., v0]`` through a monochromatic edge.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in iter_bits(g.adj[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return Verdict(False, _odd_walk(parent, u, v), "monochromatic edge")
    return Verdict(True, tuple(color))


def _odd_walk(parent: list[int], u: int, v: int) -> list[int]:
    def to_root(x):
        path = [x]
        while parent[x] >= 0:
            x = parent[x]
            path.append(x)
        return path

    pu, pv = to_root(u), to_root(v)
    # trim the shared tail so the walk is a cycle through the lowest common ancestor
    while len(pu) > 1 and len(pv) > 1 and pu[-2] == pv[-2]:
        pu.pop()
        pv.pop()
    return pu + pv[::-1][1:] + [u]


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g).ok


__all__ = [
    "UNREACHABLE",
    "Graph",
    "DistanceMatrix",
    "distances",
    "is_connected",
    "is_bipartite",
    "two_coloring",
]
