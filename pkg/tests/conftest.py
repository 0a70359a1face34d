import sys
from pathlib import Path

from hypothesis import settings, strategies as st

from medico.graph import Graph

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=120, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def connected_bipartite(draw, min_n=1, max_n=10):
    """A random spanning tree plus random extra edges between its two colour
    classes, so the result is always connected and bipartite."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    colour = [0] * n
    for v in range(1, n):
        parent = draw(st.integers(0, v - 1))
        edges.add((parent, v))
        colour[v] = 1 - colour[parent]
    cross = [(u, v) for u in range(n) for v in range(u + 1, n) if colour[u] != colour[v] and (u, v) not in edges]
    extra = draw(st.lists(st.booleans(), min_size=len(cross), max_size=len(cross)))
    edges.update(e for e, keep in zip(cross, extra) if keep)
    return Graph.from_edges(n, edges)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
