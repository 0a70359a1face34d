"""The shared test corpus: every generated family over a range of sizes plus
a seeded stream of random connected bipartite graphs."""

from medico.generators import FamilySpec, SplitMix64, generate, random_bipartite_connected

RANDOM_SEED = 20240601
RANDOM_COUNT = 10_000


def family_specs():
    for n in range(1, 13):
        yield FamilySpec("path", (n,))
    for n in range(3, 15):
        yield FamilySpec("cycle", (n,))
    for a in range(1, 5):
        for b in range(a, 5):
            yield FamilySpec("complete_bipartite", (a, b))
    for d in range(0, 6):
        yield FamilySpec("hypercube", (d,))
    for d in range(1, 5):
        yield FamilySpec("hypercube_minus", (d,))
    for r in range(1, 5):
        for c in range(r, 6):
            yield FamilySpec("grid", (r, c))
    for k in range(0, 9):
        yield FamilySpec("star", (k,))
    for n in (5, 10, 20, 40):
        for seed in range(3):
            yield FamilySpec("random_tree", (n,), seed=seed)
    for n, p in ((8, 0.3), (10, 0.5), (14, 0.25)):
        for seed in range(3):
            yield FamilySpec("random_bipartite_connected", (n,), p, seed)


def family_graphs():
    return [(spec, generate(spec)) for spec in family_specs()]


def random_graphs(count=RANDOM_COUNT, seed=RANDOM_SEED):
    """Connected bipartite graphs with 3 <= n <= 10 and edge probability
    drawn from [0.15, 0.85]."""
    rng = SplitMix64(seed)
    for _ in range(count):
        n = 3 + rng.below(8)
        p = 0.15 + 0.7 * rng.random()
        yield random_bipartite_connected(n, p, rng)


_CACHE = {}


def corpus():
    """Families plus the random stream, as ``(label, graph)`` pairs."""
    if "corpus" not in _CACHE:
        items = [(f"{s.family}{list(s.sizes)}", g) for s, g in family_graphs()]
        items += [(f"random#{i}", g) for i, g in enumerate(random_graphs())]
        _CACHE["corpus"] = items
    return _CACHE["corpus"]


def suite_results():
    """Every theorem check on every corpus graph, computed once."""
    from medico.verify import run_theorem_suite

    if "suite" not in _CACHE:
        _CACHE["suite"] = [(label, g, run_theorem_suite(g, seed=i)) for i, (label, g) in enumerate(corpus())]
    return _CACHE["suite"]
