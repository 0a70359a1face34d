"""Full analysis of one graph and its JSON document form."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .conditions import ConditionReport, check_C0, check_C1, check_C2, is_meshed, is_modular, is_mu_meshed
from .graph import Graph, two_coloring
from .metric import DEFAULT_PRECOMPUTE_THRESHOLD, Metric
from .patterns import Embedding, find_induced
from .verdict import Verdict
from .vertexset import VertexSet

SCHEMA_VERSION = 1
REPORT_PATTERNS = {"k23": "K23", "k33": "K33", "q3minus": "Q3minus", "c6": "C6"}


@dataclass
class AnalysisReport:
    n: int
    m: int
    medico: VertexSet
    flags: dict[str, bool | None]
    conditions: list[ConditionReport]
    patterns: dict[str, Embedding | None]
    witnesses: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    timings_ms: dict[str, float] = field(default_factory=dict)

    @property
    def k(self) -> int:
        return len(self.medico)

    def to_document(self, format: str | None = None) -> dict:
        def flag(v: Verdict | None):
            return None if v is None else bool(v)

        return {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "m": self.m,
            "format": format,
            "flags": dict(self.flags),
            "k": self.k,
            "medico": sorted(self.medico),
            "conditions": {
                name: [flag(getattr(c, name)) for c in self.conditions]
                for name in ("c0", "c1", "c2", "mu_meshed")
            },
            "patterns": {k: (e.to_dict() if e is not None else None) for k, e in self.patterns.items()},
            "witnesses": list(self.witnesses),
            "notes": list(self.notes),
            "timings_ms": {k: round(v, 3) for k, v in self.timings_ms.items()},
        }


class _Clock:
    def __init__(self):
        self.timings: dict[str, float] = {}

    def __call__(self, name, fn, *args):
        t0 = time.perf_counter()
        out = fn(*args)
        self.timings[name] = (time.perf_counter() - t0) * 1000.0
        return out


def analyze(g: Graph, precompute_threshold: int = DEFAULT_PRECOMPUTE_THRESHOLD, with_conditions: bool = True) -> AnalysisReport:
    clock = _Clock()
    m = clock("intervals", Metric, g, precompute_threshold)
    coloring = clock("bipartite", two_coloring, g)
    connected = m.connected
    medico = clock("medico", m.medico_set)
    witnesses: list[dict] = []
    notes: list[str] = []

    modular = clock("modular", is_modular, m)
    meshed = clock("meshed", is_meshed, m) if connected else None
    monotone = clock("interval_monotone", m.is_interval_monotone) if connected else None
    flags = {
        "connected": connected,
        "bipartite": coloring.ok,
        "median": g.n >= 1 and len(medico) == g.n,
        "modular": modular.ok,
        "meshed": None if meshed is None else meshed.ok,
        "interval_monotone": None if monotone is None else monotone.ok,
    }

    if not coloring.ok:
        witnesses.append({"kind": "odd_closed_walk", "walk": list(coloring.witness)})
        notes.append("non-bipartite: v-convex subgraph not unique")
    for mu, verdict in enumerate(m.medico_verdicts):
        if not verdict.ok and verdict.witness is not None:
            witnesses.append({"kind": "non_medico", "vertex": mu, "pair": list(verdict.witness)})
    if not modular.ok and modular.witness is not None:
        witnesses.append({"kind": "empty_median_set", "triple": list(modular.witness)})
    if meshed is not None and not meshed.ok:
        q = meshed.witness
        witnesses.append({"kind": "quadrangle_failure", "quartet": [q.x, q.z, q.y, q.w], "level": q.level})
    if monotone is not None and not monotone.ok:
        witnesses.append({"kind": "non_convex_interval", "pair": list(monotone.witness[:2]), "inner": list(monotone.witness[2:])})

    conditions: list[ConditionReport] = []
    if with_conditions:
        t0 = time.perf_counter()
        for mu in g.vertices:
            c0 = check_C0(m, mu) if connected else None
            mesh = is_mu_meshed(m, mu) if connected else None
            conditions.append(ConditionReport(mu, c0, check_C1(m, mu), check_C2(m, mu), mesh))
        clock.timings["conditions"] = (time.perf_counter() - t0) * 1000.0

    patterns = {key: clock(f"pattern_{key}", find_induced, g, tag) for key, tag in REPORT_PATTERNS.items()}
    clock.timings["total"] = sum(clock.timings.values())
    return AnalysisReport(g.n, g.m, medico, flags, conditions, patterns, witnesses, notes, clock.timings)


def format_text(report: AnalysisReport) -> str:
    lines = [
        f"n={report.n} m={report.m}",
        f"k={report.k} medico={sorted(report.medico)}",
        "flags: " + " ".join(f"{k}={v}" for k, v in report.flags.items()),
    ]
    for key, emb in report.patterns.items():
        lines.append(f"{key}: " + ("none" if emb is None else " ".join(map(str, emb.vertices))))
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)
