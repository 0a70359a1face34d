"""Medico vertices, k-median numbers and related structure of finite graphs.

A vertex ``mu`` is *medico* when every triple ``(mu, v, w)`` has exactly one
median. The package computes medico sets, structural flags, induced indicator
patterns, and cross-checks the known characterizations against brute force.
"""

from .errors import (
    BoundExceeded,
    DifferentComponents,
    Disconnected,
    Incomplete,
    InvalidSpec,
    MedicoError,
    NotAnEdge,
    NotC6,
    NotModular,
    OrderTooLarge,
    ParseError,
    ResampleCapExceeded,
    UnknownPattern,
)
from .generators import FamilySpec, SplitMix64, generate, random_corpus
from .graph import DistanceMatrix, Graph, distances, is_bipartite, is_connected, two_coloring
from .io import parse_edgelist, parse_graph, parse_graph6, serialize, to_edgelist, to_graph6
from .metric import IntervalTable, MedianResult, Metric
from .report import AnalysisReport, analyze
from .search import PROBLEMS, SearchLog, SearchProblem
from .verdict import Verdict
from .verify import THEOREMS, TheoremCheck, run_theorem_suite
from .vertexset import VertexSet

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BoundExceeded",
    "DifferentComponents",
    "Disconnected",
    "DistanceMatrix",
    "FamilySpec",
    "Graph",
    "Incomplete",
    "IntervalTable",
    "InvalidSpec",
    "MedianResult",
    "MedicoError",
    "Metric",
    "NotAnEdge",
    "NotC6",
    "NotModular",
    "OrderTooLarge",
    "PROBLEMS",
    "ParseError",
    "ResampleCapExceeded",
    "SearchLog",
    "SearchProblem",
    "SplitMix64",
    "THEOREMS",
    "TheoremCheck",
    "UnknownPattern",
    "Verdict",
    "VertexSet",
    "analyze",
    "distances",
    "generate",
    "is_bipartite",
    "is_connected",
    "parse_edgelist",
    "parse_graph",
    "parse_graph6",
    "random_corpus",
    "run_theorem_suite",
    "serialize",
    "to_edgelist",
    "to_graph6",
    "two_coloring",
]
