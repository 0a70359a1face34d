"""graph6 and edgelist reading and writing.

graph6 is limited to orders ``n <= 62`` (single-byte order field). Edgelist is
UTF-8 text with one ``u v`` pair per line, ``#`` comments and an optional
``n=<int>`` header that declares trailing isolated vertices.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import BinaryIO, TextIO

from .errors import OrderTooLarge, ParseError
from .graph import Graph

GRAPH6_HEADER = b">>graph6<<"
MAX_GRAPH6_ORDER = 62
FORMATS = ("graph6", "edgelist")


def _as_bytes(data: bytes | str) -> bytes:
    return data.encode("ascii") if isinstance(data, str) else bytes(data)


def parse_graph6(data: bytes | str) -> Graph:
    raw = _as_bytes(data)
    start = 0
    if raw.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    raw = raw[start:].rstrip(b"\r\n")
    if not raw:
        raise ParseError("empty graph6 record", start)
    for i, c in enumerate(raw):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c!r} outside the graph6 range 63..126", start + i)
    if raw[0] == 126:
        raise OrderTooLarge(f"multi-byte graph6 order (n > {MAX_GRAPH6_ORDER}) is not supported", start)
    n = raw[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = raw[1:]
    if len(body) != nbytes:
        raise ParseError(f"expected {nbytes} adjacency bytes for n={n}, got {len(body)}", start + 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("non-zero padding bits", start + nbytes)
    return Graph(n, adj)


def to_graph6(g: Graph, header: bool = False) -> str:
    if g.n > MAX_GRAPH6_ORDER:
        raise OrderTooLarge(f"graph6 output limited to n <= {MAX_GRAPH6_ORDER}, got {g.n}")
    out = [chr(63 + g.n)]
    word = 0
    k = 0
    for j in range(1, g.n):
        for i in range(j):
            word = word << 1 | (g.adj[i] >> j & 1)
            k += 1
            if k == 6:
                out.append(chr(63 + word))
                word = k = 0
    if k:
        out.append(chr(63 + (word << (6 - k))))
    text = "".join(out)
    return GRAPH6_HEADER.decode() + text if header else text


def parse_edgelist(data: bytes | str) -> Graph:
    try:
        text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    except UnicodeDecodeError as exc:
        raise ParseError("edgelist is not valid UTF-8", exc.start) from None
    declared = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            try:
                declared = int(line[2:])
            except ValueError:
                raise ParseError(f"bad header {line!r}", lineno) from None
            if declared < 0:
                raise ParseError("negative vertex count", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError("negative vertex id", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        edges.append(key)
    n = max([declared] + [v + 1 for e in edges for v in e])
    return Graph.from_edges(n, edges)


def to_edgelist(g: Graph) -> str:
    """Serialise ``g``; the ``n=`` header is written only when it is needed
    to recover isolated vertices."""
    lines = [f"{u} {v}" for u, v in g.edges()]
    top = max((v for e in g.edges() for v in e), default=-1)
    if top + 1 != g.n:
        lines.insert(0, f"n={g.n}")
    return "\n".join(lines) + "\n"


def parse_graph(data: bytes | str, format: str) -> Graph:
    if format == "graph6":
        return parse_graph6(data)
    if format == "edgelist":
        return parse_edgelist(data)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def serialize(g: Graph, format: str) -> str:
    if format == "graph6":
        return to_graph6(g) + "\n"
    if format == "edgelist":
        return to_edgelist(g)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def infer_format(path: str) -> str:
    lower = path.lower()
    if lower.endswith((".g6", ".graph6")):
        return "graph6"
    if lower.endswith((".txt", ".edges", ".edgelist", ".el")):
        return "edgelist"
    return "graph6"


def iter_graph6(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Parse a graph6 stream, one graph per non-blank line.

    Errors are re-raised with the 1-based line number as offset.
    """
    for lineno, line in enumerate(lines, start=1):
        raw = _as_bytes(line).strip()
        if not raw:
            continue
        try:
            yield parse_graph6(raw)
        except ParseError as exc:
            err = type(exc)(f"line {lineno}: {exc}")
            err.offset = lineno
            raise err from exc


def read_graph6_file(fh: BinaryIO | TextIO) -> Iterator[Graph]:
    return iter_graph6(fh)
