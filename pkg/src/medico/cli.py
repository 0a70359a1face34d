"""Command-line interface: ``medico analyze|verify|search|gen``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 failed theorem check
or search hits.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InvalidSpec, ParseError, ResampleCapExceeded
from .generators import FAMILIES, FamilySpec, SplitMix64, random_bipartite_connected, random_corpus
from .io import FORMATS, infer_format, iter_graph6, parse_edgelist, serialize
from .report import analyze, format_text
from .search import PROBLEMS, default_jobs, get_problem, search
from .verify import THEOREMS, graph_record, parse_theorems, verify_stream

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_FAIL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load_graphs(path: str, fmt: str | None):
    """All graphs of the input: every line of a graph6 stream, or the single
    graph of an edgelist file."""
    fmt = fmt or ("graph6" if path == "-" else infer_format(path))
    data = _read_input(path)
    if fmt == "edgelist":
        return fmt, [parse_edgelist(data)]
    return fmt, list(iter_graph6(data.splitlines()))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")
    sys.stdout.flush()


def cmd_analyze(args) -> int:
    fmt, graphs = _load_graphs(args.input, args.format)
    for i, g in enumerate(graphs):
        report = analyze(g)
        if args.json:
            _emit(report.to_document(fmt))
        else:
            if i:
                print()
            print(format_text(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        which = parse_theorems(args.theorems)
    except KeyError as exc:
        raise UsageError(f"unknown theorem id {exc.args[0]!r}; choose from all, {', '.join(THEOREMS)}") from exc
    _, graphs = _load_graphs(args.input, args.format)
    failed = False
    for index, g, checks in verify_stream(graphs, which, args.seed, args.samples, args.jobs):
        failed |= any(c.status == "fail" for c in checks)
        if args.json:
            _emit({"schema": 1, "index": index, **graph_record(g), "checks": [c.to_dict() for c in checks]})
            continue
        for c in checks:
            line = f"[{index}] {c.theorem} {c.status}"
            if c.reason:
                line += f" ({c.reason})"
            if c.witness:
                line += " " + json.dumps(c.witness, separators=(",", ":"))
            print(line)
    return EXIT_FAIL if failed else EXIT_OK


def _parse_random(text: str):
    try:
        n, p, count = text.split(",")
        n, p, count = int(n), float(p), int(count)
    except ValueError as exc:
        raise UsageError(f"--random expects n,p,count, got {text!r}") from exc
    if n < 1 or count < 0 or not 0.0 <= p <= 1.0:
        raise UsageError(f"--random out of range: {text!r}")
    return n, p, count


def _random_stream(n: int, p: float, count: int, seed: int):
    rng = SplitMix64(seed)
    for _ in range(count):
        yield random_bipartite_connected(n, p, rng)


def _stream_graphs(path: str):
    fh = sys.stdin.buffer if path == "-" else None
    if fh is None:
        try:
            fh = open(path, "rb")
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    with fh:
        yield from iter_graph6(fh)


def cmd_search(args) -> int:
    try:
        problem = get_problem(args.problem)
    except KeyError as exc:
        raise UsageError(f"unknown problem {args.problem!r}; choose 1, 2, 3 or {', '.join(PROBLEMS)}") from exc
    if args.random:
        graphs = _random_stream(*_parse_random(args.random), args.seed)
    else:
        graphs = _stream_graphs(args.stream)
    log = search(problem, graphs, args.budget, args.seed, args.jobs, args.samples, on_hit=_emit)
    print(f"{problem.id}: {log.summary()}", file=sys.stderr)
    return EXIT_FAIL if log.hits else EXIT_OK


def _family_spec(args) -> FamilySpec:
    family = args.family
    if family not in FAMILIES:
        raise InvalidSpec(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}")
    want = FAMILIES[family]
    params = list(args.params)
    p = None
    if family == "random_bipartite_connected":
        if len(params) != want + 1:
            raise InvalidSpec("random_bipartite_connected takes n and p")
        try:
            p = float(params.pop())
        except ValueError as exc:
            raise InvalidSpec("p must be a number") from exc
    try:
        sizes = tuple(int(x) for x in params)
    except ValueError as exc:
        raise InvalidSpec(f"size parameters must be integers, got {params}") from exc
    return FamilySpec(family, sizes, p, args.seed)


def cmd_gen(args) -> int:
    try:
        spec = _family_spec(args)
        graphs = list(random_corpus(spec, args.count))
    except (InvalidSpec, ResampleCapExceeded) as exc:
        print(f"medico gen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for i, g in enumerate(graphs):
        if args.out_format == "edgelist" and i:
            sys.stdout.write("\n")
        sys.stdout.write(serialize(g, args.out_format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="medico", description="Medico vertices and k-median structure of graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin (default)")
        p.add_argument("--format", choices=FORMATS, help="input format (default: from the file extension)")
        p.add_argument("--json", action="store_true", help="JSON output, one object per line")

    p = sub.add_parser("analyze", help="full analysis of each input graph")
    add_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="cross-check the characterization theorems")
    add_input(p)
    p.add_argument("--theorems", default="all", help="all, or a comma-separated list of theorem ids")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=50, help="closures sampled per medico vertex")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="look for counterexamples to an open problem")
    p.add_argument("--problem", required=True, help="1, 2, 3 or a problem id")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--stream", metavar="FILE", help="graph6 stream, or - for stdin")
    source.add_argument("--random", metavar="N,P,COUNT", help="random connected bipartite graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None, help="stop after this many graphs")
    p.add_argument("--samples", type=int, default=50, help="random triples for convex sampling when n > 9")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gen", help="generate graphs of a family")
    p.add_argument("family", help=", ".join(sorted(FAMILIES)))
    p.add_argument("params", nargs="*", help="size parameters (random_bipartite_connected: n p)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out-format", choices=FORMATS, default="graph6")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"medico {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"medico {args.command}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
