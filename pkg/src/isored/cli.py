"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 precondition violation,
3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import jsonio
from .cospec import are_cospectral, are_strongly_cospectral, numeric_strong_check
from .errors import IndexOutOfRange, InputError, InternalFault, PreconditionError
from .graphs import WMatrix, adjacency, charpoly, delete_vertices, format_graph, read_graph
from .latency import measure_of_latency
from .ratfun import poly_to_json
from .reduce import ReducedMatrix, branch_reduce, schur_reduce
from .unpack import unpack_2x2, verify_roundtrip
from .walks import walk_table

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex indices, got {text!r}") from None


def _check_vertices(n: int, *vertices: int) -> None:
    for v in vertices:
        if not 0 <= v < n:
            raise IndexOutOfRange(f"vertex {v} not in 0..{n - 1}")


def _render_matrix(m) -> str:
    base = m.base if isinstance(m, ReducedMatrix) else m
    lines = []
    for i, row in enumerate(base.entries):
        for j, x in enumerate(row):
            lines.append(f"{base.labels[i]} -> {base.labels[j]}: {x}")
    return "\n".join(lines)


def cmd_reduce(args) -> int:
    g = read_graph(args.graph)
    keep = args.keep
    _check_vertices(g.n, *keep)
    if args.method == "schur":
        result, agree = schur_reduce(g, keep), None
    elif args.method == "branch":
        result, agree = branch_reduce(g, keep), None
    else:
        result = schur_reduce(g, keep)
        agree = branch_reduce(g, keep).same_entries(result)
    if args.json:
        data = jsonio.matrix_to_json(result)
        if agree is not None:
            data["methods_agree"] = agree
        print(jsonio.dumps(data))
    else:
        print(f"reduction over {{{', '.join(result.labels)}}} ({args.method})")
        print(_render_matrix(result))
        if agree is not None:
            print(f"schur and branch agree: {str(agree).lower()}")
    if agree is False:
        raise InternalFault("schur and branch reductions disagree")
    return EXIT_OK


def cmd_cospectral(args) -> int:
    g = read_graph(args.graph)
    _check_vertices(g.n, args.a, args.b)
    report = are_strongly_cospectral(g, args.a, args.b) if args.strong else are_cospectral(g, args.a, args.b)
    numeric = None
    if args.numeric_check:
        m = adjacency(g)
        numeric = numeric_strong_check(m, args.a, args.b, args.tol) if m.is_symmetric() else None
    if args.json:
        print(jsonio.dumps(jsonio.cospectral_to_json(report, numeric)))
        return EXIT_OK
    pa, pb = report.via_charpoly
    R = report.via_reduction
    print(f"cospectral: {str(report.cospectral).lower()}")
    print(f"p(G\\{args.a}) = {pa}")
    print(f"p(G\\{args.b}) = {pb}")
    print(f"R[{R.labels[0]},{R.labels[0]}] = {R[0, 0]}")
    print(f"R[{R.labels[1]},{R.labels[1]}] = {R[1, 1]}")
    if args.strong:
        print(f"reduction eigenvalue polynomial: {report.squarefree_witness}")
        print(f"strongly: {str(report.strongly).lower()}")
    if args.numeric_check:
        print("numeric check: " + ("skipped (not symmetric)" if numeric is None else str(numeric).lower()))
    return EXIT_OK


def cmd_latency(args) -> int:
    g = read_graph(args.graph)
    _check_vertices(g.n, args.a, args.b)
    if g.n > args.max_n:
        raise PreconditionError(f"graph has {g.n} vertices, above --max-n {args.max_n}")
    report = measure_of_latency(g, args.a, args.b, workers=args.workers)
    if args.json:
        print(jsonio.dumps(jsonio.latency_to_json(report)))
    else:
        print(f"measure: {report.measure}")
        print(f"witness: {{{', '.join(str(v) for v in report.witness_T)}}} (|T| = {len(report.witness_T)})")
    return EXIT_OK


def cmd_unpack(args) -> int:
    r = jsonio.read_matrix(args.reduced)
    g = unpack_2x2(r)
    if not verify_roundtrip(g, r):
        raise InternalFault("unpacked graph does not reduce back to the input")
    text = format_graph(g)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.json:
        print(jsonio.dumps(jsonio.graph_to_json(g)))
    elif args.out:
        print(f"wrote {g.n}-vertex graph to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_walks(args) -> int:
    g = read_graph(args.graph)
    _check_vertices(g.n, args.a)
    K = args.K if args.K is not None else 2 * g.n
    table = walk_table(g, args.a, K)
    if args.json:
        print(jsonio.dumps(jsonio.walks_to_json(table)))
    else:
        print("closed: [" + ", ".join(str(x) for x in table.closed) + "]")
        print("nonreturning: [" + ", ".join(str(x) for x in table.nonreturning) + "]")
    return EXIT_OK


def cmd_charpoly(args) -> int:
    g = read_graph(args.graph)
    _check_vertices(g.n, *args.delete)
    m: WMatrix = adjacency(g)
    if args.delete:
        m = delete_vertices(m, args.delete)
    p = charpoly(m)
    if args.json:
        print(jsonio.dumps({"convention": "det(M - λI)", "deleted": sorted(set(args.delete)), "coeffs": poly_to_json(p)}))
    else:
        print("# p(M, λ) = det(M - λI)")
        print(p)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="isored", description="Isospectral reductions and cospectral vertices.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("reduce", help="isospectral reduction over a vertex set")
    p.add_argument("graph")
    p.add_argument("--keep", type=_vertex_list, required=True, help="e.g. 0,1")
    p.add_argument("--method", choices=("schur", "branch", "both"), default="schur")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("cospectral", help="test a vertex pair for (strong) cospectrality")
    p.add_argument("graph")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--numeric-check", action="store_true")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cospectral)

    p = sub.add_parser("latency", help="measure of latency of a cospectral pair")
    p.add_argument("graph")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--max-n", type=int, default=16)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_latency)

    p = sub.add_parser("unpack", help="build a digraph from a 2x2 reduced matrix")
    p.add_argument("reduced")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_unpack)

    p = sub.add_parser("walks", help="closed and non-returning walk counts at a vertex")
    p.add_argument("graph")
    p.add_argument("a", type=int)
    p.add_argument("--K", type=int, default=None, help="max walk length (default 2n)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("charpoly", help="characteristic polynomial det(M - λI)")
    p.add_argument("graph")
    p.add_argument("--delete", type=int, nargs="*", default=[])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_charpoly)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except InternalFault as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
