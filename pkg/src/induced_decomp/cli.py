"""Command-line front end.

Subcommands mirror the library: mols, td, blowup, dense, verify, cex.
Artifacts are JSON (pretty-printed, sorted keys) or plain edge-list
text, written to --out when given and to stdout otherwise; repeated
runs with identical inputs produce byte-identical output.

Exit codes: 0 success, 1 usage or malformed input, 2 unsupported or
out-of-range request, 3 no feasible construction or search budget
exhausted, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dense as dense_mod
from . import designs, oracle
from .blowup import (
    PatternSignature,
    SamePart,
    UnsupportedPattern,
    blowup_decompose,
    decomposition_from_json,
)
from .embedded import SearchExhausted, UnsupportedP
from .oracle import SearchBudget, SmallGraph


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _pattern(text: str) -> PatternSignature:
    try:
        return PatternSignature.from_text(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _budget(args) -> SearchBudget | None:
    nodes = getattr(args, "budget_nodes", None)
    seconds = getattr(args, "budget_seconds", None)
    if nodes is None and seconds is None:
        return None
    base = oracle.default_budget()
    return SearchBudget(
        max_nodes=nodes if nodes is not None else base.max_nodes,
        max_seconds=seconds if seconds is not None else base.max_seconds,
    )


def _emit(args, artifact=None, text: str | None = None, summary: str | None = None) -> None:
    payload = text if text is not None else json.dumps(artifact, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(payload)
        if summary:
            print(summary)
        print(f"wrote {args.out}")
    else:
        if summary:
            print(summary)
        sys.stdout.write(payload)


def cmd_mols(args) -> int:
    family = designs.mols(args.order, args.count)
    _emit(
        args,
        artifact=family.to_json_dict(),
        summary=f"{len(family)} mutually orthogonal Latin squares of order {args.order}",
    )
    return 0


def cmd_td(args) -> int:
    family = designs.mols(args.n, args.k - 2)
    td = designs.td_from_mols(family, args.k)
    violations = designs.verify_td(td)
    if violations:
        print(f"constructed design failed verification: {violations[0]}", file=sys.stderr)
        return 4
    _emit(
        args,
        artifact=td.to_json_dict(),
        summary=f"TD({args.k}, {args.n}): {len(td.blocks)} blocks, verified",
    )
    return 0


def cmd_blowup(args) -> int:
    d = blowup_decompose(args.pattern)
    graph = oracle.multipartite_graph(d.host)
    violations = oracle.verify_decomposition(graph, d.pattern, d.copies, induced=True)
    if violations:
        print(f"decomposition failed verification: {violations[0]}", file=sys.stderr)
        return 4
    summary = (
        f"K_{{{','.join(str(s) for s in d.host.parts)}}}: "
        f"{len(d.copies)} induced copies, verified"
    )
    if args.format == "edgelist":
        _emit(args, text=graph.to_edge_list_text(), summary=summary)
    else:
        _emit(args, artifact=d.to_json_dict(), summary=summary)
    return 0


def cmd_dense(args) -> int:
    cert = dense_mod.assemble(args.pattern, args.n, budget=_budget(args))
    params = cert.params
    summary = (
        f"n = {params.n}: n' = {params.n_prime}, p = {params.p}, t = {params.t}; "
        f"{len(cert.decomposition.copies)} induced copies, verified; "
        f"non-edges {cert.bound_lhs} < bound {cert.bound_rhs}"
    )
    if args.format == "edgelist":
        graph = oracle.multipartite_graph(cert.decomposition.host)
        _emit(args, text=graph.to_edge_list_text(), summary=summary)
    else:
        _emit(args, artifact=cert.to_json_dict(), summary=summary)
    return 0


def _load_decomposition_file(path: str):
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read decomposition file {path}: {exc}") from None
    try:
        if "params" in data:
            pattern = PatternSignature(parts=tuple(data["pattern"]))
            copies = [
                tuple(tuple(v) for v in entry["classes"]) for entry in data["copies"]
            ]
            return pattern, copies, True
        d = decomposition_from_json(data)
        return d.pattern, d.copies, d.induced
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed decomposition file {path}: {exc}") from None


def cmd_verify(args) -> int:
    try:
        graph = SmallGraph.from_edge_list_text(Path(args.graph).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read graph file {args.graph}: {exc}") from None
    pattern, copies, induced_from_file = _load_decomposition_file(args.decomposition)
    induced = {"auto": induced_from_file, "yes": True, "no": False}[args.induced]
    violations = oracle.verify_decomposition(graph, pattern, copies, induced=induced)
    if violations:
        print(f"verification failed: {violations[0]}")
        return 4
    print(f"ok: {len(copies)} copies cover all {graph.edge_count} edges")
    return 0


def cmd_cex(args) -> int:
    value, witness = oracle.cex_exact(args.n, args.pattern, budget=_budget(args))
    summary = f"cex({args.n}, {args.pattern.parts}) = {value}"
    artifact = {
        "n": args.n,
        "pattern": list(args.pattern.parts),
        "cex": value,
        "witness_edges": [list(e) for e in witness.edges()],
    }
    _emit(args, artifact=artifact, summary=summary)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="induced-decomp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mols", help="construct mutually orthogonal Latin squares")
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_mols)

    p = sub.add_parser("td", help="construct and verify a transversal design")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_td)

    p = sub.add_parser("blowup", help="decompose the blown-up pattern")
    p.add_argument("--pattern", type=_pattern, required=True, metavar="A1,A2,...")
    p.add_argument("--format", choices=("json", "edgelist"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("dense", help="assemble a dense decomposable graph")
    p.add_argument("--pattern", type=_pattern, required=True, metavar="A1,A2,...")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "edgelist"), default="json")
    p.add_argument("--budget-nodes", type=_positive)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dense)

    p = sub.add_parser("verify", help="verify a decomposition against a graph")
    p.add_argument("--graph", required=True, help="edge-list text file")
    p.add_argument("--decomposition", required=True, help="decomposition or certificate JSON")
    p.add_argument("--induced", choices=("auto", "yes", "no"), default="auto")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cex", help="exact minimum deletions from K_n (small n)")
    p.add_argument("--pattern", type=_pattern, required=True, metavar="A1,A2,...")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--budget-nodes", type=_positive)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cex)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        designs.NotPrimePower,
        designs.UnsupportedOrder,
        designs.CountExceedsBound,
        designs.InsufficientSquares,
        UnsupportedPattern,
        UnsupportedP,
        SearchExhausted,
        oracle.CapExceeded,
    ) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 2
    except (
        dense_mod.NoFeasibleParameters,
        oracle.NoDecomposition,
        oracle.BudgetExceeded,
    ) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    except (ValueError, SamePart) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
