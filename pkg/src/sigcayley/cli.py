"""Command-line front end.

Exit codes: 0 success, 1 internal inconsistency, 2 usage or validation
error, 3 an oracle refused an instance above its size gate.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Sequence

from . import oracle
from .arith import nonunit_runs
from .cayley import build_sigraph, connection_set, validate_spec
from .errors import GateError, InvalidInputError
from .harness import CLAIM_IDS, ConsistencyError, analyze, sweep_specs, verify
from .sigraph import edge_counts, to_dot
from .sigraph import to_dict as graph_to_dict


def _graph_json(spec) -> str:
    g = build_sigraph(spec)
    doc = {"spec": {"p": spec.p, "n": spec.n}, "phi_size": connection_set(spec).size}
    doc.update(graph_to_dict(g))
    return json.dumps(doc, indent=2)


def _graph_text(spec) -> str:
    g = build_sigraph(spec)
    c = edge_counts(g)
    lines = [f"Sigma(Z_{spec.p} x Z_{spec.n}): {g.vertex_count} vertices, {g.edge_count} edges "
             f"({c.positive} positive, {c.negative} negative)"]
    lines += [f"{g.label(a)} -- {g.label(b)} {s.symbol}" for a, b, s in g.edges]
    return "\n".join(lines)


def cmd_build(args) -> str:
    spec = validate_spec(args.p, args.n)
    if args.format == "dot":
        return to_dot(build_sigraph(spec), name=f"Sigma_{spec.p}_{spec.n}")
    if args.format == "text":
        return _graph_text(spec)
    return _graph_json(spec)


def _analysis_text(doc) -> str:
    oc = doc.oracle
    lc = doc.line_conditions
    lines = [
        f"instance        (p, n) = ({doc.p}, {doc.n}), |Phi| = {doc.phi_size}",
        f"edges           {doc.counts.positive} positive, {doc.counts.negative} negative",
        f"components      {len(doc.component_sizes)} of sizes {list(doc.component_sizes)}",
        f"balanced        {doc.balance.balanced}   (oracle: {oc.get('balanced')})",
        f"clusterable     {doc.clusters.clusterable}   (oracle: {oc.get('clusterable')})",
        f"sign-compatible {doc.compat.compatible}   (oracle: {oc.get('compatible')})",
        f"L(Sigma) balanced {doc.line_balanced}   (conditions: 1a={lc.cond1a.passed} "
        f"1b={lc.cond1b.passed} 2={lc.cond2.passed}, exhaustive={lc.exhaustive})",
        f"lambda(n)       {doc.runs.lam}, maximal runs at {list(doc.runs.run_starts)}",
    ]
    if doc.balance.witness_cycle is not None:
        w = doc.balance.witness_cycle
        labels = " ".join(doc.graph.label(v) for v in w.vertices)
        lines.append(f"negative cycle  {labels}  signs {''.join(s.symbol for s in w.signs)}")
    for pred in doc.predictions:
        lines.append(
            f"formula {pred.applicable_rule:<12} positive={pred.predicted_positive} "
            f"negative={pred.predicted_negative}"
        )
    return "\n".join(lines)


def cmd_analyze(args) -> str:
    spec = validate_spec(args.p, args.n)
    doc = analyze(spec, args.cycle_limit, args.marking_limit)
    if args.format == "text":
        return _analysis_text(doc)
    if args.format == "dot":
        return to_dot(doc.graph, name=f"Sigma_{spec.p}_{spec.n}")
    return doc.to_json()


def _fmt(x) -> str:
    if x is None:
        return "-"
    return json.dumps(x)


def cmd_verify(args) -> str:
    claims = CLAIM_IDS
    if args.claims:
        claims = tuple(c.strip().upper() for c in args.claims.split(",") if c.strip())
        unknown = set(claims) - set(CLAIM_IDS)
        if unknown:
            raise InvalidInputError(f"unknown claim ids: {', '.join(sorted(unknown))}")
    if args.p is not None or args.n is not None:
        if args.p is None or args.n is None:
            raise InvalidInputError("--p and --n must be given together")
        specs = [validate_spec(args.p, args.n)]
    else:
        specs = sweep_specs(args.sweep_max)
    rows = verify(specs, claims, args.cycle_limit, args.marking_limit)
    if args.format == "json":
        return json.dumps([r.to_dict() for r in rows], indent=2)
    header = f"{'claim':<12} {'instance':<9} {'predicted':<12} {'observed':<12} {'status':<15} note"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(
            f"{r.claim_id:<12} {f'({r.p},{r.n})':<9} {_fmt(r.predicted):<12} "
            f"{_fmt(r.observed):<12} {r.status:<15} {r.note}"
        )
    tally = Counter((r.claim_id, r.status) for r in rows)
    lines.append("")
    for claim in claims:
        parts = [f"{s}={tally[(claim, s)]}" for s in ("AGREE", "DISAGREE", "NOT_APPLICABLE")]
        lines.append(f"{claim:<12} " + " ".join(parts))
    return "\n".join(lines)


def cmd_lambda(args) -> str:
    rep = nonunit_runs(args.n)
    if args.format == "json":
        return json.dumps(rep.to_dict(), indent=2)
    return "\n".join(
        [
            f"n = {rep.modulus}",
            f"lambda = {rep.lam}",
            f"maximal runs = {rep.maximal_run_count} starting at {list(rep.run_starts)}",
            "runs = " + ", ".join(f"[{s}..{s + k - 1}]" for s, k in rep.all_runs),
        ]
    )


def cmd_cycles(args) -> str:
    spec = validate_spec(args.p, args.n)
    g = build_sigraph(spec)
    cycles = oracle.enumerate_simple_cycles(g, args.cycle_limit)
    if args.format == "json":
        return json.dumps([c.to_dict() for c in cycles], indent=2)
    lines = [f"{len(cycles)} simple cycles"]
    for c in cycles:
        lines.append(
            " ".join(g.label(v) for v in c.vertices) + "   " + "".join(s.symbol for s in c.signs)
        )
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigcayley", description="Signed Cayley graphs on Z_p x Z_n."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats, default, needs_spec=True):
        sp.add_argument("--p", type=int, required=needs_spec)
        sp.add_argument("--n", type=int, required=needs_spec)
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--cycle-limit", type=int, default=oracle.DEFAULT_CYCLE_LIMIT)
        sp.add_argument("--marking-limit", type=int, default=oracle.DEFAULT_MARKING_LIMIT)
        sp.add_argument("--out", help="write to this path instead of stdout")

    sp = sub.add_parser("build", help="emit the signed Cayley graph")
    common(sp, ("json", "dot", "text"), "json")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("analyze", help="balance, clusters, compatibility, line sigraph")
    common(sp, ("json", "dot", "text"), "json")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("verify", help="check every claim id against enumeration")
    common(sp, ("json", "text"), "text", needs_spec=False)
    sp.add_argument("--sweep-max", type=int, default=120, help="largest p*n in the sweep")
    sp.add_argument("--claims", help="comma-separated subset of " + ",".join(CLAIM_IDS))
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("lambda", help="runs of consecutive non-units modulo n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_lambda)

    sp = sub.add_parser("cycles", help="list every simple cycle (exhaustive, gated)")
    common(sp, ("json", "text"), "text")
    sp.set_defaults(func=cmd_cycles)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GateError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
