"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (parameters outside the
range where a formula is defined), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__, branching, gross_prasad, irreps, multiplicity, render, selftest
from .scalars import DomainError, Sign, UnsupportedScalarError, parse_scalar

TABLE = "table"
JSON = "json"
DOT = "dot"


def _sign_arg(text: str) -> Sign:
    try:
        return Sign.parse(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from err


def _scalar_arg(text: str):
    try:
        return parse_scalar(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from err


def _add_format(parser, *, dot: bool = False) -> None:
    choices = [TABLE, JSON, DOT] if dot else [TABLE, JSON]
    parser.add_argument("--format", choices=choices, default=TABLE)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sobranch",
        description=(
            "Exact symmetry-breaking calculator for the rank-one pairs "
            "SO(n+1,1) > SO(n,1): principal-series multiplicities, the "
            "rho-family of irreducibles, branching graphs, and "
            "Gross-Prasad packet resolution."
        ),
    )
    parser.add_argument("--version", action="version", version=f"sobranch {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    mult = sub.add_parser("mult", help="principal series multiplicity m(i,j)")
    mult.add_argument("--n", type=int, required=True)
    mult.add_argument("--i", type=int, required=True)
    mult.add_argument("--lambda", dest="lam", type=_scalar_arg, default=None,
                      help="scalar: a, a/b, a/b+c/d*i, or generic")
    mult.add_argument("--delta", type=_sign_arg, required=True)
    mult.add_argument("--j", type=int, required=True)
    mult.add_argument("--nu", type=_scalar_arg, default=None)
    mult.add_argument("--epsilon", type=_sign_arg, required=True)
    mult.add_argument("--generic", action="store_true",
                      help="shorthand for --lambda generic --nu generic")
    _add_format(mult)

    irreps_cmd = sub.add_parser("irreps", help="the rho-family of SO(n+1,1)")
    irreps_cmd.add_argument("--n", type=int, required=True)
    _add_format(irreps_cmd)

    branch = sub.add_parser("branch", help="branching graph SO(n+1,1) > SO(n,1)")
    branch.add_argument("--n", type=int, required=True)
    _add_format(branch, dot=True)

    theta = sub.add_parser("theta", help="theta-stable parameter of Pi_{ell,delta}")
    theta.add_argument("--n", type=int, required=True)
    theta.add_argument("--ell", type=int, required=True)
    theta.add_argument("--delta", type=_sign_arg, required=True)
    _add_format(theta)

    gp = sub.add_parser("gp", help="Gross-Prasad distinguished pair resolution")
    gp.add_argument("--conjecture", choices=["I", "II"], required=True)
    gp.add_argument("--m", type=int, required=True)
    gp.add_argument("--profile", choices=["literal", "calibrated"], default="calibrated")
    _add_format(gp)

    packet = sub.add_parser("packet", help="Vogan packet over pure inner forms")
    packet.add_argument("--kind", choices=["ds-odd", "tempered-even"], required=True)
    packet.add_argument("--m", type=int, required=True)
    _add_format(packet)

    self_cmd = sub.add_parser("selftest", help="golden vectors and invariant sweeps")
    self_cmd.add_argument("--filter", default=None,
                          help="run only checks whose name contains this text")
    self_cmd.add_argument("--vectors", default=None,
                          help="alternate golden-vector file")
    return parser


def _run_mult(args) -> str:
    lam = parse_scalar("generic") if args.generic else args.lam
    nu = parse_scalar("generic") if args.generic else args.nu
    if lam is None or nu is None:
        raise UsageError("mult requires --lambda and --nu (or --generic)")
    result = multiplicity.principal_series_multiplicity(
        args.n, args.i, lam, args.delta, args.j, nu, args.epsilon
    )
    if args.format == JSON:
        inputs = {
            "n": args.n, "i": args.i, "lambda": render.scalar_json(lam),
            "delta": str(args.delta), "j": args.j, "nu": render.scalar_json(nu),
            "epsilon": str(args.epsilon),
        }
        return render.canonical_json(render.mult_json(result, inputs))
    return f"value={result.value} case={result.case_label}"


def _run_irreps(args) -> str:
    family = irreps.irreps_with_rho(args.n)
    if args.format == JSON:
        doc = {"n": args.n, "irreps": [render.irrep_json(r) for r in family]}
        return render.canonical_json(doc)
    lines = []
    for r in family:
        kind = irreps.classify_irrep(r)
        central = "nontrivial" if irreps.central_character_nontrivial(r) else "trivial"
        theta = irreps.theta_stable_parameter(r)
        lines.append(f"{r.label()}  {kind}  central={central}  theta={theta}")
    return "\n".join(lines)


def _run_branch(args) -> str:
    graph = branching.branching_graph(args.n)
    if args.format == DOT:
        return render.graph_dot(graph)
    if args.format == JSON:
        return render.canonical_json(render.graph_json(graph))
    lines = [
        f"big={len(graph.nodes_big)} small={len(graph.nodes_small)} "
        f"edges={len(graph.edges)}"
    ]
    for big, small in graph.edges:
        lines.append(f"{branching.node_id(big)} -> {branching.node_id(small, small=True)}")
    return "\n".join(lines)


def _run_theta(args) -> str:
    rep = irreps.canonical_irrep(args.n, args.ell, args.delta)
    param = irreps.theta_stable_parameter(rep)
    if args.format == JSON:
        return render.canonical_json(render.theta_json(param))
    return str(param)


def _run_gp(args) -> str:
    pair = gross_prasad.gp_distinguished_pair(args.conjecture, args.m, args.profile)
    res = pair.resolution
    if args.format == JSON:
        return render.canonical_json(render.resolution_json(res))
    first, second = res.forms
    lines = [f"p={res.p} q={res.q} first={first} second={second}"]
    lines.append(f"chi_first=({', '.join(str(s) for s in res.chi_first)})")
    lines.append(f"chi_second=({', '.join(str(s) for s in res.chi_second)})")
    lines.append(
        f"distinguished: {pair.first.describe('Pi')} -> "
        f"{pair.second.describe('pi')}  hom_dim={pair.hom_dim}"
    )
    if res.warning is not None:
        lines.append(f"warning: {res.warning}")
    return "\n".join(lines)


def _run_packet(args) -> str:
    packet = gross_prasad.vogan_packet(args.kind, args.m)
    if args.format == JSON:
        return render.canonical_json(render.packet_json(packet))
    lines = [f"total={packet.total} rank={packet.character_group_rank}"]
    for member in packet.members:
        lines.append(f"{member.form} count={member.count}")
    return "\n".join(lines)


def _run_selftest(args) -> tuple[str, int]:
    vectors_path = Path(args.vectors) if args.vectors is not None else None
    reports = selftest.run_selftest(args.filter, vectors_path)
    lines = []
    failed = 0
    for report in reports:
        if report.passed:
            lines.append(f"PASS {report.name} ({report.summary})")
        else:
            failed += 1
            for failure in report.failures:
                lines.append(f"FAIL {report.name}: {failure}")
    lines.append(
        f"{len(reports) - failed}/{len(reports)} checks passed"
        if reports
        else "no checks matched the filter"
    )
    return "\n".join(lines), 0 if failed == 0 and reports else 1


class UsageError(Exception):
    pass


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "mult":
            output = _run_mult(args)
        elif args.command == "irreps":
            output = _run_irreps(args)
        elif args.command == "branch":
            output = _run_branch(args)
        elif args.command == "theta":
            output = _run_theta(args)
        elif args.command == "gp":
            output = _run_gp(args)
        elif args.command == "packet":
            output = _run_packet(args)
        else:
            output, code = _run_selftest(args)
            print(output)
            return code
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    except (DomainError, UnsupportedScalarError) as err:
        print(f"domain error: {err}", file=sys.stderr)
        return 1
    except (FileNotFoundError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    print(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
