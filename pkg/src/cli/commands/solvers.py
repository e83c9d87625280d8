"""approx, solve-exact, check-claw, bounds."""

import argparse
from fractions import Fraction

from src.cli.io import dump, read_graph, read_instance
from src.core.exceptions import ParameterError
from src.modules.approx.service import approx_solve
from src.modules.graph.solver import find_claw, indep_exact
from src.modules.oracles.bounds import binomial_tail, chernoff_bound, clip_excess, monte_carlo_tail
from src.modules.oracles.brute import brute_cval, brute_val
from src.schemas.common import ResultRecord
from src.shared.enums import DecompositionMode, EvalMode


def _exact(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _approx(args: argparse.Namespace) -> str:
    inst = read_instance(args.input)
    result = approx_solve(inst, args.d, DecompositionMode(args.mode))
    certificate = result.certificate
    return dump({
        "inputs": {"input": args.input, "d": args.d, "mode": args.mode},
        "value": float(result.value),
        "exact": _exact(result.value),
        "satisfied": result.satisfied,
        "assignment": list(result.assignment.labels),
        "certificate": {
            "mode": certificate.mode.value,
            "parts": [
                {"weight": _exact(p.weight), "edges": sorted(p.edges)} for p in certificate.parts
            ],
            "marginals": {str(k): _exact(v) for k, v in sorted(certificate.marginals.items())},
        },
        "forest_values": [
            {"weight": _exact(p.weight), "forest": p.forest_satisfied, "total": p.total_satisfied}
            for p in result.parts
        ],
    })


def _solve_exact(args: argparse.Namespace) -> str:
    inputs = {"input": args.input, "target": args.target}
    if args.target == "indep":
        found = indep_exact(read_graph(args.input))
        record = ResultRecord(inputs=inputs, value=found.size, witness=list(found.witness))
    elif args.target == "cval":
        found = brute_cval(read_instance(args.input))
        record = ResultRecord(inputs=inputs, value=found.size, witness=list(found.partial.labels))
    else:
        found = brute_val(read_instance(args.input))
        record = ResultRecord(
            inputs=inputs,
            value=float(found.value),
            exact=_exact(found.value),
            witness=list(found.assignment.labels),
        )
    return dump(record)


def _check_claw(args: argparse.Namespace) -> str:
    claw = find_claw(read_graph(args.input), args.k)
    witness = None if claw is None else [claw.center, *claw.leaves]
    record = ResultRecord(
        inputs={"input": args.input, "k": args.k}, value=claw is None, witness=witness
    )
    return dump(record)


def _bounds(args: argparse.Namespace) -> str:
    mode = EvalMode(args.mode)
    inputs = {"kind": args.kind, "mu": args.mu, "m": args.m, "mode": mode.value}
    if args.kind == "tail":
        if args.theta is None:
            raise ParameterError("tail needs --theta", parameter="theta")
        inputs["theta"] = args.theta
        if mode == EvalMode.BOUND:
            value = chernoff_bound(args.mu, args.m, args.theta)
        elif mode == EvalMode.EXACT:
            value = binomial_tail(args.mu, args.m, args.theta)
        else:
            value = monte_carlo_tail(args.mu, args.m, args.theta, args.trials, args.seed, args.workers)
    else:
        if args.tau is None:
            raise ParameterError("clip needs --tau", parameter="tau")
        inputs["tau"] = args.tau
        value = clip_excess(args.mu, args.m, args.tau, mode, args.trials, args.seed, args.workers)
    if mode == EvalMode.MONTE_CARLO:
        inputs.update(trials=args.trials, seed=args.seed)
    return dump(ResultRecord(inputs=inputs, value=value))


def register(commands: argparse._SubParsersAction) -> None:
    approx = commands.add_parser("approx", help="(d+1)/2-approximation with certificate")
    approx.add_argument("--input", required=True)
    approx.add_argument("--d", type=int, required=True)
    approx.add_argument("--mode", choices=[m.value for m in DecompositionMode], default="exact")
    approx.add_argument("--out", default=None)
    approx.set_defaults(handler=_approx)

    solve = commands.add_parser("solve-exact", help="Exact val, cval or independence number")
    solve.add_argument("--input", required=True, help="Instance (val, cval) or graph (indep)")
    solve.add_argument("--target", choices=["val", "cval", "indep"], default="val")
    solve.add_argument("--out", default=None)
    solve.set_defaults(handler=_solve_exact)

    claw = commands.add_parser("check-claw", help="Search a graph for an induced K_{1,k}")
    claw.add_argument("--input", required=True)
    claw.add_argument("--k", type=int, required=True)
    claw.add_argument("--out", default=None)
    claw.set_defaults(handler=_check_claw)

    bounds = commands.add_parser("bounds", help="Binomial tail and clipped excess")
    bounds.add_argument("--kind", choices=["tail", "clip"], default="tail")
    bounds.add_argument("--mu", type=float, required=True)
    bounds.add_argument("--m", type=int, required=True)
    bounds.add_argument("--theta", type=float, default=None)
    bounds.add_argument("--tau", type=int, default=None)
    bounds.add_argument("--mode", choices=[m.value for m in EvalMode], default="bound")
    bounds.add_argument("--trials", type=int, default=100_000)
    bounds.add_argument("--seed", type=int, default=0)
    bounds.add_argument("--workers", type=int, default=1)
    bounds.add_argument("--out", default=None)
    bounds.set_defaults(handler=_bounds)
