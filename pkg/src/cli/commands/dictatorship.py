"""dict-test: acceptance probability of the two-query gadget test."""

import argparse
from pathlib import Path

from src.cli.io import dump
from src.core.exceptions import ParameterError
from src.modules.dictatorship import testing
from src.modules.dictatorship.gadget import PredicateGadget, build_gadget
from src.modules.dictatorship.gaussian import soundness_estimate
from src.modules.graph.codec import graph_to_dict
from src.schemas.dictatorship import DictTestRecord, GadgetSchema
from src.shared.enums import EvalMode, FunctionKind


def parse_function(spec: str, R: int, L: int, seed: int) -> testing.TestFunction:
    """dictator:i | constant:c | random | file:path."""
    name, _, arg = spec.partition(":")
    try:
        kind = FunctionKind(name)
    except ValueError:
        raise ParameterError(f"Unknown function {spec!r}", parameter="function") from None
    if kind == FunctionKind.RANDOM:
        return testing.TestFunction.random(R, L, seed)
    if kind == FunctionKind.FILE:
        return testing.TestFunction.from_file(Path(arg))
    try:
        index = int(arg)
    except ValueError as exc:
        raise ParameterError(f"Bad function argument in {spec!r}", parameter="function") from exc
    if kind == FunctionKind.DICTATOR:
        return testing.TestFunction.dictator(R, L, index)
    return testing.TestFunction.constant(R, L, index)


def gadget_document(gadget: PredicateGadget) -> GadgetSchema:
    return GadgetSchema(
        R=gadget.R,
        t=gadget.t,
        graph=graph_to_dict(gadget.graph),
        pairs=[list(p) for p in gadget.pairs],
    )


def _dict_test(args: argparse.Namespace) -> str:
    gadget = build_gadget(args.R, args.t, args.seed)
    f = parse_function(args.function, args.R, args.L, args.seed)
    mode = EvalMode(args.mode)
    value = testing.test_accept_prob(gadget, f, mode, args.trials, args.seed)
    inputs = {
        "R": args.R, "t": args.t, "L": f.L, "seed": args.seed,
        "function": args.function, "mode": mode.value,
        "rho": gadget.rho, "attempts": gadget.attempts,
        "balanced": f.is_balanced(),
        "soundness_estimate": soundness_estimate(args.R, args.t, gadget.rho),
    }
    if mode == EvalMode.MONTE_CARLO:
        inputs["trials"] = args.trials
    return dump(DictTestRecord(inputs=inputs, value=value, gadget=gadget_document(gadget)))


def register(commands: argparse._SubParsersAction) -> None:
    cmd = commands.add_parser("dict-test", help="Dictatorship test acceptance probability")
    cmd.add_argument("--R", type=int, required=True)
    cmd.add_argument("--t", type=int, required=True)
    cmd.add_argument("--L", type=int, default=1)
    cmd.add_argument("--seed", type=int, required=True)
    cmd.add_argument("--function", default="dictator:0")
    cmd.add_argument("--mode", choices=[EvalMode.EXACT.value, EvalMode.MONTE_CARLO.value], default="exact")
    cmd.add_argument("--trials", type=int, default=100_000)
    cmd.add_argument("--out", default=None)
    cmd.set_defaults(handler=_dict_test)
