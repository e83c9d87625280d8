"""reduce-*: one reduction per command, instance in, instance or graph out."""

import argparse

from src.cli.io import dump, read_instance, write_text
from src.core.exceptions import ParameterError
from src.modules.csp.codec import serialize
from src.modules.graph.codec import serialize_graph
from src.modules.reductions.copy_expand import biregular_degrees, copy_expand
from src.modules.reductions.doubling import bipartite_double
from src.modules.reductions.fglss import fglss
from src.modules.reductions.label_extended import label_extended
from src.modules.reductions.subsample import subsample_params, subsample_reduce


def _copy(args: argparse.Namespace) -> str:
    return serialize(copy_expand(read_instance(args.input), args.c1, args.c2))


def _double(args: argparse.Namespace) -> str:
    return serialize(bipartite_double(read_instance(args.input)))


def _subsample(args: argparse.Namespace) -> str:
    for name in ("d_a", "d_b"):
        if getattr(args, name) < 1:
            raise ParameterError(f"{name} must be a positive integer", parameter=name)
    inst = read_instance(args.input)
    d1, d2 = biregular_degrees(inst)
    if d1 % args.d_a or d2 % args.d_b or d1 // args.d_a != d2 // args.d_b:
        raise ParameterError(
            f"Input is ({d1}, {d2})-biregular, not (d_A*C, d_B*C) for d_A={args.d_a}, d_B={args.d_b}",
            parameter="d_a",
        )
    params = subsample_params(
        delta=args.delta,
        nu=args.nu,
        t=args.t,
        C=d1 // args.d_a,
        d_a=args.d_a,
        d_b=args.d_b,
        a_size=len(inst.bipartition.left),
        override_lambda=args.override_lambda,
        override_p=args.override_p,
    )
    reduced, report = subsample_reduce(inst, args.d_a, args.d_b, params, args.seed)
    if args.report:
        write_text(dump({"params": params.model_dump(mode="json", by_alias=True),
                         "report": report.model_dump(mode="json")}), args.report)
    return serialize(reduced)


def _fglss(args: argparse.Namespace) -> str:
    return serialize_graph(fglss(read_instance(args.input), args.d_a, args.d_b))


def _label_extended(args: argparse.Namespace) -> str:
    return serialize_graph(label_extended(read_instance(args.input), args.d))


def register(commands: argparse._SubParsersAction) -> None:
    copy = commands.add_parser("reduce-copy", help="Copy expansion of a biregular instance")
    copy.add_argument("--input", required=True)
    copy.add_argument("--c1", type=int, required=True)
    copy.add_argument("--c2", type=int, required=True)
    copy.add_argument("--out", default=None)
    copy.set_defaults(handler=_copy)

    double = commands.add_parser("reduce-double", help="Bipartite double cover")
    double.add_argument("--input", required=True)
    double.add_argument("--out", default=None)
    double.set_defaults(handler=_double)

    sub = commands.add_parser("reduce-subsample", help="Subsampling degree reduction")
    sub.add_argument("--input", required=True)
    sub.add_argument("--d-a", type=int, required=True)
    sub.add_argument("--d-b", type=int, required=True)
    sub.add_argument("--delta", type=float, required=True)
    sub.add_argument("--nu", type=float, required=True)
    sub.add_argument("--t", type=float, default=1.0)
    sub.add_argument("--lambda", dest="override_lambda", type=float, default=None)
    sub.add_argument("--p", dest="override_p", type=float, default=None)
    sub.add_argument("--seed", type=int, required=True)
    sub.add_argument("--report", default=None, help="Write the parameter ledger and report here")
    sub.add_argument("--out", default=None)
    sub.set_defaults(handler=_subsample)

    fg = commands.add_parser("reduce-fglss", help="FGLSS graph")
    fg.add_argument("--input", required=True)
    fg.add_argument("--d-a", type=int, default=None)
    fg.add_argument("--d-b", type=int, default=None)
    fg.add_argument("--out", default=None)
    fg.set_defaults(handler=_fglss)

    le = commands.add_parser("reduce-label-extended", help="Label-extended graph")
    le.add_argument("--input", required=True)
    le.add_argument("--d", type=int, default=None)
    le.add_argument("--out", default=None)
    le.set_defaults(handler=_label_extended)
