"""gen: synthetic instance sources."""

import argparse

from src.cli.io import write_text
from src.modules.csp.codec import serialize, serialize_assignment
from src.modules.csp.generator import gen_planted, gen_random_bounded


def _planted(args: argparse.Namespace) -> str:
    result = gen_planted(
        args.n_a, args.n_b, args.d1, args.d2, args.r_left, args.r_right,
        noise=args.noise, seed=args.seed, extra_density=args.extra_density,
    )
    if args.planted_out:
        write_text(serialize_assignment(result.planted), args.planted_out)
    return serialize(result.instance)


def _random(args: argparse.Namespace) -> str:
    inst = gen_random_bounded(
        args.n, args.d, args.alphabet, args.edges, args.density, args.seed,
        left_size=args.left_size, d_right=args.d_right,
    )
    return serialize(inst)


def register(commands: argparse._SubParsersAction) -> None:
    gen = commands.add_parser("gen", help="Generate an instance")
    sources = gen.add_subparsers(dest="source", required=True)

    planted = sources.add_parser("planted", help="Planted (d1, d2)-biregular instance")
    planted.add_argument("--n-a", type=int, required=True)
    planted.add_argument("--n-b", type=int, required=True)
    planted.add_argument("--d1", type=int, required=True)
    planted.add_argument("--d2", type=int, required=True)
    planted.add_argument("--r-left", type=int, required=True)
    planted.add_argument("--r-right", type=int, default=None)
    planted.add_argument("--noise", type=float, default=0.0)
    planted.add_argument("--extra-density", type=float, default=0.1)
    planted.add_argument("--seed", type=int, required=True)
    planted.add_argument("--planted-out", default=None, help="Write the planted assignment here")
    planted.add_argument("--out", default=None)
    planted.set_defaults(handler=_planted)

    rand = sources.add_parser("random", help="Random d-bounded instance")
    rand.add_argument("--n", type=int, required=True)
    rand.add_argument("--d", type=int, required=True)
    rand.add_argument("--alphabet", type=int, required=True)
    rand.add_argument("--edges", type=int, required=True)
    rand.add_argument("--density", type=float, default=0.5)
    rand.add_argument("--left-size", type=int, default=None)
    rand.add_argument("--d-right", type=int, default=None)
    rand.add_argument("--seed", type=int, required=True)
    rand.add_argument("--out", default=None)
    rand.set_defaults(handler=_random)
