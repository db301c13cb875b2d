"""construct: build hyperstars, T-family, H-family and BFS-supertrees"""
import argparse

from hyperspec.cli.options import add_output_options, cli_config, emit, int_list
from hyperspec.exceptions import BadParamsError
from hyperspec.services.constructions import bfs_supertree, h_supertree, hyperstar, t_supertree
from hyperspec.utils.formats import dumps_hypergraph, dumps_text

HELP = "build a named supertree family member"


def register(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("family", choices=["star", "t", "h", "bfs"])
    parser.add_argument("--m", type=int, help="edge count")
    parser.add_argument("--k", type=int, required=True, help="edge size")
    parser.add_argument("--beta", type=int, help="independence number (family t)")
    parser.add_argument("--mu", type=int, help="matching number (family h)")
    parser.add_argument("--pi", type=int_list, help="degree sequence, comma separated (family bfs)")
    add_output_options(parser)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise BadParamsError(f"family {args.family} needs {', '.join(missing)}")


def run(args: argparse.Namespace) -> int:
    config = cli_config(args)
    if args.family == "star":
        _require(args, "m")
        graph = hyperstar(args.m, args.k)
    elif args.family == "t":
        _require(args, "m", "beta")
        graph = t_supertree(m=args.m, k=args.k, beta=args.beta)
    elif args.family == "h":
        _require(args, "m", "mu")
        graph = h_supertree(m=args.m, k=args.k, mu=args.mu)
    else:
        _require(args, "pi")
        graph = bfs_supertree(args.k, args.pi)

    emit(dumps_text(graph) if config.format == "text" else dumps_hypergraph(graph), config.output)
    return 0
