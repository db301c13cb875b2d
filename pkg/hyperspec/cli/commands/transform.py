"""transform: edge moving, edge releasing and 2-switching"""
import argparse
import json

from hyperspec.cli.options import add_output_options, cli_config, emit
from hyperspec.exceptions import BadParamsError, FormatError
from hyperspec.schemas import EdgeMove, TwoSwitchSpec
from hyperspec.services.transforms import edge_release, move_edges, two_switch
from hyperspec.utils.formats import dumps_hypergraph, dumps_text, load_hypergraph, load_model, read_source

HELP = "apply a rewriting operation to a hypergraph"


def register(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("operation", choices=["move", "release", "switch"])
    parser.add_argument("input", help="hypergraph file, inline JSON, or - for stdin")
    parser.add_argument("--spec", help='move/switch spec, e.g. {"move": {"target": 0, "relocations": [[2, 4]]}}')
    parser.add_argument("--edge", type=int, help="edge index to release")
    parser.add_argument("--vertex", type=int, help="vertex of the released edge receiving its neighbours")
    add_output_options(parser)


def _spec_text(args: argparse.Namespace) -> str:
    """The spec object, unwrapped from {"move": ...} / {"switch": ...} when wrapped."""
    if args.spec is None:
        raise BadParamsError(f"{args.operation} needs --spec")
    text = read_source(args.spec)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"--spec is not valid JSON: {e}") from e
    if isinstance(payload, dict) and set(payload) == {args.operation}:
        return json.dumps(payload[args.operation])
    return text


def run(args: argparse.Namespace) -> int:
    config = cli_config(args)
    graph = load_hypergraph(args.input)
    if args.operation == "move":
        result = move_edges(graph, load_model(_spec_text(args), EdgeMove))
    elif args.operation == "switch":
        result = two_switch(graph, load_model(_spec_text(args), TwoSwitchSpec))
    else:
        if args.edge is None or args.vertex is None:
            raise BadParamsError("release needs --edge and --vertex")
        result = edge_release(graph, args.edge, args.vertex)

    emit(dumps_text(result) if config.format == "text" else dumps_hypergraph(result), config.output)
    return 0
