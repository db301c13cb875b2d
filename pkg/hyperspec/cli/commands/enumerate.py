"""enumerate: all supertrees with m edges up to isomorphism"""
import argparse
import json

from hyperspec.cli.options import add_output_options, cli_config, emit, int_list
from hyperspec.exceptions import FormatError
from hyperspec.services.enumeration import enumerate_ranked
from hyperspec.utils.formats import to_schema

HELP = "enumerate non-isomorphic k-uniform supertrees"


def register(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, required=True, help="edge count")
    parser.add_argument("--k", type=int, required=True, help="edge size")
    parser.add_argument("--filter", default=None, help="beta=B, mu=U or pi=d0,d1,...")
    parser.add_argument("--count", action="store_true", help="print only the number of classes")
    parser.add_argument("--reverse-anchors", action="store_true", help="grow with anchors in reverse order")
    add_output_options(parser, formats=("json",))


def parse_filter(text: str) -> dict:
    name, _, value = text.partition("=")
    name = name.strip().lower()
    if not value:
        raise FormatError(f"filter must look like beta=B, mu=U or pi=...; got {text!r}")
    if name == "pi":
        return {"degree_sequence": int_list(value)}
    if name in ("beta", "mu"):
        try:
            return {name: int(value)}
        except ValueError as e:
            raise FormatError(f"filter value {value!r} is not an integer") from e
    raise FormatError(f"unknown filter {name!r}; use beta, mu or pi")


def run(args: argparse.Namespace) -> int:
    config = cli_config(args)
    values = {"m": args.m, "k": args.k, "reverse_anchors": args.reverse_anchors}
    if args.filter:
        values.update(parse_filter(args.filter))
    ranked = enumerate_ranked(**values)

    if args.count:
        emit(str(len(ranked)), config.output)
    else:
        emit(json.dumps([to_schema(g).model_dump() for _, g in ranked], separators=(",", ":")), config.output)
    return 0
