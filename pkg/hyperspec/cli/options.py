"""
Flags and helpers shared by the subcommands
"""
import argparse
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from hyperspec.exceptions import FormatError
from hyperspec.schemas import CliConfig
from hyperspec.services.spectral import check_alpha


def int_list(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError as e:
        raise FormatError(f"expected comma-separated integers, got {text!r}") from e


def float_list(text: str) -> List[float]:
    try:
        return [float(token) for token in text.split(",") if token.strip()]
    except ValueError as e:
        raise FormatError(f"expected comma-separated numbers, got {text!r}") from e


def add_solver_options(parser: argparse.ArgumentParser, default_alpha: str = "0") -> None:
    parser.add_argument("--alpha", default=default_alpha, help="alpha value(s) in [0, 1), comma separated")
    parser.add_argument("--tol", type=float, default=None, help="bracket-width tolerance")
    parser.add_argument("--max-iter", type=int, default=None, help="power-iteration cap")
    parser.add_argument("--shift", type=float, default=None,
                        help="diagonal shift (default 1 when alpha = 0, else 0; use 1 for k = 2 near alpha = 0)")


def add_output_options(parser: argparse.ArgumentParser, formats=("json", "text")) -> None:
    parser.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    parser.add_argument("--format", choices=formats, default=formats[0])


def cli_config(args: argparse.Namespace) -> CliConfig:
    """Validate the shared flags into a CliConfig."""
    values = {"command": args.command, "format": getattr(args, "format", "json")}
    if hasattr(args, "alpha"):
        values["alpha"] = [check_alpha(a) for a in float_list(args.alpha)]
    if getattr(args, "tol", None) is not None:
        values["tolerance"] = args.tol
    if getattr(args, "max_iter", None) is not None:
        values["max_iterations"] = args.max_iter
    if getattr(args, "shift", None) is not None:
        values["shift"] = args.shift
    if getattr(args, "output", None) is not None:
        values["output"] = args.output
    try:
        return CliConfig(**values)
    except ValidationError as e:
        raise FormatError(f"invalid option: {e.errors()[0]['msg']}") from e


def emit(text: str, output: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output is None:
        print(text, end="")
    else:
        Path(output).write_text(text, encoding="utf-8")
