"""CLI router configuration"""
import argparse
import logging
import sys
from typing import List, Optional

from hyperspec.cli.commands import construct, enumerate as enumerate_cmd, rho, transform, verify
from hyperspec.core.config import settings
from hyperspec.core.logging import setup_logging
from hyperspec.exceptions import FormatError, HyperspecError

logger = logging.getLogger(__name__)

COMMANDS = {
    "rho": rho,
    "construct": construct,
    "transform": transform,
    "enumerate": enumerate_cmd,
    "verify": verify,
}


class CliParser(argparse.ArgumentParser):
    """argparse with usage errors raised as FormatError (exit 1) instead of SystemExit(2)."""

    def error(self, message):
        raise FormatError(message)


def build_parser() -> CliParser:
    parser = CliParser(prog=settings.APP_NAME, description="Alpha-spectral radius toolkit for uniform supertrees")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    # Include all command modules
    for name, module in COMMANDS.items():
        module.register(subparsers.add_parser(name, help=module.HELP))
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        setup_logging(verbose=args.verbose)
        logger.debug(f"running {args.command} with {vars(args)}")
        return COMMANDS[args.command].run(args)
    except HyperspecError as e:
        print(f"{e.error_name}: {e}", file=sys.stderr)
        return e.exit_code


def main_exit() -> None:
    sys.exit(main())
