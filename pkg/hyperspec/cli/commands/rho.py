"""rho: alpha-spectral radius and Perron vector of a hypergraph"""
import argparse
import logging

from hyperspec.cli.options import add_output_options, add_solver_options, cli_config, emit
from hyperspec.exceptions import FormatError
from hyperspec.services.spectral import alpha_spectral_radius
from hyperspec.utils.formats import dump_json, load_hypergraph

logger = logging.getLogger(__name__)

HELP = "compute rho_alpha and the alpha-Perron vector"


def register(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", help="hypergraph file, inline JSON, or - for stdin")
    add_solver_options(parser)
    add_output_options(parser, formats=("json",))


def run(args: argparse.Namespace) -> int:
    config = cli_config(args)
    if len(config.alpha) != 1:
        raise FormatError("rho takes a single --alpha value")
    graph = load_hypergraph(args.input)
    result = alpha_spectral_radius(graph, config.alpha[0], config.solver_options())
    emit(dump_json(result.model_dump(), indent=None), config.output)
    # Non-convergence still prints the best bracket before failing.
    result.require_converged()
    return 0
