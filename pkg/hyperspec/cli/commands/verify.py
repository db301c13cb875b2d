"""verify: exhaustive checks of the extremal supertree statements"""
import argparse
import logging
from pathlib import Path
from typing import List, Tuple

from hyperspec.cli.options import add_solver_options, cli_config, emit, int_list
from hyperspec.exceptions import BadParamsError, FalsifiedError, FormatError
from hyperspec.schemas import ExtremalReport
from hyperspec.services.constructions import beta_range, mu_range
from hyperspec.services.enumeration import check_guard
from hyperspec.services import verification
from hyperspec.utils.reports import falsified, render_csv, render_json, write_reports

logger = logging.getLogger(__name__)

HELP = "verify extremal statements over enumerated supertree classes"

THEOREMS = ["independence", "degree-sequence", "matching", "sweep", "hyperstar"]


def register(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("theorem", choices=THEOREMS)
    parser.add_argument("--m", type=int, help="edge count")
    parser.add_argument("--k", type=int, default=3, help="edge size (default 3)")
    parser.add_argument("--beta", type=int, help="single independence number (default: every feasible one)")
    parser.add_argument("--mu", type=int, help="single matching number (default: every feasible one)")
    parser.add_argument("--pi", type=int_list, help="degree sequence (default: every realized one)")
    parser.add_argument("--scales", default=None, help="sweep scales as m:k pairs, e.g. 3:3,4:3,5:3")
    parser.add_argument("--margin", type=float, default=None, help="strictness margin for the spectral gap")
    parser.add_argument("--output-dir", default=None, help="write reports.json, reports.csv here")
    parser.add_argument("--format", choices=["json", "csv"], default="json", help="stdout format")
    add_solver_options(parser)


def parse_scales(text: str) -> List[Tuple[int, int]]:
    scales = []
    for token in text.split(","):
        if not token.strip():
            continue
        m, sep, k = token.partition(":")
        if not sep:
            raise FormatError(f"scale {token!r} must look like m:k")
        try:
            scales.append((int(m), int(k)))
        except ValueError as e:
            raise FormatError(f"scale {token!r} is not a pair of integers") from e
    return scales


def _reports(args: argparse.Namespace, alphas: List[float], opts) -> List[ExtremalReport]:
    margin = args.margin
    if args.theorem == "sweep":
        if args.scales is not None:
            scales = parse_scales(args.scales)
        elif args.m is not None:
            scales = [(args.m, args.k)]
        else:
            raise BadParamsError("sweep needs --scales or --m")
        return verification.sweep(alphas, scales, opts, margin)

    if args.theorem == "degree-sequence" and args.pi is not None:
        k = args.k
        return [verification.verify_degree_sequence_extremal(k, args.pi, a, opts, margin) for a in alphas]

    if args.m is None:
        raise BadParamsError(f"verify {args.theorem} needs --m")
    m, k = args.m, args.k
    check_guard(m, k)

    reports = []
    for alpha in alphas:
        if args.theorem == "independence":
            betas = [args.beta] if args.beta is not None else range(beta_range(m, k)[0], m + 1)
            reports += [verification.verify_independence_extremal(m, k, b, alpha, opts, margin) for b in betas]
        elif args.theorem == "matching":
            low, high = mu_range(m, k)
            mus = [args.mu] if args.mu is not None else range(low, high + 1)
            reports += [verification.verify_matching_extremal(m, k, u, alpha, opts, margin) for u in mus]
        elif args.theorem == "degree-sequence":
            reports += [verification.verify_degree_sequence_extremal(k, pi, alpha, opts, margin)
                        for pi in verification.realized_degree_sequences(m, k)]
        else:
            reports.append(verification.verify_hyperstar_extremal(m, k, alpha, opts, margin))
    return reports


def run(args: argparse.Namespace) -> int:
    config = cli_config(args)
    reports = _reports(args, config.alpha, config.solver_options())

    if args.output_dir is not None:
        directory = Path(args.output_dir)
        write_reports(reports, directory / "reports.json", directory / "reports.csv",
                      counterexample_path=directory / "counterexamples.json")
    emit(render_csv(reports) if config.format == "csv" else render_json(reports), None)

    bad = falsified(reports)
    if bad:
        first = bad[0]
        raise FalsifiedError(
            f"{len(bad)} of {len(reports)} rows not unique; first: {first.theorem} m={first.m} k={first.k} "
            f"param={first.param_label()} alpha={first.alpha}"
        )
    return 0
