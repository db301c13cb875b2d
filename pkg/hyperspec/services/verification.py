"""
Exhaustive desk-scale verification of the extremal supertree statements.

Each verifier enumerates one parameter class, solves rho_alpha for every
member, and compares the champion with the family the statement predicts.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from hyperspec.core.config import settings
from hyperspec.exceptions import EmptyClassError
from hyperspec.models import CanonicalForm, Hypergraph, SupertreeCertificate
from hyperspec.schemas import ExtremalReport, PerronResult, RankedGraph, SolverOptions
from hyperspec.services.canonical import canonical_form
from hyperspec.services.combinatorics import check_degree_perron_ordering, validate_degree_sequence
from hyperspec.services.constructions import (
    beta_range,
    bfs_supertree,
    h_supertree,
    hyperstar,
    mu_range,
    t_supertree,
)
from hyperspec.services.enumeration import Ranked, check_guard, enumerate_ranked
from hyperspec.services.spectral import alpha_spectral_radius, check_alpha
from hyperspec.utils.formats import to_schema
from hyperspec.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

Solved = Tuple[CanonicalForm, Hypergraph, PerronResult]


def _solve(ranked: Sequence[Ranked], alpha: float, opts: SolverOptions) -> List[Solved]:
    def run(item: Ranked) -> Solved:
        form, g = item
        return form, g, alpha_spectral_radius(g, alpha, opts).require_converged()

    return ordered_map(run, ranked)


def _ranked_graph(form: CanonicalForm, g: Hypergraph, rho: float) -> RankedGraph:
    return RankedGraph(canonical=form.hex(), rho=rho, graph=to_schema(g))


def _report(theorem: str, m: int, k: int, param, alpha: float, ranked: Sequence[Ranked],
            predicted: SupertreeCertificate, opts: SolverOptions, margin: float) -> ExtremalReport:
    solved = _solve(ranked, alpha, opts)
    # Highest rho first; equal values fall back to canonical order.
    solved.sort(key=lambda item: (-item[2].rho, item[0]))
    champion, runner_up = solved[0], solved[1] if len(solved) > 1 else None

    predicted_form = canonical_form(predicted)
    match = next((item for item in solved if item[0] == predicted_form), None)
    if match is None:
        match = (predicted_form, predicted.host, alpha_spectral_radius(predicted, alpha, opts).require_converged())

    gap = champion[2].rho - runner_up[2].rho if runner_up is not None else None
    isomorphic = champion[0] == predicted_form
    unique = isomorphic and (gap is None or gap > margin)
    ambiguous = gap is not None and gap <= margin

    degree_order = None
    if theorem == "degree_sequence":
        degree_order = check_degree_perron_ordering(champion[1], champion[2].vector)

    report = ExtremalReport(
        theorem=theorem,
        m=m,
        k=k,
        param=param,
        alpha=alpha,
        class_size=len(solved),
        champion=_ranked_graph(champion[0], champion[1], champion[2].rho),
        runner_up=_ranked_graph(*runner_up[:2], runner_up[2].rho) if runner_up is not None else None,
        predicted=_ranked_graph(match[0], match[1], match[2].rho),
        gap=gap,
        unique=unique,
        ambiguous=ambiguous,
        margin=margin,
        degree_order_respected=degree_order,
    )

    if ambiguous:
        logger.warning(f"{theorem} m={m} k={k} param={report.param_label()} alpha={alpha}: "
                       f"gap {gap!r} lies inside the margin {margin!r}")
    if unique:
        logger.info(f"{theorem} m={m} k={k} param={report.param_label()} alpha={alpha}: "
                    f"prediction confirmed over {len(solved)} candidates")
    else:
        logger.warning(f"{theorem} m={m} k={k} param={report.param_label()} alpha={alpha}: "
                       f"champion rho={champion[2].rho!r} is not the predicted supertree")
    return report


def _settings(alpha: float, opts: Optional[SolverOptions], margin: Optional[float]):
    return check_alpha(alpha), opts or SolverOptions(), settings.STRICTNESS_MARGIN if margin is None else margin


def verify_independence_extremal(m: int, k: int, beta: int, alpha: float,
                                 opts: Optional[SolverOptions] = None,
                                 margin: Optional[float] = None) -> ExtremalReport:
    """T_{m,k,beta} maximizes rho_alpha among supertrees with independence number beta."""
    alpha, opts, margin = _settings(alpha, opts, margin)
    check_guard(m, k)
    low, high = beta_range(m, k)
    if not low <= beta <= high:
        raise EmptyClassError(f"no supertree with m={m}, k={k} has beta={beta}; feasible range is [{low}, {high}]")
    ranked = enumerate_ranked(m=m, k=k, beta=beta)
    if not ranked:
        raise EmptyClassError(f"no supertree with m={m}, k={k} has beta={beta}")
    return _report("independence", m, k, beta, alpha, ranked, t_supertree(m=m, k=k, beta=beta), opts, margin)


def verify_degree_sequence_extremal(k: int, pi: Sequence[int], alpha: float,
                                    opts: Optional[SolverOptions] = None,
                                    margin: Optional[float] = None) -> ExtremalReport:
    """G_pi maximizes rho_alpha among supertrees with degree sequence pi."""
    alpha, opts, margin = _settings(alpha, opts, margin)
    sequence = validate_degree_sequence(pi, k)
    check_guard(sequence.m, k)
    ranked = enumerate_ranked(m=sequence.m, k=k, degree_sequence=sequence.entries)
    if not ranked:
        raise EmptyClassError(f"no supertree realizes the degree sequence {sequence.entries}")
    return _report("degree_sequence", sequence.m, k, sequence.entries, alpha, ranked,
                   bfs_supertree(k, sequence), opts, margin)


def verify_matching_extremal(m: int, k: int, mu: int, alpha: float,
                             opts: Optional[SolverOptions] = None,
                             margin: Optional[float] = None) -> ExtremalReport:
    """H_{m,k,mu} maximizes rho_alpha among supertrees with matching number mu."""
    alpha, opts, margin = _settings(alpha, opts, margin)
    check_guard(m, k)
    low, high = mu_range(m, k)
    if not low <= mu <= high:
        raise EmptyClassError(f"no supertree with m={m}, k={k} has mu={mu}; feasible range is [{low}, {high}]")
    ranked = enumerate_ranked(m=m, k=k, mu=mu)
    if not ranked:
        raise EmptyClassError(f"no supertree with m={m}, k={k} has mu={mu}")
    return _report("matching", m, k, mu, alpha, ranked, h_supertree(m=m, k=k, mu=mu), opts, margin)


def verify_hyperstar_extremal(m: int, k: int, alpha: float,
                              opts: Optional[SolverOptions] = None,
                              margin: Optional[float] = None) -> ExtremalReport:
    """S_{m,k} maximizes rho_alpha among all supertrees with m edges."""
    alpha, opts, margin = _settings(alpha, opts, margin)
    check_guard(m, k)
    return _report("supertree", m, k, None, alpha, enumerate_ranked(m=m, k=k), hyperstar(m, k), opts, margin)


def realized_degree_sequences(m: int, k: int) -> List[List[int]]:
    """Distinct degree sequences of the supertrees with m edges, largest first."""
    found = {tuple(sorted(g.degrees, reverse=True)) for _, g in enumerate_ranked(m=m, k=k)}
    return [list(pi) for pi in sorted(found, reverse=True)]


def sweep(alpha_grid: Iterable[float], scales: Iterable[Tuple[int, int]],
          opts: Optional[SolverOptions] = None, margin: Optional[float] = None) -> List[ExtremalReport]:
    """Run the independence, degree-sequence and matching verifiers over every feasible parameter."""
    alphas = [check_alpha(a) for a in alpha_grid]
    scales = list(scales)
    for m, k in scales:
        check_guard(m, k)

    reports: List[ExtremalReport] = []
    for m, k in scales:
        low_beta, high_beta = beta_range(m, k)
        low_mu, high_mu = mu_range(m, k)
        sequences = realized_degree_sequences(m, k)
        for alpha in alphas:
            for beta in range(low_beta, high_beta + 1):
                reports.append(verify_independence_extremal(m, k, beta, alpha, opts, margin))
            for pi in sequences:
                reports.append(verify_degree_sequence_extremal(k, pi, alpha, opts, margin))
            for mu in range(low_mu, high_mu + 1):
                reports.append(verify_matching_extremal(m, k, mu, alpha, opts, margin))

    failures = sum(1 for report in reports if not report.unique)
    logger.info(f"sweep produced {len(reports)} reports, {failures} not unique")
    return reports
