"""
Monotonicity checks for the rewriting operations on random supertrees
"""
import logging
from typing import List, Optional, Sequence

import numpy as np

from hyperspec.exceptions import InvalidHypergraphError, TransformError
from hyperspec.models import Hypergraph
from hyperspec.schemas import EdgeMove, LemmaCheck, PerronResult, SolverOptions, TwoSwitchSpec
from hyperspec.services.hypergraph_service import GraphLike, as_hypergraph, build, is_connected, is_pendent_edge
from hyperspec.services.spectral import alpha_spectral_radius
from hyperspec.services.transforms import edge_release, move_edges, two_switch

logger = logging.getLogger(__name__)

# Perron entries closer than this are treated as tied when sampling premises.
PREMISE_CLEARANCE = 1e-6


def random_supertree(m: int, k: int, rng: np.random.Generator) -> Hypergraph:
    """Grow a supertree by hanging each new edge on a uniformly chosen vertex."""
    edges = [list(range(k))]
    n = k
    for _ in range(m - 1):
        anchor = int(rng.integers(n))
        edges.append([anchor] + list(range(n, n + k - 1)))
        n += k - 1
    return build(k, n, edges)


def _solve(g: GraphLike, alpha: float, opts: SolverOptions, known: Optional[PerronResult]) -> PerronResult:
    return known if known is not None else alpha_spectral_radius(g, alpha, opts).require_converged()


def _verdict(lemma: str, alpha: float, before: PerronResult, after: PerronResult, hypothesis: bool,
             strict: bool, opts: SolverOptions) -> LemmaCheck:
    gap = after.rho - before.rho
    margin = 10 * opts.tolerance
    if not hypothesis:
        holds = True
    elif strict:
        holds = gap > margin
    else:
        holds = gap >= -margin
    check = LemmaCheck(lemma=lemma, alpha=alpha, rho_before=before.rho, rho_after=after.rho, gap=gap,
                       hypothesis=hypothesis, strict_expected=strict, holds=holds)
    if not holds:
        logger.warning(f"{lemma} check failed at alpha={alpha}: rho {before.rho!r} -> {after.rho!r}")
    return check


def _product(x: Sequence[float], vertices) -> float:
    return float(np.prod([x[v] for v in vertices]))


def check_move_lemma(graph: GraphLike, spec: EdgeMove, alpha: float, opts: Optional[SolverOptions] = None,
                     before: Optional[PerronResult] = None) -> LemmaCheck:
    """Moving edges onto a vertex with the largest Perron entry strictly raises rho_alpha."""
    opts = opts or SolverOptions()
    before = _solve(graph, alpha, opts, before)
    moved = move_edges(graph, spec)
    x = before.vector
    hypothesis = x[spec.target] >= max(x[pivot] for _, pivot in spec.relocations)
    after = alpha_spectral_radius(moved, alpha, opts).require_converged()
    return _verdict("move", alpha, before, after, hypothesis, True, opts)


def check_release_lemma(graph: GraphLike, index: int, u: int, alpha: float,
                        opts: Optional[SolverOptions] = None,
                        before: Optional[PerronResult] = None) -> LemmaCheck:
    """Releasing a non-pendent edge strictly raises rho_alpha."""
    opts = opts or SolverOptions()
    before = _solve(graph, alpha, opts, before)
    released = edge_release(graph, index, u)
    after = alpha_spectral_radius(released, alpha, opts).require_converged()
    return _verdict("release", alpha, before, after, True, True, opts)


def check_switch_lemma(graph: GraphLike, spec: TwoSwitchSpec, alpha: float,
                       opts: Optional[SolverOptions] = None,
                       before: Optional[PerronResult] = None) -> LemmaCheck:
    """With x_U1 >= x_V1 and x_U2 <= x_V2 a 2-switch never lowers rho_alpha.

    Equality holds only when x_U1 = x_V1, so strict growth is expected once
    x_U1 exceeds x_V1 by more than PREMISE_CLEARANCE.
    """
    opts = opts or SolverOptions()
    g = as_hypergraph(graph)
    before = _solve(g, alpha, opts, before)
    switched = two_switch(g, spec)

    x = before.vector
    u_rest = set(g.edges[spec.edge_e]) - set(spec.u_set)
    v_rest = set(g.edges[spec.edge_f]) - set(spec.v_set)
    x_u1, x_v1 = _product(x, spec.u_set), _product(x, spec.v_set)
    x_u2, x_v2 = _product(x, u_rest), _product(x, v_rest)
    hypothesis = x_u1 >= x_v1 and x_u2 <= x_v2
    strict = hypothesis and x_u1 > x_v1 + PREMISE_CLEARANCE

    after = alpha_spectral_radius(switched, alpha, opts).require_converged()
    return _verdict("switch", alpha, before, after, hypothesis, strict, opts)


# ============================================================================
# RANDOM SUITE
# ============================================================================

class LemmaSampler:
    """Draws hypothesis-satisfying operations on random supertrees."""

    def __init__(self, rng: np.random.Generator, opts: SolverOptions):
        self.rng = rng
        self.opts = opts

    def _pick(self, items: Sequence, size: int) -> List:
        chosen = self.rng.choice(len(items), size=size, replace=False)
        return [items[int(i)] for i in chosen]

    def move(self, g: Hypergraph, alpha: float, before: PerronResult) -> Optional[LemmaCheck]:
        x = before.vector
        u = int(self.rng.integers(g.n))
        candidates = [index for index, edge in enumerate(g.edges) if u not in edge]
        if not candidates:
            return None
        r = int(self.rng.integers(1, min(2, len(candidates)) + 1))
        relocations = []
        for index in self._pick(candidates, r):
            # A degree-one pivot would be stranded by the move.
            pivots = [v for v in g.edges[index] if g.degrees[v] >= 2 and x[v] <= x[u] - PREMISE_CLEARANCE]
            if not pivots:
                return None
            relocations.append((index, self._pick(pivots, 1)[0]))
        spec = EdgeMove(target=u, relocations=relocations)
        try:
            moved = move_edges(g, spec)
        except (TransformError, InvalidHypergraphError):
            return None
        if not is_connected(moved):
            return None
        return check_move_lemma(g, spec, alpha, self.opts, before)

    def release(self, g: Hypergraph, alpha: float, before: PerronResult) -> Optional[LemmaCheck]:
        inner = [index for index in range(g.m) if not is_pendent_edge(g, index)]
        if not inner:
            return None
        index = self._pick(inner, 1)[0]
        u = self._pick(list(g.edges[index]), 1)[0]
        return check_release_lemma(g, index, u, alpha, self.opts, before)

    def switch(self, g: Hypergraph, alpha: float, before: PerronResult) -> Optional[LemmaCheck]:
        if g.m < 2:
            return None
        e, f = self._pick(list(range(g.m)), 2)
        r = int(self.rng.integers(1, g.k))
        spec = TwoSwitchSpec(e=e, f=f, U1=self._pick(list(g.edges[e]), r), V1=self._pick(list(g.edges[f]), r))
        x = before.vector
        u_rest = set(g.edges[e]) - set(spec.u_set)
        v_rest = set(g.edges[f]) - set(spec.v_set)
        if _product(x, spec.u_set) < _product(x, spec.v_set) + PREMISE_CLEARANCE:
            return None
        if _product(x, u_rest) > _product(x, v_rest) - PREMISE_CLEARANCE:
            return None
        try:
            switched = two_switch(g, spec)
        except TransformError:
            return None
        if not is_connected(switched):
            return None
        return check_switch_lemma(g, spec, alpha, self.opts, before)


def run_lemma_suite(samples: int = 200, seed: int = 0, k_values: Sequence[int] = (3, 4), max_m: int = 6,
                    alphas: Sequence[float] = (0.0, 0.25, 0.5, 0.75),
                    opts: Optional[SolverOptions] = None) -> List[LemmaCheck]:
    """Collect ``samples`` checks, cycling through move, release and switch."""
    opts = opts or SolverOptions()
    rng = np.random.default_rng(seed)
    sampler = LemmaSampler(rng, opts)
    draws = [sampler.move, sampler.release, sampler.switch]

    checks: List[LemmaCheck] = []
    attempts = 0
    while len(checks) < samples and attempts < 100 * samples:
        attempts += 1
        k = int(rng.choice(k_values))
        m = int(rng.integers(2, max_m + 1))
        alpha = float(rng.choice(alphas))
        g = random_supertree(m, k, rng)
        before = alpha_spectral_radius(g, alpha, opts).require_converged()
        check = draws[len(checks) % len(draws)](g, alpha, before)
        if check is not None:
            checks.append(check)

    logger.info(f"lemma suite: {len(checks)} checks from {attempts} draws, "
                f"{sum(1 for c in checks if not c.holds)} failures")
    return checks
