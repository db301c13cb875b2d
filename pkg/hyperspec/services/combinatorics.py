"""
Exact independence and matching numbers, degree sequences
"""
import logging
from typing import List, Optional, Sequence

from pydantic import ValidationError

from hyperspec.core.config import settings
from hyperspec.exceptions import CombinatoricsError, InfeasibleSequenceError, InstanceTooLargeError
from hyperspec.schemas import DegreeSequence, IndependenceResult, MatchingResult
from hyperspec.services.hypergraph_service import (
    GraphLike,
    as_hypergraph,
    pendent_edges,
    pendent_vertices,
    require_supertree,
)

logger = logging.getLogger(__name__)

DEGREE_ORDER_MARGIN = 1e-8


def _bits(mask: int) -> List[int]:
    items = []
    while mask:
        low = mask & -mask
        items.append(low.bit_length() - 1)
        mask ^= low
    return items


class ConflictSearch:
    """Maximum independent set in a conflict structure given by bitmasks.

    ``conflicts[i]`` holds every item clashing with i (i included) and
    ``cliques[i]`` lists pairwise-clashing groups containing i; the clique
    cover of the remaining items bounds how many of them can still be taken.
    Branching takes the lowest remaining item first, so the first optimum
    found is the lexicographically smallest one.
    """

    def __init__(self, size: int, conflicts: Sequence[int], cliques: Sequence[Sequence[int]],
                 requirements: Sequence[int] = ()):
        self.size = size
        self.conflicts = list(conflicts)
        self.cliques = [list(group) for group in cliques]
        self.requirements = list(requirements)
        self.best: Optional[List[int]] = None
        self.nodes = 0

    def _cover_bound(self, mask: int) -> int:
        bound = 0
        while mask:
            low = (mask & -mask).bit_length() - 1
            widest = max(self.cliques[low], key=lambda group: bin(group & mask).count("1"))
            mask &= ~(widest | (1 << low))
            bound += 1
        return bound

    def _requirements_open(self, chosen: int, mask: int) -> bool:
        return all(chosen & need or mask & need for need in self.requirements)

    def _search(self, mask: int, chosen: int, count: int) -> None:
        self.nodes += 1
        if self.requirements and not self._requirements_open(chosen, mask):
            return
        if self.best is not None and count + self._cover_bound(mask) <= len(self.best):
            return
        if mask == 0:
            if all(chosen & need for need in self.requirements):
                self.best = _bits(chosen)
            return

        low = (mask & -mask).bit_length() - 1
        self._search(mask & ~self.conflicts[low], chosen | (1 << low), count + 1)
        self._search(mask & ~(1 << low), chosen, count)

    def solve(self) -> List[int]:
        self._search((1 << self.size) - 1, 0, 0)
        logger.debug(f"conflict search over {self.size} items visited {self.nodes} nodes")
        return self.best if self.best is not None else []


def _vertex_search(g, requirements: Sequence[int] = ()) -> ConflictSearch:
    edge_masks = [sum(1 << v for v in edge) for edge in g.edges]
    conflicts = [1 << v for v in range(g.n)]
    cliques: List[List[int]] = [[1 << v] for v in range(g.n)]
    for mask, edge in zip(edge_masks, g.edges):
        for v in edge:
            conflicts[v] |= mask
            cliques[v].append(mask)
    return ConflictSearch(g.n, conflicts, cliques, requirements)


def independence_number(graph: GraphLike) -> IndependenceResult:
    """Exact beta(G) with the lexicographically smallest maximum witness."""
    g = as_hypergraph(graph)
    if g.n > settings.MIS_MAX_VERTICES:
        raise InstanceTooLargeError(f"independence search limited to {settings.MIS_MAX_VERTICES} vertices, got {g.n}")
    witness = _vertex_search(g).solve()
    return IndependenceResult(beta=len(witness), witness=witness)


def matching_number(graph: GraphLike) -> MatchingResult:
    """Exact mu(G) with the lexicographically smallest maximum edge-index witness."""
    g = as_hypergraph(graph)
    if g.m > settings.MATCHING_MAX_EDGES:
        raise InstanceTooLargeError(f"matching search limited to {settings.MATCHING_MAX_EDGES} edges, got {g.m}")

    stars = [sum(1 << index for index in g.incidence[v]) for v in range(g.n)]
    conflicts = [1 << index for index in range(g.m)]
    cliques: List[List[int]] = [[1 << index] for index in range(g.m)]
    for index, edge in enumerate(g.edges):
        for v in edge:
            conflicts[index] |= stars[v]
            cliques[index].append(stars[v])
    witness = ConflictSearch(g.m, conflicts, cliques).solve()
    return MatchingResult(mu=len(witness), witness=witness)


def pendant_friendly_mis(graph: GraphLike) -> IndependenceResult:
    """A maximum independent set holding a pendent vertex of every pendent edge."""
    certificate = require_supertree(graph)
    g = certificate.host
    if g.n > settings.MIS_MAX_VERTICES:
        raise InstanceTooLargeError(f"independence search limited to {settings.MIS_MAX_VERTICES} vertices, got {g.n}")

    requirements = [sum(1 << v for v in pendent_vertices(g, index)) for index in pendent_edges(g)]
    witness = _vertex_search(g, requirements).solve()
    beta = independence_number(g).beta
    if len(witness) != beta:
        logger.warning(f"pendant-covering independent set has size {len(witness)} < beta={beta} on {g!r}")
    return IndependenceResult(beta=len(witness), witness=witness)


def is_independent(graph: GraphLike, vertices: Sequence[int]) -> bool:
    g = as_hypergraph(graph)
    chosen = set(vertices)
    return all(len(chosen.intersection(edge)) <= 1 for edge in g.edges)


# ============================================================================
# DEGREE SEQUENCES
# ============================================================================

def degree_sequence(graph: GraphLike) -> DegreeSequence:
    g = as_hypergraph(graph)
    if g.m == 0:
        raise CombinatoricsError("the edgeless graph has no degree sequence")
    return DegreeSequence(k=g.k, entries=sorted(g.degrees, reverse=True))


def validate_degree_sequence(entries: Sequence[int], k: int) -> DegreeSequence:
    """Check that pi is the degree sequence of some k-uniform supertree."""
    try:
        pi = DegreeSequence(k=k, entries=list(entries))
    except ValidationError as e:
        raise InfeasibleSequenceError(f"invalid degree sequence {list(entries)}: {e.errors()[0]['msg']}") from e
    if not pi.is_supertree_feasible():
        raise InfeasibleSequenceError(
            f"degree sequence of length {pi.n} needs length m(k-1)+1 = {pi.m * (k - 1) + 1}"
        )
    return pi


def check_degree_perron_ordering(graph: GraphLike, x: Sequence[float], margin: float = DEGREE_ORDER_MARGIN) -> bool:
    """True when d(u) > d(v) always implies x_u > x_v + margin."""
    g = as_hypergraph(graph)
    levels = {}
    for v, d in enumerate(g.degrees):
        low, high = levels.get(d, (float("inf"), float("-inf")))
        levels[d] = (min(low, x[v]), max(high, x[v]))

    ceiling = float("-inf")
    for d in sorted(levels):
        low, high = levels[d]
        if low <= ceiling + margin:
            return False
        ceiling = max(ceiling, high)
    return True
