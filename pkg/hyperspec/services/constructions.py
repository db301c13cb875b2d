"""
Builders for the named supertree families: hyperstars, the independence
extremal T-family, the matching extremal H-family and BFS-supertrees.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from hyperspec.exceptions import BadParamsError, BetaOutOfRangeError, InfeasibleSequenceError, MuOutOfRangeError
from hyperspec.models import SupertreeCertificate
from hyperspec.schemas import DegreeSequence, FamilyParams, LayerPlan, LayerRecord
from hyperspec.services.combinatorics import validate_degree_sequence
from hyperspec.services.hypergraph_service import build, validate_supertree

logger = logging.getLogger(__name__)


def beta_range(m: int, k: int) -> Tuple[int, int]:
    """Feasible independence numbers of a k-uniform supertree with m edges."""
    return -(-(m * (k - 1) + 1) // k), m


def mu_range(m: int, k: int) -> Tuple[int, int]:
    return 1, (m * (k - 1) + 1) // k


def _check_shape(m: int, k: int) -> None:
    if m < 1 or k < 2:
        raise BadParamsError(f"need m >= 1 and k >= 2, got m={m}, k={k}")


class StarBuilder:
    """Grows a supertree from a hyperstar by hanging pendent edges on vertices."""

    def __init__(self, spokes: int, k: int):
        self.k = k
        self.edges: List[List[int]] = [
            [0] + [1 + i * (k - 1) + j for j in range(k - 1)] for i in range(spokes)
        ]
        self.next_vertex = spokes * (k - 1) + 1

    def hang(self, anchor: int) -> None:
        fresh = list(range(self.next_vertex, self.next_vertex + self.k - 1))
        self.edges.append([anchor] + fresh)
        self.next_vertex += self.k - 1

    def load(self, spoke: int, count: int) -> None:
        """Hang one pendent edge on each of the first ``count`` leaves of a spoke."""
        for leaf in self.edges[spoke][1:1 + count]:
            self.hang(leaf)

    def certify(self) -> SupertreeCertificate:
        return validate_supertree(build(self.k, self.next_vertex, self.edges))


def hyperstar(m: int, k: int) -> SupertreeCertificate:
    """S_{m,k}: vertex 0 lies in every edge."""
    _check_shape(m, k)
    return StarBuilder(m, k).certify()


def _params(params: Optional[FamilyParams], **values) -> FamilyParams:
    if params is not None:
        return params
    try:
        return FamilyParams(**values)
    except ValidationError as e:
        raise BadParamsError(f"invalid family parameters {values}: {e.errors()[0]['msg']}") from e


def t_supertree(params: Optional[FamilyParams] = None, **values) -> SupertreeCertificate:
    """T_{m,k,beta}: load m - beta spokes of S_{(k-1)beta-(k-2)m, k} on every leaf."""
    p = _params(params, **values)
    _check_shape(p.m, p.k)
    low, high = beta_range(p.m, p.k)
    if p.beta is None or not low <= p.beta <= high:
        raise BetaOutOfRangeError(f"beta={p.beta} outside [{low}, {high}] for m={p.m}, k={p.k}")

    builder = StarBuilder((p.k - 1) * p.beta - (p.k - 2) * p.m, p.k)
    for spoke in range(p.m - p.beta):
        builder.load(spoke, p.k - 1)
    return builder.certify()


def h_supertree(params: Optional[FamilyParams] = None, **values) -> SupertreeCertificate:
    """H_{m,k,mu}: S_{m-mu+1, k} with mu - 1 pendent edges packed onto the first spokes."""
    p = _params(params, **values)
    _check_shape(p.m, p.k)
    low, high = mu_range(p.m, p.k)
    if p.mu is None or not low <= p.mu <= high:
        raise MuOutOfRangeError(f"mu={p.mu} outside [{low}, {high}] for m={p.m}, k={p.k}")

    spokes = p.m - p.mu + 1
    full, remainder = divmod(p.mu - 1, p.k - 1)
    if full + (1 if remainder else 0) > spokes:
        raise MuOutOfRangeError(f"mu={p.mu} needs more spokes than S_{spokes},{p.k} has")

    builder = StarBuilder(spokes, p.k)
    for spoke in range(full):
        builder.load(spoke, p.k - 1)
    if remainder:
        builder.load(full, remainder)
    return builder.certify()


# ============================================================================
# BFS-SUPERTREES
# ============================================================================

def _layered(k: int, pi: DegreeSequence) -> Tuple[List[List[int]], List[int], Dict[int, Tuple[int, int, int]]]:
    """Queue construction: vertex v gets degree pi[v]; vertex ids follow construction order."""
    n = pi.n
    edges: List[List[int]] = []
    height = [0] * n
    labels: Dict[int, Tuple[int, int, int]] = {0: (0, 1, 1)}
    incoming: Dict[int, int] = {}
    next_vertex = 1

    for v in range(n):
        if v >= next_vertex:
            raise InfeasibleSequenceError(f"degree sequence {pi.entries} runs out of anchors at vertex {v}")
        wanted = pi.entries[v] if v == 0 else pi.entries[v] - 1
        for _ in range(wanted):
            if next_vertex + k - 1 > n:
                raise InfeasibleSequenceError(f"degree sequence {pi.entries} needs more than {n} vertices")
            layer = height[v] + 1
            incoming[layer] = incoming.get(layer, 0) + 1
            fresh = list(range(next_vertex, next_vertex + k - 1))
            for j, u in enumerate(fresh, start=1):
                height[u] = layer
                labels[u] = (layer, incoming[layer], j)
            edges.append([v] + fresh)
            next_vertex += k - 1

    if next_vertex != n:
        raise InfeasibleSequenceError(f"degree sequence {pi.entries} leaves {n - next_vertex} vertices unplaced")
    return edges, height, labels


def _sequence(k: int, pi: Union[DegreeSequence, Sequence[int]]) -> DegreeSequence:
    entries = pi.entries if isinstance(pi, DegreeSequence) else list(pi)
    return validate_degree_sequence(entries, k)


def bfs_layer_plan(k: int, pi: Union[DegreeSequence, Sequence[int]]) -> LayerPlan:
    """Per-layer bookkeeping (c_a, y_a, z_a) and the labels v_{a,i,j} of G_pi."""
    sequence = _sequence(k, pi)
    edges, height, labels = _layered(k, sequence)

    records = []
    for layer in range(max(height) + 1):
        members = [v for v in range(sequence.n) if height[v] == layer]
        records.append(LayerRecord(
            layer=layer,
            edges_in=sum(1 for edge in edges if height[edge[1]] == layer),
            vertex_count=len(members),
            degree_sum=sum(sequence.entries[v] for v in members),
        ))
    return LayerPlan(k=k, layers=records, labels=labels, edges=edges)


def bfs_supertree(k: int, pi: Union[DegreeSequence, Sequence[int]]) -> SupertreeCertificate:
    """G_pi; its construction order 0, 1, ..., n-1 is a BFS-ordering."""
    sequence = _sequence(k, pi)
    edges, _, _ = _layered(k, sequence)
    logger.debug(f"built G_pi for pi={sequence.entries} with {len(edges)} edges")
    return validate_supertree(build(k, sequence.n, edges))
