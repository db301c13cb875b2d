"""
Supertree rewriting operations: edge moving, edge releasing and 2-switching.

Edges are addressed by index into the sorted edge list of the input graph.
Results are rebuilt through ``build`` and therefore re-sorted, so indices do
not carry over from one operation to the next.
"""
import logging
from typing import List, Sequence, Tuple

from hyperspec.exceptions import (
    InvalidSwitchError,
    NoAdjacentEdgesError,
    OverlapViolationError,
    PendentEdgeError,
    PivotNotInEdgeError,
    ResultEdgeExistsError,
    ResultHasDuplicateEdgeError,
    TargetInsideEdgeError,
    VertexNotInEdgeError,
)
from hyperspec.models import Hypergraph
from hyperspec.schemas import EdgeMove, TwoSwitchSpec
from hyperspec.services.hypergraph_service import (
    GraphLike,
    as_hypergraph,
    build,
    check_edge_index,
    check_vertex,
    is_pendent_edge,
    require_supertree,
)

logger = logging.getLogger(__name__)


def move_edges(graph: GraphLike, spec: EdgeMove) -> Hypergraph:
    """Replace every e_i by (e_i minus v_i) plus u.

    The vertex set is unchanged. A move that strands a vertex is rejected by
    ``build`` with IsolatedVertexError.
    """
    g = as_hypergraph(graph)
    u = spec.target
    check_vertex(g, u)

    replaced = {}
    for index, pivot in spec.relocations:
        check_edge_index(g, index)
        edge = g.edges[index]
        if u in edge:
            raise TargetInsideEdgeError(f"target {u} already lies in edge {index} = {list(edge)}")
        if pivot not in edge:
            raise PivotNotInEdgeError(f"pivot {pivot} is not in edge {index} = {list(edge)}")
        replaced[index] = tuple(sorted((set(edge) - {pivot}) | {u}))

    result = [replaced.get(index, edge) for index, edge in enumerate(g.edges)]
    if len(set(result)) != len(result):
        raise ResultHasDuplicateEdgeError(f"moving edges to {u} produces a repeated edge")

    logger.debug(f"moved {len(replaced)} edge(s) of {g!r} to vertex {u}")
    return build(g.k, g.n, result)


def released_edges(graph: GraphLike, index: int, u: int) -> List[Tuple[int, int]]:
    """(edge index, shared vertex) for every edge meeting edge ``index`` away from u."""
    g = as_hypergraph(graph)
    edge = set(g.edges[index])
    moves = []
    for other, candidate in enumerate(g.edges):
        if other == index or u in candidate:
            continue
        shared = edge.intersection(candidate)
        if shared:
            moves.append((other, min(shared)))
    return moves


def edge_release(graph: GraphLike, index: int, u: int) -> Hypergraph:
    """Move every edge hanging off a non-pendent edge onto its vertex u."""
    certificate = require_supertree(graph)
    g = certificate.host
    check_edge_index(g, index)
    if is_pendent_edge(g, index):
        raise PendentEdgeError(f"edge {index} = {list(g.edges[index])} is pendent")
    if u not in g.edges[index]:
        raise VertexNotInEdgeError(f"vertex {u} is not in edge {index} = {list(g.edges[index])}")

    moves = released_edges(g, index, u)
    if not moves:
        raise NoAdjacentEdgesError(f"no edge meets edge {index} outside vertex {u}")
    return move_edges(g, EdgeMove(target=u, relocations=moves))


def best_release_vertex(graph: GraphLike, index: int, x: Sequence[float]) -> int:
    """Vertex of the edge with the largest Perron entry; ties go to the smaller id."""
    g = as_hypergraph(graph)
    check_edge_index(g, index)
    return max(g.edges[index], key=lambda v: (x[v], -v))


def two_switch(graph: GraphLike, spec: TwoSwitchSpec) -> Hypergraph:
    """Exchange U1 ⊆ e with V1 ⊆ f; every vertex degree is preserved."""
    g = as_hypergraph(graph)
    check_edge_index(g, spec.edge_e)
    check_edge_index(g, spec.edge_f)
    if spec.edge_e == spec.edge_f:
        raise InvalidSwitchError("e and f must be different edges")

    e, f = g.edges[spec.edge_e], g.edges[spec.edge_f]
    u_set, v_set = set(spec.u_set), set(spec.v_set)
    r = len(spec.u_set)
    if len(u_set) != r or len(v_set) != len(spec.v_set) or len(v_set) != r:
        raise InvalidSwitchError("U1 and V1 must be sets of the same size")
    if not 1 <= r < g.k:
        raise InvalidSwitchError(f"switch size r={r} must satisfy 1 <= r < k={g.k}")
    if not u_set.issubset(e):
        raise VertexNotInEdgeError(f"U1={sorted(u_set)} is not contained in e={list(e)}")
    if not v_set.issubset(f):
        raise VertexNotInEdgeError(f"V1={sorted(v_set)} is not contained in f={list(f)}")

    e_new = (set(e) - u_set) | v_set
    f_new = (set(f) - v_set) | u_set
    if len(e_new) < g.k or len(f_new) < g.k:
        raise OverlapViolationError("switched edges would repeat a vertex")

    e_new, f_new = tuple(sorted(e_new)), tuple(sorted(f_new))
    if e_new == f_new or e_new in g.edge_set or f_new in g.edge_set:
        raise ResultEdgeExistsError(f"switched edge {list(e_new)} or {list(f_new)} already exists")

    result = [edge for index, edge in enumerate(g.edges) if index not in (spec.edge_e, spec.edge_f)]
    return build(g.k, g.n, result + [e_new, f_new])
