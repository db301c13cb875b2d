"""
Hypergraph construction, validation and structural queries
"""
import logging
from typing import Iterable, List, Optional, Sequence, Union

import networkx as nx

from hyperspec.exceptions import (
    DuplicateEdgeError,
    DuplicateVertexInEdgeError,
    EdgeWrongSizeError,
    HasCycleError,
    InvalidEdgeIndexError,
    InvalidHypergraphError,
    IsolatedVertexError,
    NotConnectedError,
    NotSupertreeError,
    VertexOutOfRangeError,
)
from hyperspec.models import Hypergraph, SupertreeCertificate

logger = logging.getLogger(__name__)

GraphLike = Union[Hypergraph, SupertreeCertificate]


def as_hypergraph(graph: GraphLike) -> Hypergraph:
    return graph.host if isinstance(graph, SupertreeCertificate) else graph


def build(k: int, n: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validate and normalize an edge list into a Hypergraph."""
    if k < 2:
        raise InvalidHypergraphError(f"k must be at least 2, got {k}")
    if n < 1:
        raise InvalidHypergraphError(f"n must be at least 1, got {n}")

    normalized = []
    for raw in edges:
        edge = tuple(int(v) for v in raw)
        if len(edge) != k:
            raise EdgeWrongSizeError(f"edge {list(edge)} has {len(edge)} vertices, expected {k}")
        if len(set(edge)) != k:
            raise DuplicateVertexInEdgeError(f"edge {list(edge)} repeats a vertex")
        for v in edge:
            if not 0 <= v < n:
                raise VertexOutOfRangeError(f"vertex {v} of edge {list(edge)} is outside [0, {n})")
        normalized.append(tuple(sorted(edge)))

    normalized.sort()
    for first, second in zip(normalized, normalized[1:]):
        if first == second:
            raise DuplicateEdgeError(f"edge {list(first)} appears twice")

    if n > 1:
        covered = {v for edge in normalized for v in edge}
        if len(covered) != n:
            missing = min(set(range(n)) - covered)
            raise IsolatedVertexError(f"vertex {missing} lies in no edge")

    return Hypergraph(k=k, n=n, edges=tuple(normalized))


def single_vertex(k: int) -> Hypergraph:
    """The degenerate n = 1, m = 0 hypergraph."""
    return build(k, 1, [])


def check_vertex(graph: GraphLike, v: int) -> None:
    g = as_hypergraph(graph)
    if not 0 <= v < g.n:
        raise VertexOutOfRangeError(f"vertex {v} is outside [0, {g.n})")


def check_edge_index(graph: GraphLike, index: int) -> None:
    g = as_hypergraph(graph)
    if not 0 <= index < g.m:
        raise InvalidEdgeIndexError(f"edge index {index} is outside [0, {g.m})")


def degree(graph: GraphLike, v: int) -> int:
    check_vertex(graph, v)
    return as_hypergraph(graph).degrees[v]


def two_section(graph: GraphLike) -> nx.Graph:
    """Vertex-adjacency graph: u ~ v iff some edge contains both."""
    g = as_hypergraph(graph)
    section = nx.Graph()
    section.add_nodes_from(range(g.n))
    for edge in g.edges:
        for i, u in enumerate(edge):
            for v in edge[i + 1:]:
                section.add_edge(u, v)
    return section


def is_connected(graph: GraphLike) -> bool:
    return nx.is_connected(two_section(graph))


def distance(graph: GraphLike, u: int, v: int) -> Optional[int]:
    """Shortest path length between u and v, or None when unreachable."""
    check_vertex(graph, u)
    check_vertex(graph, v)
    try:
        return nx.shortest_path_length(two_section(graph), u, v)
    except nx.NetworkXNoPath:
        return None


def heights(graph: GraphLike, root: int) -> List[int]:
    check_vertex(graph, root)
    lengths = nx.single_source_shortest_path_length(two_section(graph), root)
    return [lengths.get(v, -1) for v in range(as_hypergraph(graph).n)]


def pendent_vertices(graph: GraphLike, index: int) -> List[int]:
    """Degree-one vertices of an edge."""
    g = as_hypergraph(graph)
    check_edge_index(g, index)
    return [v for v in g.edges[index] if g.degrees[v] == 1]


def is_pendent_edge(graph: GraphLike, index: int) -> bool:
    g = as_hypergraph(graph)
    check_edge_index(g, index)
    if g.m == 1:
        # The lone edge counts as pendent so every supertree has one.
        return True
    heavy = sum(1 for v in g.edges[index] if g.degrees[v] >= 2)
    return heavy == 1


def pendent_edges(graph: GraphLike) -> List[int]:
    g = as_hypergraph(graph)
    return [index for index in range(g.m) if is_pendent_edge(g, index)]


def validate_supertree(graph: GraphLike) -> SupertreeCertificate:
    """Certify that a hypergraph is connected and acyclic."""
    g = as_hypergraph(graph)
    if not is_connected(g):
        raise NotConnectedError(f"{g!r} is not connected")
    expected = g.m * (g.k - 1) + 1
    if g.n != expected:
        raise HasCycleError(f"{g!r} is connected with n={g.n} < m(k-1)+1={expected}")

    for i, first in enumerate(g.edges):
        for second in g.edges[i + 1:]:
            if len(set(first) & set(second)) > 1:
                raise HasCycleError(f"edges {list(first)} and {list(second)} share more than one vertex")
    return SupertreeCertificate(host=g, verified=True)


def require_supertree(graph: GraphLike) -> SupertreeCertificate:
    if isinstance(graph, SupertreeCertificate):
        return graph
    try:
        return validate_supertree(graph)
    except (NotConnectedError, HasCycleError) as e:
        raise NotSupertreeError(str(e)) from e


def relabel(graph: GraphLike, permutation: Sequence[int]) -> Hypergraph:
    """Apply the vertex map v -> permutation[v]."""
    g = as_hypergraph(graph)
    return build(g.k, g.n, [[permutation[v] for v in edge] for edge in g.edges])
