"""
Canonical forms and isomorphism testing for uniform hypergraphs.

Both paths work on the vertex-edge incidence graph (nodes 0..n-1 are
vertices, n..n+m-1 are edges).  Supertrees have a tree as incidence graph
and get an exact rooted encoding around its center; every other hypergraph
goes through colour refinement plus individualization backtracking.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from hyperspec.models import CanonicalForm, Hypergraph
from hyperspec.services.hypergraph_service import GraphLike, as_hypergraph, is_connected

logger = logging.getLogger(__name__)

TREE_TAG = b"T"
GENERAL_TAG = b"G"


def _incidence_adjacency(g: Hypergraph) -> List[List[int]]:
    adjacency: List[List[int]] = [[] for _ in range(g.n + g.m)]
    for index, edge in enumerate(g.edges):
        node = g.n + index
        for v in edge:
            adjacency[v].append(node)
            adjacency[node].append(v)
    return adjacency


def _is_supertree_shape(g: Hypergraph) -> bool:
    return g.n == g.m * (g.k - 1) + 1 and is_connected(g)


# ============================================================================
# SUPERTREE PATH
# ============================================================================

def _tree_center(adjacency: List[List[int]]) -> int:
    """Unique center of the incidence tree (its leaves are all vertices, so the diameter is even)."""
    size = len(adjacency)
    remaining = [len(neighbours) for neighbours in adjacency]
    layer = [node for node in range(size) if remaining[node] <= 1]
    left = size
    while left > 1:
        left -= len(layer)
        following = []
        for node in layer:
            remaining[node] = 0
            for nb in adjacency[node]:
                if remaining[nb] > 0:
                    remaining[nb] -= 1
                    if remaining[nb] == 1:
                        following.append(nb)
        if left <= 0:
            return layer[0]
        layer = following
    return layer[0]


def _rooted_codes(adjacency: List[List[int]], n: int, root: int) -> Dict[int, bytes]:
    # Iterative post-order to stay clear of the recursion limit.
    parent = {root: -1}
    stack = [root]
    order = []
    while stack:
        node = stack.pop()
        order.append(node)
        for nb in adjacency[node]:
            if nb != parent[node]:
                parent[nb] = node
                stack.append(nb)

    codes: Dict[int, bytes] = {}
    for node in reversed(order):
        children = sorted(codes[c] for c in adjacency[node] if c != parent[node])
        tag = b"v" if node < n else b"e"
        codes[node] = tag + b"(" + b"".join(children) + b")"
    return codes


def _tree_form(g: Hypergraph) -> bytes:
    adjacency = _incidence_adjacency(g)
    center = _tree_center(adjacency)
    header = f"{g.k}:{g.n}:{g.m}:".encode()
    return TREE_TAG + header + _rooted_codes(adjacency, g.n, center)[center]


# ============================================================================
# GENERAL PATH
# ============================================================================

def _refine(adjacency: List[List[int]], colours: Sequence[int]) -> List[int]:
    """Colour refinement; new colours are ranks of (colour, neighbour multiset) signatures."""
    current = list(colours)
    while True:
        signatures = [
            (current[node], tuple(sorted(current[nb] for nb in adjacency[node])))
            for node in range(len(adjacency))
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(set(refined)) == len(set(current)):
            return refined
        current = refined


def _encode_discrete(g: Hypergraph, colours: Sequence[int]) -> Tuple:
    ranked = sorted(range(g.n), key=lambda v: colours[v])
    label = {v: position for position, v in enumerate(ranked)}
    return tuple(sorted(tuple(sorted(label[v] for v in edge)) for edge in g.edges))


def _search(g: Hypergraph, adjacency: List[List[int]], colours: List[int], best: List[Optional[Tuple]]) -> None:
    cells: Dict[int, List[int]] = {}
    for node in range(g.n):
        cells.setdefault(colours[node], []).append(node)
    target = None
    for colour in sorted(cells):
        if len(cells[colour]) > 1:
            target = cells[colour]
            break
    if target is None:
        code = _encode_discrete(g, colours)
        if best[0] is None or code < best[0]:
            best[0] = code
        return

    for node in target:
        # Individualize: the chosen node sorts ahead of its former cell-mates.
        individualized = [2 * c + (0 if c != colours[node] or other == node else 1)
                          for other, c in enumerate(colours)]
        _search(g, adjacency, _refine(adjacency, individualized), best)


def _general_form(g: Hypergraph) -> bytes:
    adjacency = _incidence_adjacency(g)
    initial = [(0 if node < g.n else 1, len(adjacency[node])) for node in range(g.n + g.m)]
    ranking = {key: rank for rank, key in enumerate(sorted(set(initial)))}
    colours = _refine(adjacency, [ranking[key] for key in initial])
    best: List[Optional[Tuple]] = [None]
    _search(g, adjacency, colours, best)
    header = f"{g.k}:{g.n}:{g.m}:".encode()
    return GENERAL_TAG + header + repr(best[0]).encode()


# ============================================================================
# PUBLIC API
# ============================================================================

def canonical_form(graph: GraphLike) -> CanonicalForm:
    g = as_hypergraph(graph)
    if _is_supertree_shape(g):
        return CanonicalForm(_tree_form(g))
    return CanonicalForm(_general_form(g))


def are_isomorphic(first: GraphLike, second: GraphLike) -> bool:
    a, b = as_hypergraph(first), as_hypergraph(second)
    if (a.k, a.n, a.m) != (b.k, b.n, b.m) or sorted(a.degrees) != sorted(b.degrees):
        return False
    return canonical_form(a) == canonical_form(b)


def rooted_subtree_codes(graph: GraphLike, root: int) -> Dict[int, bytes]:
    """Codes of the subtrees hanging below each vertex when a supertree is rooted at ``root``.

    Two vertices with equal codes are exchangeable by an automorphism that
    fixes everything outside their subtrees.
    """
    g = as_hypergraph(graph)
    codes = _rooted_codes(_incidence_adjacency(g), g.n, root)
    return {v: codes[v] for v in range(g.n)}
