"""
BFS-orderings of supertrees: recognition and backtracking search
"""
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from hyperspec.core.config import settings
from hyperspec.exceptions import InstanceTooLargeError, NotAPermutationError
from hyperspec.models import Hypergraph
from hyperspec.schemas import BfsLayout
from hyperspec.services.canonical import rooted_subtree_codes
from hyperspec.services.hypergraph_service import GraphLike, heights, require_supertree

logger = logging.getLogger(__name__)


def _parents(g: Hypergraph, h: Sequence[int]) -> Dict[int, int]:
    """Every non-root vertex mapped to the lowest vertex of the edge joining it to the layer above."""
    parent = {}
    for edge in g.edges:
        anchor = min(edge, key=lambda v: h[v])
        for v in edge:
            if v != anchor:
                parent[v] = anchor
    return parent


def check_bfs_ordering(graph: GraphLike, order: Sequence[int]) -> BfsLayout:
    """Evaluate the four BFS-ordering conditions and report the first one violated.

    (i) heights never decrease, (ii) degrees never increase, (iii) parents of
    consecutive non-root vertices keep their relative order, (iv) the
    non-anchor vertices of every edge are consecutive.
    """
    certificate = require_supertree(graph)
    g = certificate.host
    order = [int(v) for v in order]
    if sorted(order) != list(range(g.n)):
        raise NotAPermutationError(f"order {order} is not a permutation of 0..{g.n - 1}")

    root = order[0]
    h = heights(g, root)
    position = {v: i for i, v in enumerate(order)}

    def verdict(violation=None, detail=None) -> BfsLayout:
        return BfsLayout(order=order, root=root, heights=h, holds=violation is None,
                         violation=violation, detail=detail)

    for a, b in zip(order, order[1:]):
        if h[a] > h[b]:
            return verdict("i", f"vertex {a} at height {h[a]} precedes vertex {b} at height {h[b]}")
    for a, b in zip(order, order[1:]):
        if g.degrees[a] < g.degrees[b]:
            return verdict("ii", f"vertex {a} of degree {g.degrees[a]} precedes vertex {b} of degree {g.degrees[b]}")

    parent = _parents(g, h)
    rest = order[1:]
    for a, b in zip(rest, rest[1:]):
        if position[parent[a]] > position[parent[b]]:
            return verdict("iii", f"parent {parent[a]} of {a} comes after parent {parent[b]} of {b}")

    for edge in g.edges:
        placed = sorted(position[v] for v in edge)
        if placed[-1] - placed[1] != g.k - 2:
            return verdict("iv", f"edge {list(edge)} has its non-anchor vertices split by another vertex")
    return verdict()


# ============================================================================
# SEARCH
# ============================================================================

Block = Tuple[int, ...]


def _distinct(items: List, key) -> Iterator[Tuple[object, List]]:
    """Yield (item, remaining) once per distinct key, in first-seen order."""
    seen = set()
    for i, item in enumerate(items):
        marker = key(item)
        if marker in seen:
            continue
        seen.add(marker)
        yield item, items[:i] + items[i + 1:]


class BfsOrderSearch:
    """Queue-driven backtracking: each vertex in turn appends its child edges as blocks."""

    def __init__(self, g: Hypergraph, root: int):
        self.g = g
        self.root = root
        self.h = heights(g, root)
        self.codes = rooted_subtree_codes(g, root)
        self.children: Dict[int, List[Block]] = {v: [] for v in range(g.n)}
        for edge in g.edges:
            anchor = min(edge, key=lambda v: self.h[v])
            self.children[anchor].append(tuple(v for v in edge if v != anchor))

    def _signature(self, v: int) -> Tuple[int, bytes]:
        return (-self.g.degrees[v], self.codes[v])

    def _block_key(self, block: Block) -> Tuple:
        return tuple(sorted(self._signature(v) for v in block))

    def _arrangements(self, pending: List[int], ceiling: int) -> Iterator[List[int]]:
        """Degree non-increasing orders of one block, one per signature sequence."""
        if not pending:
            yield []
            return
        for v, rest in _distinct(pending, self._signature):
            if self.g.degrees[v] > ceiling:
                continue
            for tail in self._arrangements(rest, self.g.degrees[v]):
                yield [v] + tail

    def _layouts(self, blocks: List[Block], ceiling: int) -> Iterator[List[int]]:
        if not blocks:
            yield []
            return
        for block, rest in _distinct(blocks, self._block_key):
            for head in self._arrangements(list(block), ceiling):
                for tail in self._layouts(rest, self.g.degrees[head[-1]]):
                    yield head + tail

    def _extend(self, order: List[int], cursor: int) -> Optional[List[int]]:
        if cursor == len(order):
            return order if len(order) == self.g.n else None
        vertex = order[cursor]
        ceiling = self.g.degrees[order[-1]]
        for layout in self._layouts(self.children[vertex], ceiling):
            found = self._extend(order + layout, cursor + 1)
            if found is not None:
                return found
        return None

    def run(self) -> Optional[List[int]]:
        return self._extend([self.root], 0)


def find_bfs_ordering(graph: GraphLike) -> Optional[BfsLayout]:
    """Return a BFS-ordering of the supertree, or None when it has none."""
    certificate = require_supertree(graph)
    g = certificate.host
    if g.n > settings.HYPERSPEC_GUARD:
        raise InstanceTooLargeError(f"BFS-ordering search limited to {settings.HYPERSPEC_GUARD} vertices, got {g.n}")

    top = max(g.degrees)
    tried = set()
    for root in range(g.n):
        if g.degrees[root] != top:
            continue
        shape = rooted_subtree_codes(g, root)[root]
        if shape in tried:
            continue
        tried.add(shape)
        order = BfsOrderSearch(g, root).run()
        if order is not None:
            logger.debug(f"BFS-ordering of {g!r} found from root {root}")
            return check_bfs_ordering(certificate, order)
    logger.debug(f"{g!r} has no BFS-ordering")
    return None
