"""
Exhaustive generation of k-uniform supertrees up to isomorphism
"""
import logging
from functools import lru_cache
from typing import List, Optional, Tuple

from pydantic import ValidationError

from hyperspec.core.config import settings
from hyperspec.exceptions import EnumerationError, InstanceTooLargeError
from hyperspec.models import CanonicalForm, Hypergraph, SupertreeCertificate
from hyperspec.schemas import EnumerationQuery
from hyperspec.services.canonical import canonical_form
from hyperspec.services.combinatorics import independence_number, matching_number
from hyperspec.services.hypergraph_service import build, validate_supertree

logger = logging.getLogger(__name__)

Ranked = Tuple[CanonicalForm, Hypergraph]


def check_guard(m: int, k: int) -> int:
    """Reject scales whose vertex count m(k-1)+1 exceeds HYPERSPEC_GUARD."""
    n = m * (k - 1) + 1
    if n > settings.HYPERSPEC_GUARD:
        raise InstanceTooLargeError(
            f"m={m}, k={k} gives n={n} vertices, above the guard HYPERSPEC_GUARD={settings.HYPERSPEC_GUARD}"
        )
    return n


def _children(g: Hypergraph, reverse: bool) -> List[Hypergraph]:
    """Every supertree obtained by hanging one pendent edge on a vertex of g."""
    fresh = list(range(g.n, g.n + g.k - 1))
    anchors = range(g.n - 1, -1, -1) if reverse else range(g.n)
    return [build(g.k, g.n + g.k - 1, list(g.edges) + [[anchor] + fresh]) for anchor in anchors]


@lru_cache(maxsize=None)
def _classes(m: int, k: int, reverse: bool) -> Tuple[Ranked, ...]:
    level = {}
    seed = build(k, k, [list(range(k))])
    level[canonical_form(seed)] = seed

    for size in range(2, m + 1):
        grown = {}
        for parent in level.values():
            for child in _children(parent, reverse):
                grown.setdefault(canonical_form(child), child)
        level = grown
        logger.info(f"k={k}: {len(level)} supertree classes with {size} edges")
    return tuple(sorted(level.items()))


def _query(query: Optional[EnumerationQuery], values) -> EnumerationQuery:
    if query is not None:
        return query
    try:
        return EnumerationQuery(**values)
    except ValidationError as e:
        raise EnumerationError(f"invalid enumeration query {values}: {e.errors()[0]['msg']}") from e


def _matches(g: Hypergraph, query: EnumerationQuery) -> bool:
    if query.beta is not None:
        return independence_number(g).beta == query.beta
    if query.mu is not None:
        return matching_number(g).mu == query.mu
    if query.degree_sequence is not None:
        return sorted(g.degrees, reverse=True) == list(query.degree_sequence)
    return True


def enumerate_ranked(query: Optional[EnumerationQuery] = None, **values) -> List[Ranked]:
    """(canonical form, graph) for one representative per class, sorted by canonical form."""
    q = _query(query, values)
    check_guard(q.m, q.k)
    ranked = [(form, g) for form, g in _classes(q.m, q.k, q.reverse_anchors) if _matches(g, q)]
    logger.debug(f"enumeration m={q.m}, k={q.k} kept {len(ranked)} classes after filtering")
    return ranked


def enumerate_supertrees(query: Optional[EnumerationQuery] = None, **values) -> List[SupertreeCertificate]:
    return [validate_supertree(g) for _, g in enumerate_ranked(query, **values)]


def count_supertrees(m: int, k: int) -> int:
    return len(enumerate_ranked(m=m, k=k))
