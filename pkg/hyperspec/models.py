"""
Domain models for uniform hypergraphs
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Tuple

import numpy as np

Edge = Tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """Immutable k-uniform hypergraph over dense vertex ids 0..n-1.

    Instances are normalized by ``hypergraph_service.build``: every edge is a
    strictly increasing k-tuple and the edge tuple is sorted.
    """

    k: int
    n: int
    edges: Tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        counts = [0] * self.n
        for edge in self.edges:
            for v in edge:
                counts[v] += 1
        return tuple(counts)

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """Edge indices containing each vertex."""
        incident: List[List[int]] = [[] for _ in range(self.n)]
        for index, edge in enumerate(self.edges):
            for v in edge:
                incident[v].append(index)
        return tuple(tuple(items) for items in incident)

    @cached_property
    def edge_array(self) -> np.ndarray:
        array = np.array(self.edges, dtype=np.int64).reshape(self.m, self.k)
        array.setflags(write=False)
        return array

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def __repr__(self):
        return f"<Hypergraph(k={self.k}, n={self.n}, m={self.m})>"


@dataclass(frozen=True)
class SupertreeCertificate:
    """A hypergraph that passed ``validate_supertree``."""

    host: Hypergraph
    verified: bool = True

    @property
    def k(self) -> int:
        return self.host.k

    @property
    def n(self) -> int:
        return self.host.n

    @property
    def m(self) -> int:
        return self.host.m

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self.host.edges

    def __repr__(self):
        return f"<SupertreeCertificate(k={self.k}, n={self.n}, m={self.m})>"


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Byte encoding equal for two hypergraphs iff they are isomorphic."""

    code: bytes = field(compare=True)

    def hex(self) -> str:
        return self.code.hex()

    def __repr__(self):
        return f"<CanonicalForm({self.code[:24]!r}...)>"
