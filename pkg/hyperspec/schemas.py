"""
Pydantic schemas for every serializable hyperspec record
"""
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from hyperspec.core.config import settings
from hyperspec.exceptions import MaxIterationsExceededError


# ============================================================================
# HYPERGRAPH SCHEMAS
# ============================================================================

class HypergraphSchema(BaseModel):
    """JSON normal form of a hypergraph: {"k": .., "n": .., "edges": [[..], ..]}"""
    k: int = Field(..., ge=2, description="Edge cardinality")
    n: int = Field(..., ge=1, description="Vertex count; ids are 0..n-1")
    edges: List[List[int]] = Field(default_factory=list, description="Edges as vertex-id lists")


# ============================================================================
# SPECTRAL SCHEMAS
# ============================================================================

class SolverOptions(BaseModel):
    """Power-iteration controls"""
    tolerance: float = Field(default_factory=lambda: settings.SOLVER_TOLERANCE, gt=0)
    max_iterations: int = Field(default_factory=lambda: settings.SOLVER_MAX_ITERATIONS, ge=1)
    # With k = 2 and alpha close to 0 a zero shift converges very slowly; pass shift=1 there.
    shift: Optional[float] = Field(None, ge=0, description="Diagonal shift; default 1 for alpha = 0, else 0")

    def effective_shift(self, alpha: float) -> float:
        if self.shift is not None:
            return self.shift
        return 1.0 if alpha == 0 else 0.0


class PerronResult(BaseModel):
    """Outcome of the Perron power iteration"""
    rho: float
    vector: List[float]
    residual: float
    iterations: int
    converged: bool

    def require_converged(self) -> "PerronResult":
        if not self.converged:
            raise MaxIterationsExceededError(
                f"power iteration stopped after {self.iterations} iterations "
                f"(residual {self.residual:.3e})"
            )
        return self


# ============================================================================
# TRANSFORM SCHEMAS
# ============================================================================

class EdgeMove(BaseModel):
    """Move edges e_i from v_i to the target vertex u"""
    target: int = Field(..., ge=0)
    relocations: List[Tuple[int, int]] = Field(..., min_length=1, description="(edge index, pivot vertex) pairs")

    @field_validator("relocations")
    @classmethod
    def distinct_edges(cls, value):
        indices = [edge for edge, _ in value]
        if len(set(indices)) != len(indices):
            raise ValueError("edge indices in relocations must be distinct")
        return value


class TwoSwitchSpec(BaseModel):
    """Swap U1 ⊆ e with V1 ⊆ f"""
    model_config = ConfigDict(populate_by_name=True)

    edge_e: int = Field(..., ge=0, alias="e")
    edge_f: int = Field(..., ge=0, alias="f")
    u_set: List[int] = Field(..., min_length=1, alias="U1")
    v_set: List[int] = Field(..., min_length=1, alias="V1")


class LemmaCheck(BaseModel):
    """One monotonicity check of a rewriting operation"""
    lemma: Literal["move", "release", "switch"]
    alpha: float
    rho_before: float
    rho_after: float
    gap: float
    hypothesis: bool = Field(True, description="Whether the Perron-entry premise held on the input")
    strict_expected: bool
    holds: bool


# ============================================================================
# COMBINATORICS SCHEMAS
# ============================================================================

class IndependenceResult(BaseModel):
    beta: int
    witness: List[int]


class MatchingResult(BaseModel):
    mu: int
    witness: List[int]


class DegreeSequence(BaseModel):
    """Non-increasing degree multiset of a k-uniform hypergraph"""
    k: int = Field(..., ge=2)
    entries: List[int] = Field(..., min_length=1)

    @field_validator("entries")
    @classmethod
    def non_increasing_positive(cls, value):
        if any(d < 1 for d in value):
            raise ValueError("degrees must be positive")
        if any(a < b for a, b in zip(value, value[1:])):
            raise ValueError("degree sequence must be non-increasing")
        return value

    @model_validator(mode="after")
    def divisible_sum(self):
        if sum(self.entries) % self.k:
            raise ValueError(f"degree sum {sum(self.entries)} is not divisible by k={self.k}")
        return self

    @property
    def m(self) -> int:
        return sum(self.entries) // self.k

    @property
    def n(self) -> int:
        return len(self.entries)

    def is_supertree_feasible(self) -> bool:
        return self.n == self.m * (self.k - 1) + 1


class BfsLayout(BaseModel):
    """A vertex order with its heights and the BFS-ordering verdict"""
    order: List[int]
    root: int
    heights: List[int]
    holds: bool
    violation: Optional[Literal["i", "ii", "iii", "iv"]] = None
    detail: Optional[str] = None


class LayerRecord(BaseModel):
    layer: int
    edges_in: int = Field(..., description="c_a: edges rooted into this layer")
    vertex_count: int = Field(..., description="y_a")
    degree_sum: int = Field(..., description="z_a")


class LayerPlan(BaseModel):
    """Layer bookkeeping of the BFS-supertree construction"""
    k: int
    layers: List[LayerRecord]
    labels: Dict[int, Tuple[int, int, int]] = Field(..., description="vertex -> (a, i, j); root is (0, 1, 1)")
    edges: List[List[int]]


# ============================================================================
# CONSTRUCTION / ENUMERATION SCHEMAS
# ============================================================================

class FamilyParams(BaseModel):
    m: int = Field(..., ge=1)
    k: int = Field(..., ge=2)
    beta: Optional[int] = None
    mu: Optional[int] = None


class EnumerationQuery(BaseModel):
    m: int = Field(..., ge=1)
    k: int = Field(..., ge=2)
    beta: Optional[int] = None
    mu: Optional[int] = None
    degree_sequence: Optional[List[int]] = None
    reverse_anchors: bool = False

    @model_validator(mode="after")
    def single_filter(self):
        chosen = [f for f in (self.beta, self.mu, self.degree_sequence) if f is not None]
        if len(chosen) > 1:
            raise ValueError("at most one of beta, mu, degree_sequence may be given")
        return self

    @property
    def n(self) -> int:
        return self.m * (self.k - 1) + 1


# ============================================================================
# VERIFICATION SCHEMAS
# ============================================================================

class RankedGraph(BaseModel):
    canonical: str = Field(..., description="Hex canonical form")
    rho: float
    graph: HypergraphSchema


class ExtremalReport(BaseModel):
    """Verification record of one extremal statement at one parameter setting"""
    theorem: Literal["independence", "degree_sequence", "matching", "supertree"]
    m: int
    k: int
    param: Optional[Union[int, List[int]]] = None
    alpha: float
    class_size: int = Field(..., ge=1)
    champion: RankedGraph
    runner_up: Optional[RankedGraph] = None
    predicted: RankedGraph
    gap: Optional[float] = None
    unique: bool
    ambiguous: bool = False
    margin: float
    degree_order_respected: Optional[bool] = None

    def param_label(self) -> str:
        if isinstance(self.param, list):
            return "(" + ",".join(str(d) for d in self.param) + ")"
        return "" if self.param is None else str(self.param)


# ============================================================================
# CLI SCHEMAS
# ============================================================================

class CliConfig(BaseModel):
    """Validated global flags shared by the subcommands"""
    command: str
    alpha: List[float] = Field(default_factory=lambda: [0.0])
    tolerance: float = Field(default_factory=lambda: settings.SOLVER_TOLERANCE, gt=0)
    max_iterations: int = Field(default_factory=lambda: settings.SOLVER_MAX_ITERATIONS, ge=1)
    shift: Optional[float] = Field(None, ge=0)
    output: Optional[str] = None
    format: Literal["json", "csv", "text"] = "json"

    @field_validator("alpha")
    @classmethod
    def alpha_in_range(cls, value):
        for a in value:
            if not 0.0 <= a < 1.0:
                raise ValueError(f"alpha must satisfy 0 <= alpha < 1, got {a}")
        return value

    def solver_options(self) -> SolverOptions:
        return SolverOptions(tolerance=self.tolerance, max_iterations=self.max_iterations, shift=self.shift)
