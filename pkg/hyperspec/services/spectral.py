"""
Matrix-free A_alpha operator and the Perron power iteration
"""
import itertools
import logging
import math
from typing import Callable, Optional, Sequence

import numpy as np

from hyperspec.core.config import settings
from hyperspec.exceptions import (
    DimensionMismatchError,
    InstanceTooLargeError,
    InvalidAlphaError,
    NonPositiveVectorError,
    NotConnectedError,
    NotUnitVectorError,
)
from hyperspec.models import Hypergraph
from hyperspec.schemas import PerronResult, SolverOptions
from hyperspec.services.hypergraph_service import GraphLike, as_hypergraph, is_connected

logger = logging.getLogger(__name__)

UNIT_TOLERANCE = 1e-10
DENSE_MAX_ENTRIES = 10 ** 6

Operator = Callable[[np.ndarray], np.ndarray]


def check_alpha(alpha: float) -> float:
    if not 0.0 <= alpha < 1.0:
        raise InvalidAlphaError(f"alpha must satisfy 0 <= alpha < 1, got {alpha}")
    return float(alpha)


def _as_positive_vector(g: Hypergraph, x) -> np.ndarray:
    vector = np.asarray(x, dtype=np.float64)
    if vector.shape != (g.n,):
        raise DimensionMismatchError(f"vector has shape {vector.shape}, expected ({g.n},)")
    if not np.all(vector > 0):
        raise NonPositiveVectorError("every vector entry must be strictly positive")
    return vector


def _adjacency_sums(g: Hypergraph, x: np.ndarray) -> np.ndarray:
    """Entry v: sum over edges e containing v of the product of x over e minus v."""
    if g.m == 0:
        return np.zeros(g.n)
    values = x[g.edge_array]
    # Leave-one-out products from prefix and suffix products, no division.
    prefix = np.ones_like(values)
    prefix[:, 1:] = np.cumprod(values[:, :-1], axis=1)
    suffix = np.ones_like(values)
    suffix[:, :-1] = np.cumprod(values[:, :0:-1], axis=1)[:, ::-1]
    others = (prefix * suffix).ravel()
    owners = g.edge_array.ravel()

    if g.m * g.k > settings.COMPENSATED_SUM_THRESHOLD:
        order = np.argsort(owners, kind="stable")
        splits = np.cumsum(g.degrees)[:-1]
        return np.array([math.fsum(chunk) for chunk in np.split(others[order], splits)])
    return np.bincount(owners, weights=others, minlength=g.n)


def apply_a_alpha(graph: GraphLike, alpha: float, x) -> np.ndarray:
    """(A_alpha x)_v = alpha d(v) x_v^(k-1) + (1 - alpha) sum_{e ∋ v} x_{e minus v}."""
    g = as_hypergraph(graph)
    alpha = check_alpha(alpha)
    vector = _as_positive_vector(g, x)
    degrees = np.asarray(g.degrees, dtype=np.float64)
    return alpha * degrees * vector ** (g.k - 1) + (1.0 - alpha) * _adjacency_sums(g, vector)


def rayleigh(graph: GraphLike, alpha: float, x) -> float:
    g = as_hypergraph(graph)
    alpha = check_alpha(alpha)
    vector = _as_positive_vector(g, x)
    norm = float(np.sum(vector ** g.k))
    if abs(norm - 1.0) > UNIT_TOLERANCE:
        raise NotUnitVectorError(f"sum of x_v^k is {norm!r}, expected 1")
    if g.m == 0:
        return 0.0
    powers = vector ** g.k
    diagonal = math.fsum(powers[list(edge)].sum() for edge in g.edges)
    products = math.fsum(np.prod(vector[g.edge_array], axis=1))
    return alpha * diagonal + (1.0 - alpha) * g.k * products


def residual(graph: GraphLike, alpha: float, rho: float, x) -> float:
    g = as_hypergraph(graph)
    vector = _as_positive_vector(g, x)
    image = apply_a_alpha(g, alpha, vector)
    return float(np.max(np.abs(image - rho * vector ** (g.k - 1))))


def _unit(x: np.ndarray, k: int) -> np.ndarray:
    return x / np.sum(x ** k) ** (1.0 / k)


def _power_iterate(operator: Operator, n: int, k: int, alpha: float, opts: SolverOptions,
                   start: Optional[np.ndarray] = None) -> PerronResult:
    """Shifted power iteration x -> (A x + s x^[k-1])^[1/(k-1)] with a Collatz-Wielandt bracket.

    Starts from the uniform unit vector unless ``start`` is given.
    """
    shift = opts.effective_shift(alpha)
    x = np.full(n, n ** (-1.0 / k)) if start is None else _unit(start, k)
    lo = hi = 0.0

    for iteration in range(1, opts.max_iterations + 1):
        x_power = x ** (k - 1)
        y = operator(x) + shift * x_power
        ratios = y / x_power
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi - lo <= opts.tolerance:
            rho = 0.5 * (lo + hi) - shift
            gap = float(np.max(np.abs(y - shift * x_power - rho * x_power)))
            logger.info(f"power iteration converged: rho={rho!r} after {iteration} iterations")
            return PerronResult(rho=rho, vector=x.tolist(), residual=gap, iterations=iteration, converged=True)
        x = _unit(y ** (1.0 / (k - 1)), k)

    x_power = x ** (k - 1)
    rho = 0.5 * (lo + hi) - shift
    gap = float(np.max(np.abs(operator(x) - rho * x_power)))
    logger.warning(
        f"power iteration did not converge in {opts.max_iterations} iterations "
        f"(bracket [{lo - shift!r}, {hi - shift!r}])"
    )
    return PerronResult(rho=rho, vector=x.tolist(), residual=gap, iterations=opts.max_iterations, converged=False)


def alpha_spectral_radius(graph: GraphLike, alpha: float, opts: Optional[SolverOptions] = None,
                          start: Optional[Sequence[float]] = None) -> PerronResult:
    """Compute rho_alpha(G) and the alpha-Perron vector of a connected hypergraph.

    ``start`` is an optional strictly positive initial vector; it is rescaled
    to the unit sphere sum x_v^k = 1 before the first step.
    """
    g = as_hypergraph(graph)
    alpha = check_alpha(alpha)
    opts = opts or SolverOptions()
    initial = None if start is None else _as_positive_vector(g, start)
    if not is_connected(g):
        raise NotConnectedError(f"{g!r} is not connected; rho_alpha needs a connected hypergraph")
    if g.m == 0:
        return PerronResult(rho=0.0, vector=[1.0], residual=0.0, iterations=0, converged=True)

    degrees = np.asarray(g.degrees, dtype=np.float64)

    def operator(x: np.ndarray) -> np.ndarray:
        return alpha * degrees * x ** (g.k - 1) + (1.0 - alpha) * _adjacency_sums(g, x)

    return _power_iterate(operator, g.n, g.k, alpha, opts, initial)


# ============================================================================
# DENSE REFERENCE ORACLE
# ============================================================================

def dense_a_alpha(graph: GraphLike, alpha: float) -> np.ndarray:
    """Materialize A_alpha as an order-k, n-dimensional symmetric tensor."""
    g = as_hypergraph(graph)
    alpha = check_alpha(alpha)
    if g.n ** g.k > DENSE_MAX_ENTRIES:
        raise InstanceTooLargeError(f"dense tensor needs n^k = {g.n ** g.k} entries (limit {DENSE_MAX_ENTRIES})")

    tensor = np.zeros((g.n,) * g.k)
    weight = (1.0 - alpha) / math.factorial(g.k - 1)
    for edge in g.edges:
        for index in itertools.permutations(edge):
            tensor[index] += weight
    for v, d in enumerate(g.degrees):
        tensor[(v,) * g.k] += alpha * d
    return tensor


def contract(tensor: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Contract every mode but the first with x."""
    result = tensor
    while result.ndim > 1:
        result = np.tensordot(result, x, axes=([result.ndim - 1], [0]))
    return result


def dense_power_method(graph: GraphLike, alpha: float, opts: Optional[SolverOptions] = None) -> PerronResult:
    g = as_hypergraph(graph)
    alpha = check_alpha(alpha)
    opts = opts or SolverOptions()
    if g.m == 0:
        return PerronResult(rho=0.0, vector=[1.0], residual=0.0, iterations=0, converged=True)
    tensor = dense_a_alpha(g, alpha)
    return _power_iterate(lambda x: contract(tensor, x), g.n, g.k, alpha, opts)
