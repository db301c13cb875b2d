"""
Exception hierarchy for hyperspec.

Every error carries the CLI exit code it maps to:
1 parse or range error, 2 invalid graph or parameters,
3 solver non-convergence, 4 falsified verification.
"""


class HyperspecError(Exception):
    exit_code = 2

    @property
    def error_name(self) -> str:
        name = type(self).__name__
        return name[: -len("Error")] if name.endswith("Error") else name


class FormatError(HyperspecError):
    exit_code = 1


# ============================================================================
# HYPERGRAPH CORE
# ============================================================================

class InvalidHypergraphError(HyperspecError):
    pass


class EdgeWrongSizeError(InvalidHypergraphError):
    pass


class DuplicateVertexInEdgeError(InvalidHypergraphError):
    pass


class VertexOutOfRangeError(InvalidHypergraphError):
    pass


class DuplicateEdgeError(InvalidHypergraphError):
    pass


class IsolatedVertexError(InvalidHypergraphError):
    pass


class SupertreeError(HyperspecError):
    pass


class NotConnectedError(SupertreeError):
    pass


class HasCycleError(SupertreeError):
    pass


class NotSupertreeError(SupertreeError):
    pass


# ============================================================================
# SPECTRAL
# ============================================================================

class SpectralError(HyperspecError):
    pass


class InvalidAlphaError(SpectralError):
    exit_code = 1


class NonPositiveVectorError(SpectralError):
    pass


class DimensionMismatchError(SpectralError):
    pass


class NotUnitVectorError(SpectralError):
    pass


class MaxIterationsExceededError(SpectralError):
    exit_code = 3


# ============================================================================
# TRANSFORMS
# ============================================================================

class TransformError(HyperspecError):
    pass


class InvalidEdgeIndexError(TransformError):
    pass


class TargetInsideEdgeError(TransformError):
    pass


class PivotNotInEdgeError(TransformError):
    pass


class ResultHasDuplicateEdgeError(TransformError):
    pass


class PendentEdgeError(TransformError):
    pass


class VertexNotInEdgeError(TransformError):
    pass


class NoAdjacentEdgesError(TransformError):
    pass


class InvalidSwitchError(TransformError):
    pass


class ResultEdgeExistsError(TransformError):
    pass


class OverlapViolationError(TransformError):
    pass


# ============================================================================
# COMBINATORICS / CONSTRUCTIONS / ENUMERATION / VERIFICATION
# ============================================================================

class InstanceTooLargeError(HyperspecError):
    pass


class CombinatoricsError(HyperspecError):
    pass


class NotAPermutationError(CombinatoricsError):
    pass


class ConstructionError(HyperspecError):
    pass


class BadParamsError(ConstructionError):
    pass


class BetaOutOfRangeError(ConstructionError):
    pass


class MuOutOfRangeError(ConstructionError):
    pass


class InfeasibleSequenceError(ConstructionError):
    pass


class EnumerationError(HyperspecError):
    pass


class VerificationError(HyperspecError):
    pass


class EmptyClassError(VerificationError):
    pass


class FalsifiedError(VerificationError):
    exit_code = 4
