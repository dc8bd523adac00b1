"""
Exception hierarchy for affine_simplex_families.

Every error raised on purpose by the library derives from AffineSimplexError,
so callers (the CLI in particular) can separate data problems from bugs.
"""


class AffineSimplexError(Exception):
    """Base class for all library errors."""


class RankDeficient(AffineSimplexError, ValueError):
    """A matrix has lower rank than the operation requires."""


class NoKernel(AffineSimplexError, ValueError):
    """A matrix has full column rank, so there is no dependency to return."""


class UnsupportedType(AffineSimplexError, ValueError):
    """A group label is malformed or outside the supported range."""


class ZeroMirror(AffineSimplexError, ValueError):
    """Reflection requested in the zero vector."""


class DimensionMismatch(AffineSimplexError, ValueError):
    """Vectors from different ambient spaces or scale conventions were combined."""


class NonCrystallographicAngle(AffineSimplexError, ValueError):
    """The angle between two vectors is not pi*m/k with k in {2, 3, 4, 6}."""


class UnknownType(AffineSimplexError):
    """A closed root subsystem matched no crystallographic type."""


class NotBCModel(AffineSimplexError, ValueError):
    """A family is not expressed in the B_n vector model."""


class NotSimplyLaced(AffineSimplexError, ValueError):
    """The binary p-code needs a family with one root length and k in {2, 3}."""


class NotF4(AffineSimplexError, ValueError):
    """The base-3 p-code needs a five-vector family over F4."""


class NotSeriesModel(AffineSimplexError, ValueError):
    """The Gamma graph needs a family over the A, B/C or D coordinate model."""


class BudgetExceeded(AffineSimplexError):
    """A closure computation did not reach its fixpoint within the budget."""


class UnboundedCell(AffineSimplexError):
    """The arrangement cell around the seed is not a bounded simplex."""


class NoSpecialVertex(AffineSimplexError):
    """No vertex of the simplex has facet normals generating the full finite group."""


class RecordFormatError(AffineSimplexError, ValueError):
    """A family record or simplex file line could not be parsed."""


class CheckpointError(AffineSimplexError):
    """A checkpoint file exists but does not match the requested run."""
