"""Exception types shared across the package.

Every error raised deliberately by this package derives from Error, so
callers (and the CLI) can distinguish contract violations from bugs.
"""


class Error(Exception):
    """Base class for all hfl errors."""


class NonPrimeError(Error):
    """The characteristic passed to a field constructor is not prime."""


class DegreeOutOfRangeError(Error):
    """Field degree outside the supported range, or field too large."""


class FieldNotSquareOrderError(Error):
    """A relative (q-power) operation was requested on GF(p^k) with k odd."""


class TargetNotInSubfieldError(Error):
    """Trace/norm fiber requested for a value outside the base subfield."""


class UnsupportedQError(Error):
    """Curve parameter q outside the supported set."""


class IdenticalLinesError(Error):
    """A quotient of a line by itself has no divisor."""


class EmptyGeneratorSetError(Error):
    """A lattice needs at least one generating vector."""


class DimensionMismatchError(Error):
    """Vector length does not match the ambient dimension."""


class NotFullRankError(Error):
    """Operation requires a full-rank sublattice of A_{n-1}."""


class BudgetExceededError(Error):
    """An enumeration would exceed the configured work cap."""


class SearchInfeasibleError(Error):
    """A search space is too large for the implemented strategies."""


class GroupTooLargeError(Error):
    """Abelian group order exceeds the brute-force automorphism cap."""


class NotMinimalPairError(Error):
    """The two lines do not form a minimal-vector quotient pair."""


class NotOnCurveError(Error):
    """Point parameters do not satisfy the curve equation."""


class ZeroScalarError(Error):
    """Scaling automorphisms need a nonzero field element."""


class OrderBudgetExceededError(Error):
    """Group closure grew past the configured order cap."""


class InternalIdentityViolationError(Error):
    """A decomposition failed its own exact sum check; this is a defect."""
