"""Exception types with stable machine-readable codes (used by the CLI)."""


class CovChanError(Exception):
    """Base class for all library errors."""

    code = "ERROR"


class DomainError(CovChanError):
    """Invalid argument: out-of-range order, unknown label, bad shape, ..."""

    code = "DOMAIN"


class NotSimplyReducibleError(CovChanError):
    """Some irrep occurs with multiplicity >= 2 in the tensor square.

    Channel construction requires a multiplicity-free decomposition; this is
    the gate that rejects everything else.
    """

    code = "NOT_SIMPLY_REDUCIBLE"


class NotTracePreservingError(CovChanError):
    """The identity-irrep eigenvalue differs from 1."""

    code = "NOT_TP"


class NotCompletelyPositiveError(CovChanError):
    """Some Choi eigenvalue is negative; ``witness`` names the (irrep, i) entry."""

    code = "NOT_CP"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInSubspaceError(CovChanError):
    """A Choi-eigenvalue vector lies outside the column space of the mu-matrix."""

    code = "NOT_IN_SUBSPACE"


class NormalizationError(CovChanError):
    """A class function does not sum to the group order."""

    code = "BAD_NORMALIZATION"


class ClassSumNegativeError(CovChanError):
    """A class function has a negative conjugacy-class sum."""

    code = "CLASS_SUM_NEGATIVE"


class InternalConsistencyError(CovChanError):
    """Two routes to the same quantity disagree; indicates a bug, not bad input."""

    code = "INTERNAL"
