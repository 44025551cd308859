"""Numerical tolerances used across the library.

All quantities handled here are small sums of roots of unity evaluated in
double precision, so absolute tolerances are adequate.  ``COVCH_TOLERANCE``
overrides the equality tolerance at runtime (used by the CLI); the zero
threshold for projector diagonals and eigenvalue positivity is fixed.
"""

import os

#: Absolute tolerance for floating-point equality checks.
DEFAULT_EQ_TOL = 1e-10

#: One-sided slack for positivity checks (eigenvalues, projector diagonals).
#: Diagonal entries of rank-one projectors lie in [0, 1], so the scale is
#: absolute.
ZERO_TOL = 1e-10

_ENV_VAR = "COVCH_TOLERANCE"


def eq_tol() -> float:
    """Equality tolerance, honouring the ``COVCH_TOLERANCE`` env override."""
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_EQ_TOL
    try:
        value = float(raw)
    except ValueError as exc:
        raise ValueError(f"{_ENV_VAR} must be a float, got {raw!r}") from exc
    if value <= 0.0:
        raise ValueError(f"{_ENV_VAR} must be positive, got {value}")
    return value
