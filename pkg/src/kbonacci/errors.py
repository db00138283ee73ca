"""Exception types raised by the library.

Everything here derives from ValueError or ArithmeticError so callers who
do not care about the distinction can catch the builtin bases.
"""


class OrderTooSmall(ValueError):
    """Recurrence order below 2; the stride identities start at order 2."""


class NegativeRow(ValueError):
    """Triangle row index below 0; the triangles are not extended upward."""


class NonIntegralQuotient(ArithmeticError):
    """A polynomial long-division step would need a fractional coefficient."""


class WindowTooSmall(ValueError):
    """Coefficient-reversal window shorter than the polynomial's degree."""


class NonIntegralBackwardStep(ArithmeticError):
    """Backward extension of a recurrence hit a non-integer value."""


class WindowTooNarrow(ValueError):
    """Empty index range handed to an identity check."""


class ColumnOutOfRange(ValueError):
    """Product-matrix column index outside 0..k*k."""


class EmptyCoefficients(ValueError):
    """A recurrence needs at least one coefficient."""


class NotMonic(ValueError):
    """Operation requires a monic polynomial (leading coefficient 1)."""
