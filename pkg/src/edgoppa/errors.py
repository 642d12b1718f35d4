"""Exception types shared across the package.

Every domain failure raises a subclass of EdwardsGoppaError so callers
(and the CLI) can separate usage mistakes from algebra-level errors.
Garden-variety argument problems (bad lengths, negative counts) use the
builtin ValueError / ZeroDivisionError instead.
"""


class EdwardsGoppaError(Exception):
    """Base class for all domain errors raised by this package."""


class NotPrimeError(EdwardsGoppaError):
    """Field characteristic is not a prime number."""


class EvenCharacteristicError(EdwardsGoppaError):
    """Characteristic 2 is excluded; every construction here needs p odd."""


class NotIrreducibleError(EdwardsGoppaError):
    """Supplied modulus polynomial factors over GF(p)."""


class FieldMismatchError(EdwardsGoppaError):
    """Operands belong to different finite fields."""


class InvalidDError(EdwardsGoppaError):
    """Edwards coefficient d violates d*(d-1) != 0."""


class IncompleteCurveError(EdwardsGoppaError):
    """Operation requires a complete Edwards curve (d a non-square)."""


class SingularPointError(EdwardsGoppaError):
    """A singular point at infinity appeared where only affine points are allowed."""


class PointNotOnCurveError(EdwardsGoppaError):
    """Coordinates do not satisfy the curve equation."""


class IndeterminateError(EdwardsGoppaError):
    """A basis function has a vanishing denominator factor at the point."""


class NotEnoughPointsError(EdwardsGoppaError):
    """The curve does not carry enough usable evaluation points."""


class InvalidPointError(EdwardsGoppaError):
    """An explicitly supplied evaluation point fails validation."""


class RankDeficientError(EdwardsGoppaError):
    """Generator matrix does not have full row rank."""

    def __init__(self, rank: int, needed: int):
        super().__init__(f"matrix rank {rank} < {needed} rows")
        self.rank = rank
        self.needed = needed


class BudgetExceededError(EdwardsGoppaError):
    """Exhaustive search would exceed the enumeration budget."""
