"""Exception hierarchy shared across the package.

The CLI maps these to exit codes: ScalarParseError / InstanceParseError -> 2,
everything else raised during a command -> 1, oracle disagreement -> 3.
"""


class SolvcohomError(Exception):
    """Base class for all errors raised by this package."""


class ScalarParseError(SolvcohomError):
    """A scalar or period literal does not match the exact text grammar."""


class InstanceParseError(SolvcohomError):
    """An instance file is structurally malformed."""


class ValidationFailure(SolvcohomError):
    """Validated input data violates a structural invariant."""


class ExtendScalarsError(SolvcohomError):
    """A characteristic polynomial does not split over Q(i)."""

    def __init__(self, factor_text: str):
        self.factor_text = factor_text
        super().__init__(
            "matrix is not triangularizable over Q(i): "
            f"irreducible factor {factor_text}; extend scalars or supply an "
            "adapted basis"
        )


class WeightInferenceError(SolvcohomError):
    """Operator diagonals cannot serve as weights in the supplied basis."""


class WeightGradingError(SolvcohomError):
    """A differential coefficient crosses between distinct weight tags."""


class SelectionClosureError(SolvcohomError):
    """A selected subcomplex is not closed under the differential."""


class NilshadowError(SolvcohomError):
    """The nilshadow bracket fails its nilpotency certificate."""


class ModeMismatchError(SolvcohomError):
    """An operation was applied to an instance of the wrong ground mode."""
