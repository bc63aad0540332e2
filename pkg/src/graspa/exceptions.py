"""Exception types shared across the package."""


class EvaluationError(RuntimeError):
    """A map or interpolant evaluation lost finiteness (overflow/underflow)."""


class PredictionUnavailableError(ValueError):
    """The closed-form limit prediction does not cover the requested split."""
