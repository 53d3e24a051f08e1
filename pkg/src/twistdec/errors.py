"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Rejected input: the requested parameters violate a precondition."""


class ConsistencyError(RuntimeError):
    """Internal invariant failed; indicates a bug, not bad user input."""
