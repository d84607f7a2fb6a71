"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the domain of an evaluator (e.g. ``n < 1``)."""


class RangeError(IndexError):
    """Requested term lies beyond what the current scan bound can see."""


class InversionError(ValueError):
    """A bubble could not be turned back into an affinity partition."""


def require_positive(n, name="n"):
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")
    return n


def require_nonnegative(n, name="n"):
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    if n < 0:
        raise DomainError(f"{name} must be >= 0, got {n}")
    return n
