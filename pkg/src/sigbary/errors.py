"""Exception types raised across the package."""


class SigbaryError(Exception):
    """Base class for all domain errors."""


class ContextError(SigbaryError, ValueError):
    """Operands live in different algebras (dimension, level or sample count differ)."""


class DomainError(SigbaryError, ValueError):
    """An input violates an operation's precondition (e.g. wrong constant term)."""
