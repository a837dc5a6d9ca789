"""Truncated power series shared by tensor sequences and non-commutative polynomials.

Each helper only needs ``+``, ``-``, ``*`` between elements and scalar
multiplication; nilpotency of the augmentation ideal under the level
truncation makes every series finite, so the loops stop at ``level``.
"""
from fractions import Fraction


def exp_series(z, one, level):
    result = one
    term = one
    for n in range(1, level + 1):
        term = (term * z) * Fraction(1, n)
        result = result + term
    return result


def log_series(s, one, level):
    u = s - one
    result = u * 0
    power = one
    for n in range(1, level + 1):
        power = power * u
        result = result + power * Fraction((-1) ** (n + 1), n)
    return result


def inverse_series(s, one, level, constant):
    """Geometric series for ``s = c(1 + u)``, i.e. ``(1/c) * sum (-u)^n``."""
    c = Fraction(constant)
    u = s * (1 / c) - one
    result = one
    power = one
    for _ in range(1, level + 1):
        power = power * (-u)
        result = result + power
    return result * (1 / c)
