"""Exact rational scalars and object-dtype numpy carriers.

All arithmetic in the package runs on :class:`fractions.Fraction` stored in
``dtype=object`` arrays, so numpy supplies the indexing and broadcasting while
the entries stay exact.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

import numpy as np

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def to_fraction(value: Any) -> Fraction:
    """Convert ints, Fractions, sympy Rationals and ``"p/q"`` strings to a Fraction.

    Floats are refused: silently absorbing a binary approximation would break
    every exact identity downstream.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(text)
    if isinstance(value, (float, np.floating)):
        raise TypeError(f"floating point value {value!r} is not allowed; pass a Fraction or 'p/q'")
    # sympy.Rational and friends expose p/q
    p, q = getattr(value, "p", None), getattr(value, "q", None)
    if p is not None and q is not None:
        return Fraction(int(p), int(q))
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_fraction(q: Fraction) -> str:
    """Canonical ``"p/q"`` text: lowest terms, ``"0/1"`` for zero, no plus sign."""
    q = to_fraction(q)
    return f"{q.numerator}/{q.denominator}"


def frac_array(values: Any, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Object array of Fractions built from nested sequences (or a scalar)."""
    arr = np.array(values, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = to_fraction(v)
    return out


def zeros(shape: tuple[int, ...] | int) -> np.ndarray:
    if isinstance(shape, int):
        shape = (shape,)
    return np.full(shape, ZERO, dtype=object)


def identity(n: int) -> np.ndarray:
    out = zeros((n, n))
    for i in range(n):
        out[i, i] = ONE
    return out


def ones(shape: tuple[int, ...] | int) -> np.ndarray:
    if isinstance(shape, int):
        shape = (shape,)
    return np.full(shape, ONE, dtype=object)


def format_array(arr: np.ndarray) -> Any:
    """Nested lists of ``"p/q"`` strings, preserving the array shape."""
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 0:
        return format_fraction(arr.item())
    return [format_array(a) for a in arr]
