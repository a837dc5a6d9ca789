"""Exact rank / inverse / determinant for Fraction matrices, backed by sympy."""
from __future__ import annotations

import numpy as np
import sympy

from .rational import frac_array, to_fraction


def _to_sympy(M: np.ndarray) -> sympy.Matrix:
    M = np.asarray(M, dtype=object)
    return sympy.Matrix(
        M.shape[0],
        M.shape[1],
        [sympy.Rational(to_fraction(v).numerator, to_fraction(v).denominator) for v in M.ravel()],
    )


def _from_sympy(S: sympy.Matrix) -> np.ndarray:
    return frac_array([[S[i, j] for j in range(S.cols)] for i in range(S.rows)])


def rank(M: np.ndarray) -> int:
    return int(_to_sympy(M).rank())


def det(M: np.ndarray):
    return to_fraction(_to_sympy(M).det())


def inverse(M: np.ndarray) -> np.ndarray:
    """Exact inverse; raises ``ValueError`` for singular input."""
    S = _to_sympy(M)
    if S.rows != S.cols or S.det() == 0:
        raise ValueError("matrix is singular")
    return _from_sympy(S.inv())
