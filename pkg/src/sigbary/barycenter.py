"""Lie group barycenters in the free nilpotent Lie group ``G_{d,k}``.

The barycenter ``m`` of a sample ``x_1..x_N`` is the unique group element with
``sum_i log(m^{-1} x_i) = 0``. Because log, inverse and product are
triangular in the level grading, the residual at level ``j`` equals
``-N m^(j)`` plus terms in lower levels only, so one upward sweep over the
levels solves the equation exactly.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ContextError, DomainError
from .rational import ONE
from .tensor_algebra import TensorSeq, exp, group_inverse, is_grouplike, log


def _validate_sample(sample: Sequence[TensorSeq], check_group: bool = True) -> tuple[TensorSeq, ...]:
    sample = tuple(sample)
    if not sample:
        raise DomainError("a group sample needs at least one member")
    first = sample[0]
    for x in sample:
        if not isinstance(x, TensorSeq):
            raise TypeError(f"sample members must be TensorSeq, got {type(x).__name__}")
        if (x.dim, x.level) != (first.dim, first.level):
            raise ContextError("sample members live in different truncated tensor algebras")
        if check_group and not is_grouplike(x):
            raise DomainError("sample member is not group-like")
    return sample


def bary_residual(m: TensorSeq, sample: Sequence[TensorSeq]) -> TensorSeq:
    """``sum_i log(m^{-1} · x_i)``; vanishes exactly at the barycenter."""
    sample = _validate_sample(sample, check_group=False)
    sample[0]._check(m)
    m_inv = group_inverse(m)
    total = TensorSeq.zero(m.dim, m.level)
    for x in sample:
        total = total + log(m_inv * x)
    return total


def _with_level(x: TensorSeq, j: int, tensor) -> TensorSeq:
    levels = list(x.levels)
    levels[j] = tensor
    return TensorSeq(x.dim, x.level, levels)


def _residual_at(m: TensorSeq, sample: tuple[TensorSeq, ...], j: int):
    """Level ``j`` of the residual, computed in ``T_{d,j}`` since higher levels cannot feed into it."""
    low = [x.truncate(j) for x in sample]
    return bary_residual(m.truncate(j), low).levels[j]


def bary(sample: Sequence[TensorSeq], validate: bool = True) -> TensorSeq:
    sample = _validate_sample(sample, check_group=validate)
    n = len(sample)
    m = TensorSeq.one(sample[0].dim, sample[0].level)
    for j in range(1, m.level + 1):
        m = _with_level(m, j, m.levels[j] + _residual_at(m, sample, j) * Fraction(1, n))
    return m


def bary_k2(sample: Sequence[TensorSeq]) -> TensorSeq:
    """Closed form at level 2: mean vector, and a matrix correcting the mean by the squares."""
    sample = _validate_sample(sample)
    if sample[0].level != 2:
        raise DomainError("bary_k2 needs truncation level 2")
    n = len(sample)
    d = sample[0].dim
    mean1 = sum((x.levels[1] for x in sample[1:]), sample[0].levels[1]) * Fraction(1, n)
    mean2 = sum((x.levels[2] for x in sample[1:]), sample[0].levels[2]) * Fraction(1, n)
    squares = sum(np.multiply.outer(x.levels[1], x.levels[1]) for x in sample)
    lvl2 = mean2 - squares * Fraction(1, 2 * n) + np.multiply.outer(mean1, mean1) * Fraction(1, 2)
    return TensorSeq(d, 2, [ONE, mean1, lvl2])


def bary_pair(x1: TensorSeq, x2: TensorSeq) -> TensorSeq:
    """Two-point barycenter ``x1 · exp(log(x1^{-1} x2) / 2)``."""
    _validate_sample((x1, x2))
    return x1 * exp(log(group_inverse(x1) * x2) * Fraction(1, 2))


def bary_solve_last(fixed: Sequence[TensorSeq], target: TensorSeq, n: int | None = None) -> TensorSeq:
    """The unique ``x_N`` with ``bary(fixed + (x_N,)) == target``.

    ``x_N^(j)`` enters the level-``j`` residual with coefficient one, so the
    same upward sweep determines it level by level.
    """
    fixed = tuple(fixed)
    if n is not None and n != len(fixed) + 1:
        raise DomainError(f"N={n} does not match {len(fixed)} fixed members plus one unknown")
    _validate_sample(fixed + (target,))
    x = TensorSeq.one(target.dim, target.level)
    for j in range(1, target.level + 1):
        x = _with_level(x, j, x.levels[j] - _residual_at(target, fixed + (x,), j))
    return x
