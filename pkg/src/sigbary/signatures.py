"""Signatures of piecewise linear paths.

A path with ``m`` segments in ``R^d`` is stored as its ``d x m`` increment
matrix ``A`` (column ``j`` is the ``j``-th segment), i.e. as the linearly
transformed axis path ``A · Axis^m``. Paths start at the origin and carry no
time parametrization.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .errors import ContextError, DomainError
from .rational import format_fraction, frac_array, identity, zeros
from .tensor_algebra import TensorSeq, exp


@dataclass(frozen=True, eq=False)
class PwlPath:
    increments: np.ndarray

    def __post_init__(self):
        inc = self.increments
        if not (isinstance(inc, np.ndarray) and inc.dtype == object):
            inc = frac_array(inc)
        else:
            inc = inc.copy()
        if inc.ndim == 1:
            inc = inc.reshape(-1, 1)
        if inc.ndim != 2 or inc.shape[0] < 1 or inc.shape[1] < 1:
            raise DomainError(f"increments must be a nonempty d x m matrix, got shape {inc.shape}")
        inc.flags.writeable = False
        object.__setattr__(self, "increments", inc)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "PwlPath":
        return cls(frac_array(columns).T)

    @property
    def dim(self) -> int:
        return self.increments.shape[0]

    @property
    def segments(self) -> int:
        return self.increments.shape[1]

    def columns(self) -> list[np.ndarray]:
        return [self.increments[:, j] for j in range(self.segments)]

    def vertices(self) -> np.ndarray:
        """``d x (m+1)`` array of support points, starting at the origin."""
        out = zeros((self.dim, self.segments + 1))
        for j in range(self.segments):
            out[:, j + 1] = out[:, j] + self.increments[:, j]
        return out

    def concat(self, other: "PwlPath") -> "PwlPath":
        if self.dim != other.dim:
            raise ContextError("cannot concatenate paths of different dimension")
        return PwlPath(np.concatenate([self.increments, other.increments], axis=1))

    def __eq__(self, other):
        if not isinstance(other, PwlPath):
            return NotImplemented
        return self.increments.shape == other.increments.shape and np.array_equal(
            self.increments, other.increments
        )

    def __repr__(self):
        cols = ", ".join("(" + ", ".join(format_fraction(v) for v in c) + ")" for c in self.columns())
        return f"PwlPath(d={self.dim}, segments=[{cols}])"

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "increments": [[format_fraction(v) for v in col] for col in self.columns()],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PwlPath":
        try:
            dim, cols = int(data["dim"]), data["increments"]
        except KeyError as exc:
            raise DomainError(f"path JSON lacks field {exc}") from None
        path = cls.from_columns(cols)
        if path.dim != dim:
            raise DomainError(f"path JSON declares dim {dim} but columns have length {path.dim}")
        return path

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def check_composition(alpha: Sequence[int]) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if not alpha or any(a < 1 for a in alpha):
        raise DomainError(f"a composition needs positive parts, got {alpha}")
    return alpha


def compositions(m: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``m`` (ordered tuples of positive parts)."""
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in compositions(m - first):
            yield (first,) + rest


def sig_segment(v: Sequence, level: int) -> TensorSeq:
    """Signature of the straight segment with increment ``v``."""
    v = frac_array(v)
    return exp(TensorSeq.from_level(len(v), level, 1, v))


def _unit(m: int, j: int) -> np.ndarray:
    e = zeros(m)
    e[j] = Fraction(1)
    return e


def sig_axis(m: int, level: int) -> TensorSeq:
    """Signature of the canonical axis path ``Axis^m`` (Chen product of unit steps)."""
    if m < 1:
        raise DomainError("axis path needs m >= 1")
    result = TensorSeq.one(m, level)
    for j in range(m):
        result = result * sig_segment(_unit(m, j), level)
    return result


def congruence(A, z: TensorSeq) -> TensorSeq:
    """Matrix-tensor congruence ``A · z``: ``A`` acts on every tensor slot of every level."""
    A = A if isinstance(A, np.ndarray) and A.dtype == object else frac_array(A)
    if A.ndim != 2 or A.shape[1] != z.dim:
        raise ContextError(f"matrix of shape {A.shape} cannot act on T_{{{z.dim},{z.level}}}")
    levels = [z.levels[0]]
    for ell in range(1, z.level + 1):
        out = z.levels[ell]
        for axis in range(ell):
            out = np.moveaxis(np.tensordot(A, out, axes=([1], [axis])), 0, axis)
        levels.append(out)
    return TensorSeq(A.shape[0], z.level, levels)


def sig_pwl(path: PwlPath, level: int) -> TensorSeq:
    """Signature of ``A · Axis^m`` via equivariance."""
    return congruence(path.increments, sig_axis(path.segments, level))


def sig_pwl_chen(path: PwlPath, level: int) -> TensorSeq:
    """Same signature, computed as the Chen product over the segments."""
    result = TensorSeq.one(path.dim, level)
    for col in path.columns():
        result = result * sig_segment(col, level)
    return result


def sig_axis_subpath(alpha: Sequence[int], i: int, level: int) -> TensorSeq:
    """Signature of the ``i``-th axis subpath (1-based) of ``Axis^m`` under composition ``alpha``."""
    alpha = check_composition(alpha)
    if not 1 <= i <= len(alpha):
        raise DomainError(f"subpath index {i} outside 1..{len(alpha)}")
    m = sum(alpha)
    start = sum(alpha[: i - 1])
    result = TensorSeq.one(m, level)
    for j in range(start, start + alpha[i - 1]):
        result = result * sig_segment(_unit(m, j), level)
    return result


def axis_subpath_matrix(alpha: Sequence[int], i: int) -> np.ndarray:
    """Increment matrix (``m x alpha_i``) of the ``i``-th axis subpath."""
    alpha = check_composition(alpha)
    start = sum(alpha[: i - 1])
    return identity(sum(alpha))[:, start : start + alpha[i - 1]]


def signed_area(path: PwlPath) -> Fraction:
    """Shoelace signed area of the polygon closed back to the origin (2-D only).

    Sign convention: counter-clockwise loops are positive, which equals
    ``(sigma_12 - sigma_21) / 2`` of the level-2 signature.
    """
    if path.dim != 2:
        raise DomainError("signed area is defined for planar paths only")
    verts = path.vertices()
    x, y = verts[0], verts[1]
    n = verts.shape[1]
    total = Fraction(0)
    for j in range(n):
        nxt = (j + 1) % n
        total += x[j] * y[nxt] - x[nxt] * y[j]
    return total / 2


def levy_area(sig: TensorSeq) -> Fraction:
    """``(sigma_12 - sigma_21) / 2`` of a planar signature."""
    if sig.dim != 2 or sig.level < 2:
        raise DomainError("Lévy area needs a planar signature of level >= 2")
    return (sig.entry((1, 2)) - sig.entry((2, 1))) / 2
