"""Truncated tensor algebra ``T_{d,k}`` over the rationals.

An element is a sequence of dense tensors ``x^(0), ..., x^(k)`` where the
level-``l`` tensor has shape ``(d,)*l``. Multi-indices are 0-based in storage;
words use letters ``1..d`` as in the usual signature notation.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from sympy import divisors, mobius

from . import _series
from .errors import ContextError, DomainError
from .rational import ONE, ZERO, format_fraction, frac_array, to_fraction, zeros

Word = tuple  # tuple[int, ...] with letters in 1..d


class TensorSeq:
    """Element of the truncated tensor algebra ``T_{d,k}``.

    Instances are immutable; arithmetic returns new objects. ``x * y`` is the
    truncated tensor product when both operands are sequences and scalar
    multiplication otherwise.
    """

    __slots__ = ("dim", "level", "levels")

    def __init__(self, dim: int, level: int, levels: Sequence):
        if int(dim) < 1 or int(level) < 1:
            raise DomainError(f"dimension and level must be positive, got d={dim}, k={level}")
        dim, level = int(dim), int(level)
        if len(levels) != level + 1:
            raise DomainError(f"expected {level + 1} levels, got {len(levels)}")
        stored = []
        for ell, comp in enumerate(levels):
            if _is_frac_array(comp):
                arr = comp if not comp.flags.writeable else comp.copy()
            else:
                arr = frac_array(comp)
            shape = (dim,) * ell
            if arr.shape != shape:
                if arr.size != dim**ell:
                    raise DomainError(f"level {ell} needs {dim ** ell} entries, got {arr.size}")
                arr = arr.reshape(shape)
            arr.flags.writeable = False
            stored.append(arr)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "levels", tuple(stored))

    def __setattr__(self, name, value):
        raise AttributeError("TensorSeq is immutable")

    # construction helpers

    @classmethod
    def zero(cls, dim: int, level: int) -> "TensorSeq":
        return cls(dim, level, [zeros((dim,) * ell) for ell in range(level + 1)])

    @classmethod
    def one(cls, dim: int, level: int) -> "TensorSeq":
        levels = [zeros((dim,) * ell) for ell in range(level + 1)]
        levels[0] = np.array(ONE, dtype=object)
        return cls(dim, level, levels)

    @classmethod
    def from_flat(cls, dim: int, level: int, flat_levels: Sequence) -> "TensorSeq":
        """Build from ``[scalar, flat(d), flat(d^2), ...]`` in row-major word order."""
        levels = [frac_array(flat_levels[0], ())]
        for ell in range(1, level + 1):
            levels.append(frac_array(flat_levels[ell], (dim,) * ell))
        return cls(dim, level, levels)

    @classmethod
    def from_level(cls, dim: int, level: int, ell: int, tensor) -> "TensorSeq":
        """Sequence that is zero except for ``tensor`` at level ``ell``."""
        out = [zeros((dim,) * j) for j in range(level + 1)]
        out[ell] = tensor if _is_frac_array(tensor) else frac_array(tensor, (dim,) * ell)
        return cls(dim, level, out)

    # accessors

    @property
    def constant(self) -> Fraction:
        return self.levels[0].item()

    def __getitem__(self, ell: int) -> np.ndarray:
        return self.levels[ell]

    def entry(self, word: Iterable[int]) -> Fraction:
        """Coefficient ``<x, w>`` of the word ``w`` (letters 1..d)."""
        word = tuple(word)
        check_word(word, self.dim)
        if len(word) > self.level:
            return ZERO
        return self.levels[len(word)][tuple(i - 1 for i in word)]

    def project(self, ell: int) -> "TensorSeq":
        return TensorSeq.from_level(self.dim, self.level, ell, self.levels[ell])

    def truncate(self, level: int) -> "TensorSeq":
        if level > self.level:
            raise ContextError(f"cannot raise truncation level {self.level} to {level}")
        return TensorSeq(self.dim, level, self.levels[: level + 1])

    def _check(self, other: "TensorSeq"):
        if not isinstance(other, TensorSeq):
            raise TypeError(f"expected TensorSeq, got {type(other).__name__}")
        if (self.dim, self.level) != (other.dim, other.level):
            raise ContextError(
                f"context mismatch: T_{{{self.dim},{self.level}}} vs T_{{{other.dim},{other.level}}}"
            )

    # arithmetic

    def __add__(self, other):
        self._check(other)
        return TensorSeq(self.dim, self.level, [a + b for a, b in zip(self.levels, other.levels)])

    def __sub__(self, other):
        self._check(other)
        return TensorSeq(self.dim, self.level, [a - b for a, b in zip(self.levels, other.levels)])

    def __neg__(self):
        return TensorSeq(self.dim, self.level, [-a for a in self.levels])

    def __mul__(self, other):
        if isinstance(other, TensorSeq):
            return mul(self, other)
        c = to_fraction(other)
        return TensorSeq(self.dim, self.level, [a * c for a in self.levels])

    def __rmul__(self, other):
        c = to_fraction(other)
        return TensorSeq(self.dim, self.level, [a * c for a in self.levels])

    def __truediv__(self, other):
        return self * (1 / to_fraction(other))

    def __pow__(self, n: int):
        """Integer powers; negative exponents go through the group inverse."""
        if n < 0:
            return group_inverse(self) ** (-n)
        result = TensorSeq.one(self.dim, self.level)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TensorSeq):
            return NotImplemented
        if (self.dim, self.level) != (other.dim, other.level):
            return False
        return all(np.array_equal(a, b) for a, b in zip(self.levels, other.levels))

    def __hash__(self):
        return hash((self.dim, self.level, tuple(tuple(a.ravel()) for a in self.levels)))

    def is_zero(self) -> bool:
        return all(not np.any(a != 0) for a in self.levels)

    def __repr__(self):
        parts = [format_fraction(self.constant)]
        for arr in self.levels[1:]:
            parts.append("[" + ", ".join(format_fraction(v) for v in arr.ravel()) + "]")
        return f"TensorSeq(d={self.dim}, k={self.level}: " + " ⊕ ".join(parts) + ")"

    # serialization

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "level": self.level,
            "levels": [format_fraction(self.constant)]
            + [[format_fraction(v) for v in arr.ravel()] for arr in self.levels[1:]],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "TensorSeq":
        try:
            dim, level, flat = int(data["dim"]), int(data["level"]), data["levels"]
        except KeyError as exc:
            raise DomainError(f"tensor sequence JSON lacks field {exc}") from None
        return cls.from_flat(dim, level, flat)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "TensorSeq":
        return cls.from_json_dict(json.loads(text))


def _is_frac_array(obj) -> bool:
    return isinstance(obj, np.ndarray) and obj.dtype == object


def check_word(word: Word, dim: int | None = None):
    for letter in word:
        if int(letter) < 1 or (dim is not None and int(letter) > dim):
            raise DomainError(f"letter {letter} outside 1..{dim if dim is not None else 'd'}")


def one(dim: int, level: int) -> TensorSeq:
    return TensorSeq.one(dim, level)


def linear_combine(a, x: TensorSeq, b, y: TensorSeq) -> TensorSeq:
    """``a*x + b*y`` levelwise."""
    x._check(y)
    return a * x + b * y


def mul(x: TensorSeq, y: TensorSeq) -> TensorSeq:
    """Truncated tensor product: level ``l`` collects ``x^(a) ⊗ y^(l-a)``."""
    x._check(y)
    d, k = x.dim, x.level
    out = []
    for ell in range(k + 1):
        acc = zeros((d,) * ell)
        for a in range(ell + 1):
            xa, yb = x.levels[a], y.levels[ell - a]
            # skip zero blocks; most inputs are sparse in levels
            if not np.any(xa != 0) or not np.any(yb != 0):
                continue
            acc = acc + np.multiply.outer(xa, yb)
        out.append(acc)
    return TensorSeq(d, k, out)


def exp(z: TensorSeq) -> TensorSeq:
    if z.constant != 0:
        raise DomainError("exp needs a zero constant component")
    return _series.exp_series(z, TensorSeq.one(z.dim, z.level), z.level)


def log(s: TensorSeq) -> TensorSeq:
    if s.constant != 1:
        raise DomainError("log needs constant component 1")
    return _series.log_series(s, TensorSeq.one(s.dim, s.level), s.level)


def group_inverse(z: TensorSeq) -> TensorSeq:
    """Inverse of a sequence with constant 1 via the geometric series in ``z - 1``."""
    if z.constant != 1:
        raise DomainError("group inverse needs constant component 1")
    unit = TensorSeq.one(z.dim, z.level)
    w = _series.inverse_series(z, unit, z.level, 1)
    if __debug__:
        assert w == exp(-log(z)), "geometric series and exp(-log) disagree"
    return w


@lru_cache(maxsize=4096)
def _shuffle(u: Word, v: Word) -> tuple:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: Counter = Counter()
    for w, c in _shuffle(u[:-1], v):
        acc[w + u[-1:]] += c
    for w, c in _shuffle(u, v[:-1]):
        acc[w + v[-1:]] += c
    return tuple(sorted(acc.items()))


def shuffle_product(u: Iterable[int], v: Iterable[int], dim: int | None = None) -> dict:
    """Shuffle ``u ⧢ v`` as a mapping word -> multiplicity."""
    u, v = tuple(int(a) for a in u), tuple(int(b) for b in v)
    check_word(u, dim)
    check_word(v, dim)
    return dict(_shuffle(u, v))


def words(dim: int, length: int):
    return itertools.product(range(1, dim + 1), repeat=length)


def is_grouplike(s: TensorSeq) -> bool:
    """Shuffle-relation test for membership in the free nilpotent Lie group."""
    if s.constant != 1:
        return False
    d, k = s.dim, s.level
    for lu in range(1, k // 2 + 1):
        for lv in range(lu, k - lu + 1):
            for u in words(d, lu):
                su = s.entry(u)
                for v in words(d, lv):
                    lhs = sum(c * s.entry(w) for w, c in _shuffle(u, v))
                    if lhs != su * s.entry(v):
                        return False
    return True


def lie_algebra_dim(d: int, k: int) -> int:
    """Dimension of the free nilpotent Lie algebra, via the Möbius sum (Witt formula)."""
    if d < 1 or k < 1:
        raise DomainError("d and k must be positive")
    total = Fraction(0)
    for ell in range(1, k + 1):
        total += Fraction(sum(int(mobius(a)) * d ** (ell // a) for a in divisors(ell)), ell)
    assert total.denominator == 1
    return int(total)


def shuffle_mass(u: Word, v: Word) -> int:
    """Total multiplicity of ``u ⧢ v``; always ``C(|u|+|v|, |u|)``."""
    return sum(shuffle_product(u, v).values())

