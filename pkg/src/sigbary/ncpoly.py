"""Non-commutative polynomials over leveled symbols.

The free algebra is generated by sample symbols ``s_i^(j)`` (sample ``i`` in
``1..N``, level ``j`` in ``1..k``) and barycenter symbols ``y^(j)``. A
monomial's level is the sum of its symbol levels and every product drops
monomials above the truncation level ``k``, so the algebra mirrors
``T_{d,k}`` under evaluation.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, NamedTuple, Sequence

from . import _series
from .errors import ContextError, DomainError
from .rational import format_fraction, to_fraction
from .tensor_algebra import TensorSeq

SAMPLE = "s"
BARY = "y"


class Symbol(NamedTuple):
    kind: str
    index: int  # sample index 1..N; 0 for the barycenter symbols
    level: int

    def sort_key(self):
        return (0 if self.kind == SAMPLE else 1, self.index, self.level)

    def __str__(self):
        if self.kind == SAMPLE:
            return f"s_{self.index}^({self.level})"
        return f"y^({self.level})"


Monomial = tuple  # tuple[Symbol, ...]


def monomial_level(mono: Monomial) -> int:
    return sum(sym.level for sym in mono)


def _mono_key(mono: Monomial):
    return (monomial_level(mono), tuple(sym.sort_key() for sym in mono))


class NcPoly:
    """Polynomial in ``R<s_1, ..., s_N, y>`` truncated above level ``k``."""

    __slots__ = ("num_samples", "level", "terms")

    def __init__(self, num_samples: int, level: int, terms: Mapping[Monomial, Fraction] | None = None):
        if num_samples < 1 or level < 1:
            raise DomainError("need N >= 1 and k >= 1")
        clean = {}
        for mono, c in (terms or {}).items():
            c = to_fraction(c)
            mono = tuple(mono)
            for sym in mono:
                _check_symbol(sym, num_samples, level)
            if c != 0 and monomial_level(mono) <= level:
                clean[mono] = clean.get(mono, 0) + c
        self.num_samples = num_samples
        self.level = level
        self.terms = {m: clean[m] for m in sorted(clean, key=_mono_key) if clean[m] != 0}

    # construction

    @classmethod
    def constant(cls, num_samples: int, level: int, c=1) -> "NcPoly":
        return cls(num_samples, level, {(): c})

    @classmethod
    def symbol(cls, num_samples: int, level: int, sym: Symbol) -> "NcPoly":
        return cls(num_samples, level, {(sym,): 1})

    def _like(self, terms) -> "NcPoly":
        return NcPoly(self.num_samples, self.level, terms)

    def _check(self, other: "NcPoly"):
        if not isinstance(other, NcPoly):
            raise TypeError(f"expected NcPoly, got {type(other).__name__}")
        if (self.num_samples, self.level) != (other.num_samples, other.level):
            raise ContextError(
                f"context mismatch: (N={self.num_samples}, k={self.level}) "
                f"vs (N={other.num_samples}, k={other.level})"
            )

    # ring structure

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            other = NcPoly.constant(self.num_samples, self.level, to_fraction(other))
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, NcPoly) else -to_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            c = to_fraction(other)
            return self._like({m: a * c for m, a in self.terms.items()})
        self._check(other)
        k = self.level
        out: dict = {}
        for m1, c1 in self.terms.items():
            l1 = monomial_level(m1)
            for m2, c2 in other.terms.items():
                if l1 + monomial_level(m2) > k:
                    continue
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return self._like(out)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return (self.num_samples, self.level, self.terms) == (
                other.num_samples,
                other.level,
                other.terms,
            )
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other != 0 else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.num_samples, self.level, tuple(self.terms.items())))

    # inspection

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def symbols(self) -> set[Symbol]:
        return {sym for mono in self.terms for sym in mono}

    def has_bary_symbols(self) -> bool:
        return any(sym.kind == BARY for sym in self.symbols())

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self.terms.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "*".join(str(sym) for sym in mono)
            if not mono:
                text = format_fraction(mag) if mag.denominator != 1 else str(mag.numerator)
            elif mag == 1:
                text = body
            else:
                coef = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
                text = f"{coef}*{body}"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"NcPoly(N={self.num_samples}, k={self.level}: {self})"


def _check_symbol(sym, num_samples, level):
    if not isinstance(sym, Symbol):
        raise TypeError(f"monomials hold Symbol entries, got {sym!r}")
    if not 1 <= sym.level <= level:
        raise DomainError(f"symbol level {sym.level} outside 1..{level}")
    if sym.kind == SAMPLE:
        if not 1 <= sym.index <= num_samples:
            raise DomainError(f"sample index {sym.index} outside 1..{num_samples}")
    elif sym.kind == BARY:
        if sym.index != 0:
            raise DomainError("barycenter symbols carry no sample index")
    else:
        raise DomainError(f"unknown symbol kind {sym.kind!r}")


class FreeAlgebra:
    """Convenience factory for polynomials in a fixed ``(N, k)`` context."""

    def __init__(self, num_samples: int, level: int):
        self.num_samples = num_samples
        self.level = level

    def one(self) -> NcPoly:
        return NcPoly.constant(self.num_samples, self.level, 1)

    def zero(self) -> NcPoly:
        return NcPoly(self.num_samples, self.level)

    def s(self, i: int, j: int) -> NcPoly:
        return NcPoly.symbol(self.num_samples, self.level, Symbol(SAMPLE, i, j))

    def y(self, j: int) -> NcPoly:
        return NcPoly.symbol(self.num_samples, self.level, Symbol(BARY, 0, j))

    def sample_sig(self, i: int) -> NcPoly:
        """``1 + s_i^(1) + ... + s_i^(k)``: the generic group element of sample ``i``."""
        out = self.one()
        for j in range(1, self.level + 1):
            out = out + self.s(i, j)
        return out

    def bary_sig(self) -> NcPoly:
        out = self.one()
        for j in range(1, self.level + 1):
            out = out + self.y(j)
        return out


def poly_arith(op: str, f: NcPoly, g=None) -> NcPoly:
    """Dispatch ``add``/``sub``/``mul`` on two polynomials, or ``scale`` by a rational ``g``."""
    if op == "add":
        f._check(g)
        return f + g
    if op == "sub":
        f._check(g)
        return f - g
    if op == "mul":
        f._check(g)
        return f * g
    if op == "scale":
        return f * to_fraction(g)
    raise DomainError(f"unknown polynomial operation {op!r}")


def graded_component(f: NcPoly, j: int) -> NcPoly:
    if not 0 <= j <= f.level:
        raise DomainError(f"graded component {j} outside 0..{f.level}")
    return f._like({m: c for m, c in f.terms.items() if monomial_level(m) == j})


def poly_inverse(f: NcPoly) -> NcPoly:
    c = f.constant_term
    if c == 0:
        raise DomainError("only polynomials with nonzero constant term are invertible")
    unit = NcPoly.constant(f.num_samples, f.level)
    return _series.inverse_series(f, unit, f.level, c)


def poly_exp(f: NcPoly) -> NcPoly:
    if f.constant_term != 0:
        raise DomainError("poly_exp needs a zero constant term")
    return _series.exp_series(f, NcPoly.constant(f.num_samples, f.level), f.level)


def poly_log(f: NcPoly) -> NcPoly:
    if f.constant_term != 1:
        raise DomainError("poly_log needs constant term 1")
    return _series.log_series(f, NcPoly.constant(f.num_samples, f.level), f.level)


def substitute(f: NcPoly, bindings: Mapping[int, NcPoly]) -> NcPoly:
    """Replace each ``y^(j)`` by ``bindings[j]``; sample symbols stay put."""
    images: dict[Symbol, NcPoly] = {}
    for sym in f.symbols():
        if sym.kind == BARY:
            if sym.level not in bindings:
                raise DomainError(f"no binding for y^({sym.level})")
            image = bindings[sym.level]
            f._check(image)
            images[sym] = image
        else:
            images[sym] = NcPoly.symbol(f.num_samples, f.level, sym)
    unit = NcPoly.constant(f.num_samples, f.level)
    out = NcPoly(f.num_samples, f.level)
    for mono, c in f.terms.items():
        term = unit
        for sym in mono:
            term = term * images[sym]
        out = out + term * c
    return out


def evaluate(f: NcPoly, sample: Sequence[TensorSeq], bary: TensorSeq | None = None) -> TensorSeq:
    """Algebra morphism sending ``s_i^(j)`` to level ``j`` of ``sample[i-1]``.

    ``y^(j)`` is bound to level ``j`` of ``bary`` when given; otherwise its
    presence is an error.
    """
    sample = tuple(sample)
    if len(sample) != f.num_samples:
        raise ContextError(f"polynomial expects {f.num_samples} sample members, got {len(sample)}")
    ref = bary if bary is not None else sample[0]
    for x in sample + ((bary,) if bary is not None else ()):
        if (x.dim, x.level) != (ref.dim, f.level):
            raise ContextError("sample members must share (d, k) with the polynomial's level")
    images: dict[Symbol, TensorSeq] = {}
    for sym in f.symbols():
        if sym.kind == BARY:
            if bary is None:
                raise DomainError(f"unbound barycenter symbol {sym}")
            images[sym] = bary.project(sym.level)
        else:
            images[sym] = sample[sym.index - 1].project(sym.level)
    d, k = ref.dim, f.level
    unit = TensorSeq.one(d, k)
    out = TensorSeq.zero(d, k)
    for mono, c in f.terms.items():
        term = unit
        for sym in mono:
            term = term * images[sym]
        out = out + term * c
    return out


@lru_cache(maxsize=None)
def bary_poly_parts(num_samples: int, level: int) -> tuple[NcPoly, tuple[NcPoly, ...], tuple[NcPoly, ...]]:
    """``(g, (f_1..f_k), (p_1..p_k))`` of the symbolic barycenter construction.

    ``g`` averages ``log(y^{-1} s_i)`` over the sample, ``f_j`` is the level-``j``
    part of ``g + y^(j)`` (free of ``y^(j)`` by triangularity) and ``p_j`` is
    ``f_j`` with the lower ``y`` symbols replaced by ``p_1..p_{j-1}``.
    """
    alg = FreeAlgebra(num_samples, level)
    y_inv = poly_inverse(alg.bary_sig())
    g = alg.zero()
    for i in range(1, num_samples + 1):
        g = g + poly_log(y_inv * alg.sample_sig(i))
    g = g * Fraction(1, num_samples)
    fs, ps = [], []
    for j in range(1, level + 1):
        f_j = graded_component(g, j) + alg.y(j)
        bindings = {i: ps[i - 1] for i in range(1, j)}
        bindings.update({i: alg.zero() for i in range(j, level + 1)})
        fs.append(f_j)
        ps.append(substitute(f_j, bindings))
    return g, tuple(fs), tuple(ps)


def build_bary_poly(num_samples: int, level: int) -> NcPoly:
    """Polynomial ``q`` in the sample symbols with ``evaluate(q, x) == bary(x)``."""
    _, _, ps = bary_poly_parts(num_samples, level)
    q = NcPoly.constant(num_samples, level)
    for p in ps:
        q = q + p
    return q
