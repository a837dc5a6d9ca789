"""Matrix congruence normal forms and constructive path recovery at level 2.

Two matrices ``M`` and ``V`` are congruent when ``P M P^T = V`` for an
invertible ``P``. Everything here is exact over the rationals. The axis
matrix ``C_m = I/2 + U_m`` only reaches its normal form after an extra
factor ``sqrt(2)``; we keep ``P`` rational and record that factor as
``scale_sq = 2`` (so ``scale_sq * P M P^T`` is the normal form).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .barycenter import bary
from .errors import ContextError, DomainError
from .rational import ONE, ZERO, format_array, frac_array, identity, ones, zeros
from .signatures import PwlPath, check_composition, sig_pwl, sig_segment

GAMMA2 = frac_array([[0, -1], [1, 1]])
H2NEG1 = frac_array([[0, 1], [-1, 0]])

CANONICAL_BLOCKS = {
    "Gamma2": GAMMA2,
    "H2neg1": H2NEG1,
    "One": frac_array([[1]]),
    "Zero": frac_array([[0]]),
}


@dataclass(frozen=True, eq=False)
class CongruenceResult:
    """``scale_sq * transform @ M @ transform.T == normal_form`` for the input ``M``.

    ``vector`` is set by simultaneous transforms: the image of the level-1
    part under ``transform``.
    """

    transform: np.ndarray
    normal_form: np.ndarray
    rank: int
    scale_sq: Fraction = ONE
    vector: np.ndarray | None = None

    def apply(self, M: np.ndarray) -> np.ndarray:
        P = self.transform
        return (P @ M @ P.T) * self.scale_sq

    def to_json_dict(self) -> dict:
        out = {
            "transform": format_array(self.transform),
            "scale_sq": f"{self.scale_sq.numerator}/{self.scale_sq.denominator}",
            "normal_form": format_array(self.normal_form),
            "rank": self.rank,
        }
        if self.vector is not None:
            out["vector"] = format_array(self.vector)
        return out


# building blocks


def unit_matrix(m: int, i: int, j: int) -> np.ndarray:
    """``E_ij`` with 1-based indices."""
    E = zeros((m, m))
    E[i - 1, j - 1] = ONE
    return E


def upper_ones(m: int) -> np.ndarray:
    """``U_m``: strictly upper triangular with ones above the diagonal."""
    U = zeros((m, m))
    for i in range(m):
        for j in range(i + 1, m):
            U[i, j] = ONE
    return U


def alternating_signs(m: int) -> np.ndarray:
    """``Q_m = diag(1, -1, 1, ...)``."""
    Q = zeros((m, m))
    for i in range(m):
        Q[i, i] = Fraction((-1) ** i)
    return Q


def axis_matrix(m: int) -> np.ndarray:
    """``C_m = I/2 + U_m``, the level-2 signature of ``Axis^m``."""
    return identity(m) * Fraction(1, 2) + upper_ones(m)


def skew_axis(m: int) -> np.ndarray:
    U = upper_ones(m)
    return U - U.T


def direct_sum(*blocks: np.ndarray) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = zeros((n, n))
    at = 0
    for b in blocks:
        k = b.shape[0]
        out[at : at + k, at : at + k] = b
        at += k
    return out


def canonical_matrices(m: int) -> dict[str, np.ndarray]:
    if m < 1:
        raise DomainError("m must be positive")
    return {
        "U": upper_ones(m),
        "Q": alternating_signs(m),
        "C": axis_matrix(m),
        "I": identity(m),
        "ones": ones((m, m)),
    }


def skew_normal_form(m: int) -> np.ndarray:
    """``H2(-1)`` repeated ``m // 2`` times, padded by a zero when ``m`` is odd."""
    blocks = [H2NEG1] * (m // 2) + ([CANONICAL_BLOCKS["Zero"]] if m % 2 else [])
    return direct_sum(*blocks)


def axis_normal_form(m: int) -> np.ndarray:
    if m % 2:
        return direct_sum(CANONICAL_BLOCKS["One"], *[H2NEG1] * ((m - 1) // 2))
    return direct_sum(GAMMA2, *[H2NEG1] * ((m - 2) // 2))


# normal forms of the axis building blocks


def skew_axis_transform(m: int) -> np.ndarray:
    """Lower unitriangular ``P`` with ``P (U_m - U_m^T) P^T`` in skew normal form.

    Step ``i`` adds row ``2i-1`` and subtracts row ``2i`` from every later row
    ``j >= 2i+1``; the steps commute into a single sum.
    """
    P = identity(m)
    for i in range(1, (m - 1) // 2 + 1):
        for j in range(2 * i + 1, m + 1):
            P[j - 1, 2 * i - 2] += 1
            P[j - 1, 2 * i - 1] -= 1
    return P


def skew_axis_nf(m: int) -> CongruenceResult:
    if m < 1:
        raise DomainError("m must be positive")
    P = skew_axis_transform(m)
    nf = skew_normal_form(m)
    assert np.array_equal(P @ skew_axis(m) @ P.T, nf)
    return CongruenceResult(P, nf, 2 * (m // 2))


def skew_axis_inverse(m: int) -> np.ndarray:
    """``Q_m (U_m - U_m^T) Q_m``, the inverse of ``U_m - U_m^T`` for even ``m``."""
    if m < 2 or m % 2:
        raise DomainError("U_m - U_m^T is invertible only for even m")
    Q = alternating_signs(m)
    return Q @ skew_axis(m) @ Q


def axis_transform(m: int) -> np.ndarray:
    """Rational part of the axis normal-form transform; the full one is ``sqrt(2)`` times this."""
    M = identity(m)
    for s in range(2, m + 1):
        M[s - 1, 0] -= 1
    for i in range(1, (m - 1) // 2 + 1):
        hi = m - 2 * (i - 1)
        for j in range(1, m - 2 * i + 1):
            M[j - 1, hi - 1] += 1
            M[j - 1, hi - 2] -= 1
    if (m + 1) % 2 and m >= 2:
        M[[0, 1]] = M[[1, 0]]
    return M


def axis_matrix_nf(m: int) -> CongruenceResult:
    if m < 1:
        raise DomainError("m must be positive")
    P = axis_transform(m)
    result = CongruenceResult(P, axis_normal_form(m), m, scale_sq=Fraction(2))
    assert np.array_equal(result.apply(axis_matrix(m)), result.normal_form)
    return result


# the barycenter matrix W_alpha


def w_alpha(alpha: Sequence[int]) -> np.ndarray:
    """Level-2 part of the barycenter of the axis-subpath signatures."""
    alpha = check_composition(alpha)
    n, m = len(alpha), sum(alpha)
    skew = direct_sum(*[skew_axis(a) for a in alpha])
    return skew * Fraction(1, 2 * n) + ones((m, m)) * Fraction(1, 2 * n * n)


def count_odd(alpha: Sequence[int]) -> int:
    return sum(1 for a in alpha if a % 2)


def w_alpha_props(alpha: Sequence[int]) -> dict:
    """Symmetric/skew split, ranks and (for all-even ``alpha``) the closed-form inverse."""
    alpha = check_composition(alpha)
    n, m = len(alpha), sum(alpha)
    W = w_alpha(alpha)
    sym = (W + W.T) * Fraction(1, 2)
    skew = (W - W.T) * Fraction(1, 2)
    out = {
        "transpose": W.T,
        "sym_part": sym,
        "skew_part": skew,
        "rank": linalg.rank(W),
        "sym_rank": linalg.rank(sym),
        "skew_rank": linalg.rank(skew),
        "inverse": None,
    }
    if all(a % 2 == 0 for a in alpha):
        Q = alternating_signs(m)
        out["inverse"] = Q @ W @ Q * (4 * n * n)
    return out


def w_alpha_rank(alpha: Sequence[int]) -> int:
    """Rank from the closed formula: ``m`` if all parts are even, else ``m - #odd + 1``."""
    alpha = check_composition(alpha)
    m, odd = sum(alpha), count_odd(alpha)
    return m if odd == 0 else m - odd + 1


def _rotation(alpha: tuple[int, ...], t: int) -> np.ndarray:
    """Permutation ``R`` with ``R W_alpha R^T = W_{alpha rotated to start at block t}``."""
    starts = np.cumsum((0,) + alpha)
    order = []
    for b in list(range(t, len(alpha))) + list(range(t)):
        order.extend(range(starts[b], starts[b + 1]))
    m = sum(alpha)
    R = zeros((m, m))
    for row, col in enumerate(order):
        R[row, col] = ONE
    return R


def _even_transform(alpha: tuple[int, ...]) -> np.ndarray:
    n, m = len(alpha), sum(alpha)
    Q = alternating_signs(m)
    block_upper = direct_sum(*[upper_ones(a) for a in alpha])
    P1 = identity(m) - (upper_ones(m).T - block_upper.T) @ Q
    S = zeros((m, m))
    for j in range(1, m + 1):
        for i in range(2 * (j // 2) + 1, m + 1):
            S[i - 1, j - 1] = ONE
    P2 = identity(m) + S @ Q * (n - 1)
    return P2 @ P1


def _skew_block_scaling(a: int, n: int) -> np.ndarray:
    """Diagonal ``diag(1, N, 1, N, ...)`` taking each ``H/2N`` pair to ``H/2``.

    Kernel coordinates (the trailing one of an odd block) stay unscaled.
    """
    D = identity(a)
    for p in range(a // 2):
        D[2 * p + 1, 2 * p + 1] = Fraction(n)
    return D


def _odd_transform(alpha: tuple[int, ...]) -> tuple[np.ndarray, int]:
    """Transform for a composition whose first part is odd, and the resulting rank."""
    n, m = len(alpha), sum(alpha)
    a1 = alpha[0]
    P1 = identity(m)
    for i in range(a1 + 1, m + 1):
        for j in range(1, a1 + 1):
            P1[i - 1, j - 1] = Fraction((-1) ** j)
    head = identity(a1) * n
    for j in range(1, (a1 - 1) // 2 + 1):
        for i in range(2 * j, a1 + 1):
            head[i - 1, 2 * j - 2] += n - 1
            head[i - 1, 2 * j - 1] -= n - 1
    P2 = direct_sum(head, identity(m - a1))
    # now C_{a1} ⊕ (1/2N) ⊕_i (U - U^T); bring every block to half its normal form
    blocks = [axis_transform(a1)]
    kernel = []
    at = a1
    for a in alpha[1:]:
        blocks.append(_skew_block_scaling(a, n) @ skew_axis_transform(a))
        if a % 2:
            kernel.append(at + a - 1)
        at += a
    B = direct_sum(*blocks)
    keep = [c for c in range(m) if c not in kernel]
    r = len(keep)
    Pi = zeros((m, m))
    for row, col in enumerate(keep + kernel):
        Pi[row, col] = ONE
    K = direct_sum(linalg.inverse(axis_transform(r)), identity(m - r))
    return K @ Pi @ B @ P2 @ P1, r


def w_alpha_nf(alpha: Sequence[int]) -> CongruenceResult:
    """Simultaneous transform ``P`` with ``P W P^T = C_r ⊕ 0`` and ``P (1/N) 1 = (1_r; 0)``."""
    alpha = check_composition(alpha)
    n, m = len(alpha), sum(alpha)
    W = w_alpha(alpha)
    if count_odd(alpha) == 0:
        P, r = _even_transform(alpha), m
    else:
        t = next(i for i, a in enumerate(alpha) if a % 2)
        rotated = alpha[t:] + alpha[:t]
        P, r = _odd_transform(rotated)
        P = P @ _rotation(alpha, t)
    nf = direct_sum(axis_matrix(r), zeros((m - r, m - r))) if r < m else axis_matrix(m)
    vec = P @ ones(m) * Fraction(1, n)
    expected_vec = np.concatenate([ones(r), zeros(m - r)])
    assert np.array_equal(P @ W @ P.T, nf), f"normal form construction failed for {alpha}"
    assert np.array_equal(vec, expected_vec), f"vector image wrong for {alpha}"
    return CongruenceResult(P, nf, r, vector=vec)


def recovery_order(d: int, alpha: Sequence[int]) -> int:
    """Minimal segment count of a path carrying the level-2 barycenter of ``alpha``-segment paths."""
    if d < 2:
        raise DomainError("recovery order is stated for d >= 2")
    return min(d, w_alpha_rank(alpha))


def recover_k2(paths: Sequence[PwlPath], level: int = 2) -> PwlPath:
    """Path with ``rank(W_alpha)`` segments whose level-2 signature is the barycenter.

    Stacks the increment matrices into ``A`` and returns ``A @ U`` where ``U``
    holds the first ``r`` columns of the inverse simultaneous transform.
    """
    if level != 2:
        raise DomainError("constructive recovery is only available at level 2")
    paths = tuple(paths)
    if not paths:
        raise DomainError("need at least one path")
    d = paths[0].dim
    if any(p.dim != d for p in paths):
        raise ContextError("paths must share their dimension")
    alpha = tuple(p.segments for p in paths)
    A = np.concatenate([p.increments for p in paths], axis=1)
    res = w_alpha_nf(alpha)
    U = linalg.inverse(res.transform)[:, : res.rank]
    recovered = PwlPath(A @ U)
    if __debug__:
        target = bary([sig_pwl(p, 2) for p in paths])
        assert sig_pwl(recovered, 2) == target
    return recovered


def k3_family_matrix(omega) -> np.ndarray:
    """The one-parameter family of 3-segment paths recovering the cubic barycenter example."""
    w = Fraction(omega)
    if w == 0:
        raise DomainError("omega must be nonzero")
    return frac_array([[1, -1, 1], [w, 1 / (8 * w) - w, -1 / (8 * w)]])


K3_SAMPLE = ((Fraction(1), Fraction(1, 2)), (Fraction(1), Fraction(-1, 2)))


def verify_recovery_k3(omega) -> bool:
    """Does ``A(omega) · Axis^3`` carry the level-3 barycenter of the two segments (1, ±1/2)?"""
    path = PwlPath(k3_family_matrix(omega))
    target = bary([sig_segment(v, 3) for v in K3_SAMPLE])
    return sig_pwl(path, 3) == target
