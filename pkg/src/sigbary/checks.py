"""Randomized exact property checks, run by ``sigbary verify``.

Each check draws its instances from a seeded ``random.Random`` so a run is
reproducible; every comparison is literal equality of rationals.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .barycenter import bary, bary_pair, bary_residual, bary_solve_last
from .congruence_recovery import recover_k2
from .signatures import PwlPath, congruence, sig_pwl, sig_pwl_chen
from .tensor_algebra import TensorSeq, exp, group_inverse, is_grouplike, log, shuffle_mass
from .rational import frac_array


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    instances: int
    detail: str = ""


def random_fraction(rng: random.Random, span: int = 2, den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span * den, span * den), rng.randint(1, den))


def random_path(rng: random.Random, d: int, segments: int) -> PwlPath:
    return PwlPath(frac_array([[random_fraction(rng) for _ in range(segments)] for _ in range(d)]))


def random_group_element(rng: random.Random, d: int, k: int) -> TensorSeq:
    """Signature of a short random path; by Chow's theorem these are generic enough."""
    return sig_pwl(random_path(rng, d, rng.randint(1, 3)), k)


def random_setting(rng: random.Random, max_d: int = 3, max_k: int = 3, max_n: int = 4):
    return rng.randint(1, max_d), rng.randint(1, max_k), rng.randint(1, max_n)


def random_sample(rng: random.Random, d: int, k: int, n: int) -> list[TensorSeq]:
    return [random_group_element(rng, d, k) for _ in range(n)]


def _residual_zero(rng):
    d, k, n = random_setting(rng)
    xs = random_sample(rng, d, k, n)
    return bary_residual(bary(xs), xs).is_zero()


def _left_equivariance(rng):
    d, k, n = random_setting(rng)
    xs, g = random_sample(rng, d, k, n), random_group_element(rng, d, k)
    return bary([g * x for x in xs]) == g * bary(xs)


def _right_equivariance(rng):
    d, k, n = random_setting(rng)
    xs, g = random_sample(rng, d, k, n), random_group_element(rng, d, k)
    return bary([x * g for x in xs]) == bary(xs) * g


def _inverse_equivariance(rng):
    d, k, n = random_setting(rng)
    xs = random_sample(rng, d, k, n)
    return bary([group_inverse(x) for x in xs]) == group_inverse(bary(xs))


def _permutation_invariance(rng):
    d, k, n = random_setting(rng)
    xs = random_sample(rng, d, k, n)
    shuffled = xs[:]
    rng.shuffle(shuffled)
    return bary(shuffled) == bary(xs)


def _power_sample(rng):
    d, k, n = random_setting(rng)
    x = random_group_element(rng, d, k)
    u = [rng.randint(0, 4) for _ in range(n - 1)]
    u.append(n * rng.randint(1, 3) - sum(u) % n)
    return bary([x ** e for e in u]) == x ** (sum(u) // n)


def _pair_formula(rng):
    d, k, _ = random_setting(rng)
    x1, x2 = random_sample(rng, d, k, 2)
    return bary_pair(x1, x2) == bary([x1, x2])


def _solve_last_round_trip(rng):
    d, k, n = random_setting(rng)
    n = max(n, 2)
    fixed, target = random_sample(rng, d, k, n - 1), random_group_element(rng, d, k)
    last = bary_solve_last(fixed, target)
    return is_grouplike(last) and bary(fixed + [last]) == target


def _chen(rng):
    d, k, _ = random_setting(rng)
    p, q = random_path(rng, d, rng.randint(1, 3)), random_path(rng, d, rng.randint(1, 3))
    return sig_pwl(p.concat(q), k) == sig_pwl(p, k) * sig_pwl(q, k) and sig_pwl(p, k) == sig_pwl_chen(p, k)


def _signature_congruence(rng):
    d, k, _ = random_setting(rng)
    e = rng.randint(1, 3)
    p = random_path(rng, d, rng.randint(1, 3))
    A = frac_array([[random_fraction(rng) for _ in range(d)] for _ in range(e)])
    return sig_pwl(PwlPath(A @ p.increments), k) == congruence(A, sig_pwl(p, k))


def _bary_congruence(rng):
    d, k, n = random_setting(rng)
    xs = random_sample(rng, d, k, n)
    A = frac_array([[random_fraction(rng) for _ in range(d)] for _ in range(rng.randint(1, 3))])
    return bary([congruence(A, x) for x in xs]) == congruence(A, bary(xs))


def _grouplike_closure(rng):
    d, k, _ = random_setting(rng)
    x, y = random_sample(rng, d, k, 2)
    return is_grouplike(x * y) and is_grouplike(group_inverse(x))


def _exp_log(rng):
    d, k, _ = random_setting(rng)
    x = random_group_element(rng, d, k)
    z = log(x)
    return exp(z) == x and log(exp(z)) == z and z.constant == 0


def _shuffle_mass(rng):
    u = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 4)))
    v = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 4)))
    return shuffle_mass(u, v) == comb(len(u) + len(v), len(u))


def _segments_in_segment_out(rng):
    d, _, n = random_setting(rng)
    paths = [random_path(rng, d, 1) for _ in range(n)]
    out = recover_k2(paths)
    return out.segments == 1 and sig_pwl(out, 2) == bary([sig_pwl(p, 2) for p in paths])


CHECKS: dict[str, Callable[[random.Random], bool]] = {
    "barycenter residual is zero": _residual_zero,
    "left equivariance": _left_equivariance,
    "right equivariance": _right_equivariance,
    "inverse equivariance": _inverse_equivariance,
    "congruence equivariance of the barycenter": _bary_congruence,
    "permutation invariance": _permutation_invariance,
    "power-sample law": _power_sample,
    "two-point closed form": _pair_formula,
    "solve-last round trip": _solve_last_round_trip,
    "Chen identity": _chen,
    "signature congruence equivariance": _signature_congruence,
    "group-like closure": _grouplike_closure,
    "exp/log round trip": _exp_log,
    "shuffle mass is binomial": _shuffle_mass,
    "segments in, segment out (k=2)": _segments_in_segment_out,
}


def run_checks(count: int = 50, seed: int = 0, names=None) -> list[CheckOutcome]:
    outcomes = []
    for name, check in CHECKS.items():
        if names is not None and name not in names:
            continue
        rng = random.Random(f"{seed}:{name}")
        failures = [i for i in range(count) if not check(rng)]
        detail = f"first failing instance #{failures[0]}" if failures else ""
        outcomes.append(CheckOutcome(name, not failures, count, detail))
    return outcomes
