from fractions import Fraction
from pathlib import Path

import pytest

from polyparse import parse
from sigbary.barycenter import bary
from sigbary.errors import ContextError, DomainError
from sigbary.ncpoly import (
    FreeAlgebra,
    NcPoly,
    Symbol,
    bary_poly_parts,
    build_bary_poly,
    evaluate,
    graded_component,
    monomial_level,
    poly_arith,
    poly_exp,
    poly_inverse,
    poly_log,
    substitute,
)
from sigbary.signatures import PwlPath, sig_pwl, sig_segment

DATA = Path(__file__).parent / "data"
F = Fraction


def s(i, j):
    return Symbol("s", i, j)


def y(j):
    return Symbol("y", 0, j)


def test_products_truncate_by_level():
    A = FreeAlgebra(1, 2)
    assert len(A.s(1, 1) * A.s(1, 2)) == 0
    assert (A.s(1, 1) * A.s(1, 1)).terms == {(s(1, 1), s(1, 1)): 1}


def test_noncommutative():
    A = FreeAlgebra(2, 2)
    assert A.s(1, 1) * A.s(2, 1) != A.s(2, 1) * A.s(1, 1)


def test_symbol_validation():
    with pytest.raises(DomainError):
        NcPoly(2, 2, {(s(3, 1),): 1})
    with pytest.raises(DomainError):
        NcPoly(2, 2, {(s(1, 3),): 1})
    with pytest.raises(DomainError):
        NcPoly(2, 2, {(Symbol("y", 1, 1),): 1})


def test_context_checked():
    with pytest.raises(ContextError):
        FreeAlgebra(2, 2).one() + FreeAlgebra(2, 3).one()
    with pytest.raises(ContextError):
        poly_arith("mul", FreeAlgebra(1, 2).one(), FreeAlgebra(2, 2).one())
    with pytest.raises(DomainError):
        poly_arith("pow", FreeAlgebra(1, 2).one(), FreeAlgebra(1, 2).one())


def test_cubic_inverse_has_eight_terms():
    A = FreeAlgebra(2, 3)
    inv = poly_inverse(A.sample_sig(1))
    expected = {
        (): 1,
        (s(1, 1),): -1,
        (s(1, 2),): -1,
        (s(1, 3),): -1,
        (s(1, 1), s(1, 1)): 1,
        (s(1, 1), s(1, 2)): 1,
        (s(1, 2), s(1, 1)): 1,
        (s(1, 1), s(1, 1), s(1, 1)): -1,
    }
    assert inv.terms == expected
    assert inv * A.sample_sig(1) == 1


def test_cubic_product_has_ten_terms():
    A = FreeAlgebra(2, 3)
    assert len(A.sample_sig(1) * A.sample_sig(2)) == 10


def test_exp_log_inverse_preconditions():
    A = FreeAlgebra(1, 2)
    with pytest.raises(DomainError):
        poly_inverse(A.s(1, 1))
    with pytest.raises(DomainError):
        poly_exp(A.one())
    with pytest.raises(DomainError):
        poly_log(A.s(1, 1))
    assert poly_exp(poly_log(A.sample_sig(1))) == A.sample_sig(1)


def test_graded_components_sum_back():
    A = FreeAlgebra(2, 3)
    f = poly_log(poly_inverse(A.bary_sig()) * A.sample_sig(2))
    parts = [graded_component(f, j) for j in range(4)]
    for j, part in enumerate(parts):
        assert all(monomial_level(m) == j for m in part.terms)
    assert sum(parts[1:], parts[0]) == f
    with pytest.raises(DomainError):
        graded_component(f, 4)


def test_rendering():
    A = FreeAlgebra(2, 2)
    f = A.s(1, 1) * A.s(1, 1) * F(-1, 4) + A.y(2) + 3
    assert str(f) == "3 - 1/4*s_1^(1)*s_1^(1) + y^(2)"
    assert str(A.zero()) == "0"


@pytest.mark.parametrize("j,name,size", [(2, "f2_display.txt", 9), (3, "f3_display.txt", 31)])
def test_printed_bary_components(j, name, size):
    _, fs, _ = bary_poly_parts(2, 3)
    expected = parse((DATA / name).read_text())
    assert len(expected) == size
    assert fs[j - 1].terms == expected


def test_first_component_is_the_mean():
    _, fs, _ = bary_poly_parts(2, 3)
    assert fs[0].terms == {(s(1, 1),): F(1, 2), (s(2, 1),): F(1, 2)}


def test_level2_barycenter_polynomial():
    q = build_bary_poly(2, 2)
    A = FreeAlgebra(2, 2)
    mean1 = (A.s(1, 1) + A.s(2, 1)) * F(1, 2)
    expected = (
        A.one()
        + mean1
        + (A.s(1, 2) + A.s(2, 2)) * F(1, 2)
        - (A.s(1, 1) * A.s(1, 1) + A.s(2, 1) * A.s(2, 1)) * F(1, 4)
        + mean1 * mean1 * F(1, 2)
    )
    assert q == expected
    assert not q.has_bary_symbols()


def test_substitution():
    A = FreeAlgebra(1, 2)
    f = A.y(1) * A.s(1, 1) + A.y(2)
    g = substitute(f, {1: A.s(1, 1), 2: A.zero()})
    assert g == A.s(1, 1) * A.s(1, 1)
    with pytest.raises(DomainError):
        substitute(f, {1: A.s(1, 1)})


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2), (3, 3), (1, 3)])
def test_polynomial_route_equals_solver(n, k):
    paths = [[[1, F(1, 2)], [0, -1]], [[F(-2, 3), 1]], [[1, 1], [2, F(1, 4)], [-1, 0]]]
    sample = [sig_pwl(PwlPath.from_columns(c), k) for c in paths[:n]]
    assert evaluate(build_bary_poly(n, k), sample) == bary(sample)


def test_evaluate_binds_bary_symbols():
    sample = [sig_segment([1, 0], 3), sig_segment([0, 1], 3)]
    m = bary(sample)
    g, fs, _ = bary_poly_parts(2, 3)
    assert evaluate(g, sample, m).is_zero()
    with pytest.raises(DomainError):
        evaluate(g, sample)
    with pytest.raises(ContextError):
        evaluate(g, sample[:1], m)


def test_memoised():
    assert build_bary_poly(2, 3) == build_bary_poly(2, 3)
    assert bary_poly_parts(2, 3) is bary_poly_parts(2, 3)
