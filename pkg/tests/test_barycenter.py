from fractions import Fraction

import pytest

import oracles
from sigbary.barycenter import bary, bary_k2, bary_pair, bary_residual, bary_solve_last
from sigbary.errors import ContextError, DomainError
from sigbary.signatures import PwlPath, congruence, sig_pwl, sig_segment
from sigbary.rational import frac_array
from sigbary.tensor_algebra import TensorSeq, exp, group_inverse, log

F = Fraction


@pytest.fixture
def example_pair():
    return [sig_segment([1, F(1, 2)], 2), sig_segment([F(1, 2), 1], 2)]


def _x(k=3):
    return sig_pwl(PwlPath.from_columns([[1, 2], [F(-1, 2), 1], [0, -1]]), k)


def test_example_pair_barycenter(example_pair):
    m = bary(example_pair)
    assert list(m[1]) == [F(3, 4), F(3, 4)]
    assert m[2].tolist() == [[F(9, 32)] * 2] * 2
    assert bary_k2(example_pair) == m == bary_pair(*example_pair)


def test_k2_closed_form_matches_oracle():
    cols = [[1, 2], [F(1, 3), -1], [0, F(5, 2)]]
    sample = [sig_segment(c, 2) for c in cols]
    mean1, lvl2 = oracles.bary_level2([c for c in cols], [s[2].tolist() for s in sample])
    m = bary(sample)
    assert list(m[1]) == mean1
    assert m[2].tolist() == lvl2


def test_residual_vanishes_only_at_barycenter(example_pair):
    assert bary_residual(bary(example_pair), example_pair).is_zero()
    assert not bary_residual(TensorSeq.one(2, 2), example_pair).is_zero()


def test_inverse_pair_averages_to_one():
    x = _x()
    assert bary([x, group_inverse(x)]) == TensorSeq.one(2, 3)
    assert bary_residual(TensorSeq.one(2, 3), [x, group_inverse(x)]).is_zero()


def test_power_examples():
    x = _x()
    one = TensorSeq.one(2, 3)
    assert bary([x**2, one]) == x
    assert bary([x**6, x**2, x]) == x**3


def test_single_member_is_its_own_barycenter():
    x = _x()
    assert bary([x]) == x


def test_not_the_lie_algebra_mean_at_level_three():
    sample = [sig_segment([1, 0], 3), sig_segment([0, 1], 3), sig_segment([1, 1], 3)]
    naive = exp((log(sample[0]) + log(sample[1]) + log(sample[2])) * F(1, 3))
    assert bary(sample) != naive


def test_level2_log_is_mean_of_logs():
    sample = [_x(2), sig_segment([3, -1], 2), sig_segment([0, 1], 2)]
    assert log(bary(sample))[2].tolist() == (sum(log(x)[2] for x in sample) / 3).tolist()


def test_solve_last_examples():
    x = _x()
    one = TensorSeq.one(2, 3)
    assert bary_solve_last([one], x) == x**2
    last = bary_solve_last([x, x**2], x**3, n=3)
    assert last == x**6


def test_solve_last_count_mismatch():
    with pytest.raises(DomainError):
        bary_solve_last([_x()], _x(), n=3)


def test_validation():
    with pytest.raises(DomainError):
        bary([])
    with pytest.raises(ContextError):
        bary([_x(2), _x(3)])
    with pytest.raises(DomainError):
        bary([TensorSeq.from_flat(1, 2, [1, [1], [0]])])
    with pytest.raises(DomainError):
        bary_k2([_x(3)])
    with pytest.raises(TypeError):
        bary([frac_array([1])])


def test_congruence_equivariance():
    sample = [_x(), sig_segment([1, -1], 3)]
    A = frac_array([[1, 2], [0, 1], [F(1, 2), -1]])
    assert bary([congruence(A, x) for x in sample]) == congruence(A, bary(sample))
