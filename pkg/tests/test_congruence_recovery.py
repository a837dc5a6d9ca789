import json
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

import oracles
from sigbary import linalg
from sigbary.barycenter import bary
from sigbary.congruence_recovery import (
    GAMMA2,
    H2NEG1,
    alternating_signs,
    axis_matrix,
    axis_matrix_nf,
    canonical_matrices,
    direct_sum,
    k3_family_matrix,
    recover_k2,
    recovery_order,
    skew_axis,
    skew_axis_inverse,
    skew_axis_nf,
    verify_recovery_k3,
    w_alpha,
    w_alpha_nf,
    w_alpha_props,
    w_alpha_rank,
)
from sigbary.errors import ContextError, DomainError
from sigbary.rational import frac_array, identity, ones, zeros
from sigbary.signatures import PwlPath, compositions, sig_axis_subpath, sig_pwl, sig_segment, signed_area

F = Fraction
GOLDEN = json.loads((Path(__file__).parent / "data" / "golden_matrices.json").read_text())


def test_canonical_blocks():
    assert GAMMA2.tolist() == [[0, -1], [1, 1]]
    assert H2NEG1.tolist() == [[0, 1], [-1, 0]]
    c = canonical_matrices(3)
    assert c["C"].tolist() == [[F(1, 2), 1, 1], [0, F(1, 2), 1], [0, 0, F(1, 2)]]
    assert c["Q"].tolist() == [[1, 0, 0], [0, -1, 0], [0, 0, 1]]
    with pytest.raises(DomainError):
        canonical_matrices(0)


def test_m8_skew_transform_display():
    res = skew_axis_nf(8)
    assert np.array_equal(res.transform, frac_array(GOLDEN["skew_transform_m8"]))
    assert np.array_equal(res.normal_form, direct_sum(*[H2NEG1] * 4))
    assert res.rank == 8


@pytest.mark.parametrize("m", range(1, 10))
def test_skew_nf_all_sizes(m):
    res = skew_axis_nf(m)
    assert np.array_equal(res.apply(skew_axis(m)), res.normal_form)
    assert res.rank == linalg.rank(skew_axis(m))


@pytest.mark.parametrize("m", [2, 4, 6, 8])
def test_skew_inverse(m):
    assert np.array_equal(skew_axis_inverse(m) @ skew_axis(m), identity(m))


def test_skew_inverse_needs_even_size():
    with pytest.raises(DomainError):
        skew_axis_inverse(3)


@pytest.mark.parametrize("m", range(1, 10))
def test_axis_nf_with_declared_scale(m):
    res = axis_matrix_nf(m)
    assert res.scale_sq == 2
    assert np.array_equal(res.apply(axis_matrix(m)), res.normal_form)
    lead = [[1]] if m % 2 else GAMMA2.tolist()
    assert res.normal_form[: len(lead), : len(lead)].tolist() == lead


def test_w462_display():
    expected = frac_array(GOLDEN["w462_skew_times6"]) / 6 + ones((12, 12)) / GOLDEN["w462_ones_denominator"]
    assert np.array_equal(w_alpha((4, 6, 2)), expected)


@pytest.mark.parametrize("alpha", [a for m in range(1, 7) for a in compositions(m)])
def test_w_alpha_is_level2_barycenter_of_axis_subpaths(alpha):
    m = sum(alpha)
    sample = [sig_axis_subpath(alpha, i, 2) for i in range(1, len(alpha) + 1)]
    assert np.array_equal(bary(sample)[2], w_alpha(alpha))
    assert w_alpha(alpha).tolist() == oracles.w_alpha_entries(alpha)
    assert m == w_alpha(alpha).shape[0]


@pytest.mark.parametrize("alpha", [(2, 4), (1, 2, 3), (3, 3), (2, 2, 2), (5,)])
def test_w_alpha_props(alpha):
    n, m = len(alpha), sum(alpha)
    W = w_alpha(alpha)
    p = w_alpha_props(alpha)
    assert np.array_equal(p["transpose"], -W + ones((m, m)) / (n * n))
    assert np.array_equal(p["sym_part"], ones((m, m)) / (2 * n * n))
    assert p["sym_rank"] == 1
    assert p["skew_rank"] == m - sum(a % 2 for a in alpha)
    assert p["rank"] == w_alpha_rank(alpha)
    if all(a % 2 == 0 for a in alpha):
        assert np.array_equal(p["inverse"] @ W, identity(m))
        Q = alternating_signs(m)
        assert np.array_equal(p["inverse"], 2 * Q @ (2 * n * n * p["skew_part"] + ones((m, m))) @ Q)
    else:
        assert p["inverse"] is None


def test_462_simultaneous_transform_display():
    res = w_alpha_nf((4, 6, 2))
    P = frac_array(GOLDEN["transform_462"])
    assert np.array_equal(res.transform, P)
    assert np.array_equal(P @ w_alpha((4, 6, 2)) @ P.T, axis_matrix(12))
    assert np.array_equal(P @ ones(12) / 3, ones(12))


def test_5434_simultaneous_transform_display():
    res = w_alpha_nf((5, 4, 3, 4))
    P = frac_array(GOLDEN["transform_5434"])
    assert np.array_equal(res.transform, P)
    target = direct_sum(axis_matrix(15), zeros((1, 1)))
    assert np.array_equal(P @ w_alpha((5, 4, 3, 4)) @ P.T, target)
    assert np.array_equal(P @ ones(16) / 4, np.concatenate([ones(15), zeros(1)]))
    assert res.rank == 15


@pytest.mark.parametrize("alpha", [a for m in range(1, 9) for a in compositions(m)])
def test_every_small_composition(alpha):
    res = w_alpha_nf(alpha)
    assert res.rank == linalg.rank(w_alpha(alpha))
    assert linalg.det(res.transform) != 0


def test_recovery_orders():
    assert recovery_order(2, (1, 1)) == 1
    assert recovery_order(2, (2, 1)) == 2
    assert recovery_order(2, (1, 1, 1)) == 1
    for d in range(2, 15):
        assert recovery_order(d, (4, 6, 2)) == min(d, 12)
    with pytest.raises(DomainError):
        recovery_order(1, (1, 1))


def test_recover_example_pair():
    paths = [PwlPath.from_columns([[1, F(1, 2)]]), PwlPath.from_columns([[F(1, 2), 1]])]
    out = recover_k2(paths)
    assert out.increments.tolist() == [[F(3, 4)], [F(3, 4)]]


@pytest.mark.parametrize(
    "cols",
    [
        [[[1, 2], [0, 1]], [[-1, 1], [F(1, 2), 0], [1, 1]]],
        [[[1, 0, 2]], [[0, 1, -1], [1, 1, 1]], [[2, 0, 0], [0, 3, 0]]],
        [[[1, 1]], [[2, -1]], [[0, 1]], [[F(1, 3), 0]]],
    ],
)
def test_recover_reproduces_barycenter(cols):
    paths = [PwlPath.from_columns(c) for c in cols]
    out = recover_k2(paths)
    assert sig_pwl(out, 2) == bary([sig_pwl(p, 2) for p in paths])
    assert out.segments == w_alpha_rank([p.segments for p in paths])


def test_recover_validation():
    with pytest.raises(DomainError):
        recover_k2([])
    with pytest.raises(ContextError):
        recover_k2([PwlPath.from_columns([[1, 2]]), PwlPath.from_columns([[1, 2, 3]])])
    with pytest.raises(DomainError):
        recover_k2([PwlPath.from_columns([[1, 2]])], level=3)


@pytest.mark.parametrize("omega", [F(1, 4), F(3, 4), F(-1, 4), F(7, 5)])
def test_k3_family(omega):
    assert verify_recovery_k3(omega)
    assert signed_area(PwlPath(k3_family_matrix(omega))) == 0


def test_k3_family_second_vertex():
    for omega in (F(1, 4), F(-2, 3)):
        verts = PwlPath(k3_family_matrix(omega)).vertices()
        assert verts[:, 2].tolist() == [0, 1 / (8 * omega)]


def test_k3_rejects_zero():
    with pytest.raises(DomainError):
        verify_recovery_k3(0)


def test_k3_recovery_of_unit_segments():
    path = PwlPath(frac_array([[F(3, 4), F(-1, 4), 0], [F(1, 4), F(-3, 4), 1]]))
    target = bary([sig_segment([1, 0], 3), sig_segment([0, 1], 3)])
    assert sig_pwl(path, 3) == target


def test_json_view():
    data = w_alpha_nf((1, 1)).to_json_dict()
    assert data["transform"] == [["2/1", "0/1"], ["-1/1", "1/1"]]
    assert data["rank"] == 1
    assert data["vector"] == ["1/1", "0/1"]
