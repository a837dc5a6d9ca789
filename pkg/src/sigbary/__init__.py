"""Exact signatures, Lie group barycenters and path recovery for piecewise linear paths."""
from .barycenter import bary, bary_k2, bary_pair, bary_residual, bary_solve_last
from .congruence_recovery import (
    CongruenceResult,
    axis_matrix_nf,
    canonical_matrices,
    recover_k2,
    recovery_order,
    skew_axis_inverse,
    skew_axis_nf,
    verify_recovery_k3,
    w_alpha,
    w_alpha_nf,
    w_alpha_props,
)
from .errors import ContextError, DomainError, SigbaryError
from .ncpoly import FreeAlgebra, NcPoly, Symbol, build_bary_poly, evaluate, graded_component
from .signatures import (
    PwlPath,
    congruence,
    levy_area,
    sig_axis,
    sig_axis_subpath,
    sig_pwl,
    sig_pwl_chen,
    sig_segment,
    signed_area,
)
from .tensor_algebra import (
    TensorSeq,
    exp,
    group_inverse,
    is_grouplike,
    lie_algebra_dim,
    log,
    shuffle_product,
)

__version__ = "0.1.0"
