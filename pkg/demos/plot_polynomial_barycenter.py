"""
The barycenter as a polynomial
==============================

For fixed sample size N and level k the barycenter is a non-commutative
polynomial in the sample entries. We build it once and evaluate it.
"""

from sigbary import PwlPath, bary, build_bary_poly, evaluate, sig_pwl
from sigbary.ncpoly import bary_poly_parts

g, fs, ps = bary_poly_parts(2, 3)
for j, f in enumerate(fs, start=1):
    print(f"f_{j} has {len(f)} terms")
print("f_2 =", fs[1])

q = build_bary_poly(2, 3)
print("q has", len(q), "terms and no barycenter symbols:", not q.has_bary_symbols())

paths = [PwlPath.from_columns([[1, 0], [0, 1]]), PwlPath.from_columns([[2, -1]])]
sample = [sig_pwl(p, 3) for p in paths]
print("polynomial route agrees with the solver:", evaluate(q, sample) == bary(sample))
