"""
Congruence normal forms behind the recovery
===========================================

The level-2 barycenter of axis subpaths is a matrix W_alpha. One rational
transform P brings it to the axis-path matrix C_r (padded by zeros) and
sends the mean vector to ones. Its inverse gives the recovered path.
"""

import numpy as np

from sigbary import w_alpha, w_alpha_nf
from sigbary.rational import format_array

for alpha in [(4, 6, 2), (5, 4, 3, 4), (1, 1)]:
    res = w_alpha_nf(alpha)
    P, W = res.transform, w_alpha(alpha)
    print(alpha, "rank", res.rank)
    print("  first row of P:", format_array(P[0]))
    print("  P W P^T is C_r + 0:", np.array_equal(P @ W @ P.T, res.normal_form))
