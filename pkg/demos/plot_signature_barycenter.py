"""
Averaging two straight segments
===============================

Two planar segments are averaged in the free nilpotent group of level 2.
The result is again the signature of a single segment, and we recover it.
"""

from fractions import Fraction

from sigbary import PwlPath, bary, recover_k2, sig_pwl

# two one-segment paths, stored by their increment matrices
x1 = PwlPath.from_columns([[1, Fraction(1, 2)]])
x2 = PwlPath.from_columns([[Fraction(1, 2), 1]])

sample = [sig_pwl(x1, 2), sig_pwl(x2, 2)]
m = bary(sample)
print("barycenter:", m)

# the barycenter of segments is a segment at level 2
y = recover_k2([x1, x2])
print("recovered path:", y)
print("same signature:", sig_pwl(y, 2) == m)

###############################################################################
# The level-1 part is just the mean of the increments. Level 2 is not the
# mean of the level-2 parts; it corrects by the squares of the increments.

mean2 = (sample[0][2] + sample[1][2]) / 2
print("mean of level 2:\n", mean2)
print("barycenter level 2:\n", m[2])
