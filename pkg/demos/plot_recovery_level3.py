"""
A one-parameter family of recovered paths
=========================================

At level 3 the barycenter of the segments (1, 1/2) and (1, -1/2) is carried
by a whole family of three-segment paths. Each of them encloses zero signed
area, and we draw a few of them.
"""

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from sigbary import PwlPath, signed_area, verify_recovery_k3
from sigbary.congruence_recovery import k3_family_matrix

omegas = [Fraction(1, 4), Fraction(3, 4), Fraction(-1, 4), Fraction(7, 5)]

fig, ax = plt.subplots(figsize=(5, 4))
for w in omegas:
    path = PwlPath(k3_family_matrix(w))
    print(f"omega={w}: recovers={verify_recovery_k3(w)}, signed area={signed_area(path)}")
    verts = path.vertices()
    ax.plot([float(v) for v in verts[0]], [float(v) for v in verts[1]], marker="o", label=f"omega={w}")
ax.legend()
fig.savefig("recovery_level3.svg")
