"""
Chebotarev sampling and pole orders
===================================

Frobenius classes are drawn at synthetic places with Chebotarev frequencies.
Dirichlet partial sums over those places grow like a multiple of log 1/(s-1)
as s -> 1, and the multiple is the pole order we want to read off.
"""

import numpy as np

from multone import build_example, empirical_lower_density, hecke_stream, pole_order_estimate
from multone.chebotarev import ell

tet = build_example("binary-tetrahedral")
pi, twist = tet.rep("pi"), tet.rep("pi-twist")

# a million places, seeded; the result does not depend on the thread count
hs = hecke_stream(tet.group, pi, twist, seed=42, count=10**6, threads=4)

counts = hs.stream.class_counts()
print("class frequencies :", np.round(counts / counts.sum(), 4))
print("expected          :", np.round([c.size / tet.group.order for c in tet.group.classes], 4))

for monomial in [(1, 1, 0, 0), (2, 2, 0, 0), (1, 0, 0, 1), (1, 1, 1, 1)]:
    est = pole_order_estimate(hs, monomial)
    print(f"{str(monomial):14s} pole order ~ {est.estimate:6.3f}   (fit residual {est.residual:.1e})")

# the raw ratio against log 1/(s-1) converges slowly on a finite stream
est = pole_order_estimate(hs, (1, 1, 0, 0))
for s, r in zip(est.s_grid, est.ell_ratios):
    print(f"  s = {s:5.2f}  ell = {ell(s):5.2f}  sum/ell = {r:.3f}")

rep = empirical_lower_density(hs)
print()
print(f"density of differing places: exact {rep.exact_density}, extrapolated {rep.extrapolated:.4f}")
