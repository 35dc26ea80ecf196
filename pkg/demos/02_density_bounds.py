"""
Lower bounds for the density of differing places
================================================

A moment table (A, B, C, D) summarizes the pole orders of the Rankin-Selberg
type products of two representations.  Each bound method turns it into an
explicit lower bound on the density of places where the traces differ.
"""

from fractions import Fraction

from multone import MomentTable, best_bound, build_example, exact_density, moment_table_from_model, scenario
from multone.bounds import SCENARIO_NAMES

# the named scenarios reproduce the closed-form constants exactly
for name in SCENARIO_NAMES[:-1]:
    d = scenario(name).derive()
    print(f"{name:22s} {d.method:20s} {d.closed_form:18s} {d.value:.12f}")

# a hand-written table: two 2-dim representations, D = 2
t = MomentTable(A=2, B=2, C=1, D=2)
d = best_bound(t)
print()
print("chosen:", d.chosen, d.closed_form)
for step in d.trace:
    print(f"  {step.name:32s} {step.output}")

# model moments from an actual pair of characters, compared with the truth
g216 = build_example("G216")
rho, twist = g216.rep("rho"), g216.rep("rho-twist")
t = moment_table_from_model(rho, twist)
bound = best_bound(t)
dens = exact_density(rho, twist)
print()
print("G216 rho vs rho-twist:", t.to_json())
print(f"bound {bound.closed_form} = {bound.value:.5f} <= density {dens} = {float(dens):.5f}:",
      bound.at_most(dens))
print("floor 1/(2n^2) for n=3:", Fraction(1, 18))
