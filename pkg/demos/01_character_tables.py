"""
Character tables of the catalog groups
======================================

Build a few finite groups from generators, compute their character tables
exactly, and look at how the adjoint of a distinguished representation
splits.
"""

from multone import adjoint_character, build_example, list_catalog, sym_power

# the catalog: name, order, distinguished degrees
for row in list_catalog():
    print(f"{row['name']:22s} order {row['order']:5d}  degrees {row['distinguished_degrees']}")

# binary tetrahedral: pi is the natural 2-dim representation
tet = build_example("binary-tetrahedral")
print()
print(tet.table.labels, tet.table.degrees)

pi = tet.rep("pi")
print("Ad(pi)      =", adjoint_character(pi))
print("Sym^4(pi)   =", sym_power(pi, 4))

Ad = tet.rep("Ad")
print("Ad(Ad(pi))  =", adjoint_character(Ad))

# Hessian group of order 216: Ad of the 3-dim rho is irreducible of degree 8
g216 = build_example("G216")
print()
print("G216 Ad(rho) =", adjoint_character(g216.rep("rho")))

# a Heisenberg group cannot do that: every irreducible has 3-power degree
ex = build_example("extraspecial(3,1)")
print("extraspecial(3,1) Ad(rho) =", adjoint_character(ex.rep("rho")))
