#!/usr/bin/env python3
"""Build root data for the simple compact groups and dualize them.

Everything is exact integer arithmetic: a root datum is the 4-tuple
(X*, R, X_*, R_check) in coordinates where the pairing is the dot
product, and the Langlands dual is literally the swap of the two sides.
"""

from torusdual import build_simple, center, connection_index, dualize, fundamental_group
from torusdual.rootdata import datum_to_json

print("== SU(3) and its dual ==")
su3 = build_simple("A", 2, "sc")
psu3 = dualize(su3)
print(f"{su3} has {len(su3.roots)} roots")
print("simple roots:   ", su3.simple_roots)
print("simple coroots: ", su3.simple_coroots)
print(f"pi_1(SU3) = {fundamental_group(su3)}, center = {center(su3)}")
print(f"dual datum: {psu3}")
print(f"pi_1(dual) = {fundamental_group(psu3)}, center = {center(psu3)}")
print("note the swap: duality exchanges the fundamental group and the center")
print()

print("== the connection index is self-dual ==")
for type_, rank in [("A", 2), ("B", 2), ("C", 3), ("D", 4), ("F", 4), ("G", 2)]:
    rd = build_simple(type_, rank, "sc")
    f = connection_index(rd)
    assert f == connection_index(dualize(rd))
    print(f"  {type_}{rank}: f = |pi_1| * |Z| = {f} on both sides")
print()

print("== isogeny forms of D4 ==")
spin8 = build_simple("D", 4, "sc")
so8 = build_simple("D", 4, [[1, 0, 0, 0]])  # quotient by the vector class
pso8 = build_simple("D", 4, "adjoint")
for name, rd in [("Spin(8)", spin8), ("SO(8)", so8), ("PSO(8)", pso8)]:
    print(f"  {name:8s} pi_1 = {str(fundamental_group(rd)):12s} center = {center(rd)}")
print("SO(8) sits strictly between the cover and the adjoint form and is self-dual.")
print()

print("== dualizing twice is the identity ==")
for type_, rank, form in [("A", 3, "adjoint"), ("B", 3, "sc"), ("G", 2, "sc")]:
    rd = build_simple(type_, rank, form)
    assert dualize(dualize(rd)) == rd
    print(f"  dualize(dualize({rd})) == {rd}")
print()

print("== JSON shape of a datum (consumed by the CLI) ==")
print(datum_to_json(build_simple("A", 1, "sc")))
