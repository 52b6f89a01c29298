"""
Cartan orbits by brute force
============================

The unit group of O/NO acts on pairs (P, Q) generating Z/M x Z/N.  The
smallest orbit is the least degree; this oracle enumerates it directly.
"""

from cm_degrees import CartanAction, cartan_order, order_from_discriminant, pair_orbits

o = order_from_discriminant(-16)

# %%
# The unit count agrees with the product formula.
act = CartanAction(o, 12)
print(act.unit_count, cartan_order(o, 12))

# %%
# Orbit sizes on points of order 4, full and modulo the torsion units.
rep = pair_orbits(o, 1, 4)
print(sorted(rep.orbit_sizes), sorted(rep.reduced_orbit_sizes))

# %%
# At M = N the action is free, so every orbit has the size of the group.
rep = pair_orbits(o, 6, 6)
print(set(rep.orbit_sizes), cartan_order(o, 6))

# %%
# For ell | f the orbits on order-ell^2 points are one big one and ell small ones.
print(sorted(pair_orbits(order_from_discriminant(-27), 1, 9).orbit_sizes))
