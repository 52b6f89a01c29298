"""
Closed-form degrees over K(f)
=============================

The closed forms reproduce the oracle: prime-power minima multiply, and the
torsion units divide the product out.
"""

from cm_degrees import PrimePowerLevel, min_orbit, order_from_discriminant, t_kf, t_tilde
from cm_degrees.degree_formulas import t_tilde_parts

o = order_from_discriminant(-4)

# %%
# Least orbit sizes on prime-power levels, closed form next to the oracle.
for ell, a, b in [(2, 1, 2), (3, 0, 1), (3, 0, 2), (5, 1, 1)]:
    closed = t_tilde(o, PrimePowerLevel(ell, a, b))
    oracle = min_orbit(o, ell**a, ell**b)[0]
    print(f"ell={ell} a={a} b={b}: {closed} {oracle}")

# %%
# A composite level: product of the parts, divided by w = 4.
print(t_tilde_parts(o, 2, 12), t_kf(o, 2, 12).value, min_orbit(o, 2, 12)[1])

# %%
# The cubic point of order 9 on the order of discriminant -3.
print(t_kf(order_from_discriminant(-3), 1, 9))
