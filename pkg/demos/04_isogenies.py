"""
Rational cyclic isogenies
=========================

Kwon's numeric criterion, the ideal-theoretic criterion and a lattice search
for real ideals all give the same answer; the depths m and M summarize the
ell-power part.
"""

from cm_degrees import (isogeny_depth, kf_cyclic_isogeny_exists, kwon_qf_isogeny,
                        order_from_discriminant, real_ideal_exists, real_ideal_exists_oracle,
                        structural_isogeny_admissible)
from cm_degrees.isogeny import real_ideals

o = order_from_discriminant(-60)

# %%
# Levels admitting a Q(f)-rational cyclic isogeny, three ways.
print([n for n in range(1, 61) if kwon_qf_isogeny(o, n)])
print([n for n in range(1, 61) if structural_isogeny_admissible(o, n)])

# %%
# Real ideals found by enumerating Hermite lattices.
print(real_ideals(o, 15))
print(real_ideal_exists(o, 15), real_ideal_exists_oracle(o, 15))

# %%
# The discriminants -4 and -3 are exceptional.
for delta in (-4, -3):
    print(delta, [n for n in range(1, 51) if kwon_qf_isogeny(order_from_discriminant(delta), n)])

# %%
# Depths: M is unbounded when ell splits.
for delta, ell in [(-7, 2), (-32, 2), (-4, 2), (-63, 3)]:
    d = isogeny_depth(order_from_discriminant(delta), ell)
    print(delta, ell, d.m, d.m_sup)

# %%
# Over K(f) the question becomes whether delta is a square mod 4N.
print(kf_cyclic_isogeny_exists(order_from_discriminant(-7), 4),
      kf_cyclic_isogeny_exists(order_from_discriminant(-36), 4))
