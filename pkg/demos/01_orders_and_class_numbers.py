"""
Orders, discriminants and class numbers
=======================================

An imaginary quadratic order is fixed by its fundamental discriminant and
conductor.  Everything downstream is indexed by that pair.
"""

from cm_degrees import order_from_discriminant, make_order, class_number, splitting_case
from cm_degrees.orders import ring_class_relative_degree, reduced_forms

# %%
# A total discriminant is split into conductor and fundamental part.
for delta in (-3, -12, -16, -36, -60, -108):
    o = order_from_discriminant(delta)
    print(f"{delta:>5}: delta_k={o.delta_k:>4} f={o.f} w={o.w}")

# %%
# Class numbers come from counting reduced forms.
print(reduced_forms(-23))
print({d: class_number(d) for d in (-3, -4, -23, -47, -71)})

# %%
# h(O) factors as h(O_K) times the relative ring class degree.
o = make_order(-7, 3)
print(class_number(o.delta), class_number(o.delta_k) * ring_class_relative_degree(o))

# %%
# How a prime sits in the order decides which degree formula applies.
for ell in (2, 3, 5, 7):
    print(ell, splitting_case(make_order(-7, 2), ell))
