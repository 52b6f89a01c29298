"""Least degrees of CM points on modular curves X(M,N), with brute-force oracles.

Typical use::

    >>> from cm_degrees import order_from_discriminant, t_kf, t_qf
    >>> o = order_from_discriminant(-3)
    >>> t_kf(o, 1, 9).value, t_qf(o, 9).value
    (3, 3)
"""
__version__ = "0.1.0"

from .orders import (CapExceeded, Caps, CaseTag, InvalidInput, LocalCase, Order,
                     all_orders, caps, class_number, kronecker, make_order,
                     order_from_discriminant, ring_class_coincidence,
                     ring_class_relative_degree, splitting_case, x1_degree)
from .cartan_oracle import (CartanAction, OrbitReport, QuotientRing, RingElement,
                            cartan_order, enumerate_units, min_orbit, pair_orbits,
                            torsion_unit_image)
from .degree_formulas import Base, DegreeAnswer, PrimePowerLevel, t_kf, t_tilde
from .isogeny import (UNBOUNDED, IsogenyDepth, Unsupported, isogeny_depth,
                      kf_cyclic_isogeny_exists, kwon_qf_isogeny, real_ideal_exists,
                      real_ideal_exists_oracle, structural_isogeny_admissible)
from .rational_degrees import (QfCaseTrace, t_qf, t_qf_2_2b, t_qf_2_n, t_qf_full,
                               t_qf_prime_power)
from .dual_isogeny import (AbelianPair, TorsionModuleSpec, dual_image,
                           kernel_intersection, module_structure)
