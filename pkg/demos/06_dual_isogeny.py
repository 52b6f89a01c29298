"""
The dual canonical isogeny on torsion
=====================================

Kernel and image of the dual of the canonical f-isogeny, on ell-primary
torsion modules; the exponent is always preserved.
"""

from cm_degrees import dual_image, kernel_intersection, module_structure
from cm_degrees.dual_isogeny import inert, ramified, split

for spec in (split(2, 3, 2, 1), ramified(5, 3, 1), inert(3, 5, 2), inert(3, 5, 0)):
    s, img = module_structure(spec), dual_image(spec)
    print(f"{spec.kind}{spec.params} c={spec.c}: module {s}, kernel Z/{spec.ell}^{kernel_intersection(spec)}, image {img}")
