"""Kernel and image of the dual canonical isogeny on ell-primary torsion.

Groups Z/ell^e1 x Z/ell^e2 are represented by their exponent pairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from sympy import isprime

from .orders import InvalidInput


@dataclass(frozen=True)
class AbelianPair:
    inv1: int
    inv2: int

    def __post_init__(self):
        if not 0 <= self.inv1 <= self.inv2:
            raise ValueError(f"need 0 <= inv1 <= inv2, got {self.inv1}, {self.inv2}")

    def order(self, ell: int) -> int:
        return ell ** (self.inv1 + self.inv2)

    def exponent(self, ell: int) -> int:
        return ell**self.inv2


@dataclass(frozen=True)
class TorsionModuleSpec:
    """kind is 'split' (params a <= b), 'ramified' (d) or 'inert' (b)."""

    kind: str
    params: Tuple[int, ...]
    ell: int
    c: int

    def __post_init__(self):
        arity = {"split": 2, "ramified": 1, "inert": 1}
        if self.kind not in arity or len(self.params) != arity[self.kind]:
            raise InvalidInput(f"bad torsion module spec {self.kind}{self.params}")
        if not isprime(self.ell) or self.c < 0 or min(self.params) < 0:
            raise InvalidInput("need a prime ell and nonnegative parameters")
        if self.kind == "split" and self.params[0] > self.params[1]:
            raise InvalidInput("split case needs a <= b")


def split(a: int, b: int, ell: int, c: int) -> TorsionModuleSpec:
    return TorsionModuleSpec("split", (a, b), ell, c)


def ramified(d: int, ell: int, c: int) -> TorsionModuleSpec:
    return TorsionModuleSpec("ramified", (d,), ell, c)


def inert(b: int, ell: int, c: int) -> TorsionModuleSpec:
    return TorsionModuleSpec("inert", (b,), ell, c)


def module_structure(spec: TorsionModuleSpec) -> AbelianPair:
    if spec.kind == "split":
        return AbelianPair(*spec.params)
    if spec.kind == "ramified":
        d = spec.params[0]
        return AbelianPair(d // 2, d - d // 2)
    b = spec.params[0]
    return AbelianPair(b, b)


def kernel_intersection(spec: TorsionModuleSpec) -> int:
    """Exponent k with (kernel of the dual) meet (torsion module) = Z/ell^k."""
    return min(module_structure(spec).inv1, spec.c)


def dual_image(spec: TorsionModuleSpec) -> AbelianPair:
    s = module_structure(spec)
    return AbelianPair(max(s.inv1 - spec.c, 0), s.inv2)
