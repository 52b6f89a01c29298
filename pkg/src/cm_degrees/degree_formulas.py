"""Closed forms for least degrees of CM points on X(M,N) over K(f)."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Tuple

from sympy import isprime

from .orders import (CaseTag, InvalidInput, Order, check_cap, current_caps,
                     kronecker, prime_powers, splitting_case, vp)


class Base(enum.Enum):
    KF = "kf"
    QF = "qf"


@dataclass(frozen=True)
class DegreeAnswer:
    value: int
    base: Base
    multiples_closed: bool

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("degree must be positive")
        if self.base is Base.KF and not self.multiples_closed:
            raise ValueError("K(f)-side degrees are always closed under multiples")


@dataclass(frozen=True)
class PrimePowerLevel:
    ell: int
    a: int
    b: int

    def __post_init__(self):
        if not isprime(self.ell):
            raise InvalidInput(f"{self.ell} is not prime")
        if self.b < 1 or not 0 <= self.a <= self.b:
            raise InvalidInput(f"need 0 <= a <= b and b >= 1, got a={self.a}, b={self.b}")
        check_cap(self.ell**self.b, current_caps().max_n, "ell^b")


def level_parts(m: int, n: int) -> List[PrimePowerLevel]:
    """Split M | N into prime-power levels (ell, ord_ell M, ord_ell N)."""
    if m < 1 or n % m:
        raise InvalidInput(f"M={m} must divide N={n}")
    return [PrimePowerLevel(p, vp(m, p), b) for p, b in prime_powers(n)]


def t_tilde(order: Order, level: PrimePowerLevel) -> int:
    """Least Cartan orbit size on (ell^a, ell^b)-pairs."""
    ell, a, b = level.ell, level.a, level.b
    if ell**b == 2:
        chi = kronecker(order.delta, 2)
        if a == 1:
            return 2 - chi  # = #C_2, the action on (2,2)-pairs being free
        return 3 if chi == -1 else 1
    case = splitting_case(order, ell)
    c = case.c
    tag = case.tag
    if tag is CaseTag.INERT:
        return ell ** (2 * b - 2) * (ell * ell - 1)
    if tag is CaseTag.SPLIT_PRIME_TO_F:
        if a == 0:
            return ell ** (b - 1) * (ell - 1)
        return ell ** (a + b - 2) * (ell - 1) ** 2
    if tag is CaseTag.SPLIT_ABOVE_F:
        return ell ** (a + b - 1) * (ell - 1)
    if tag is CaseTag.RAMIFIED:
        if b <= 2 * c + 1:
            return ell ** (a + b - 1) * (ell - 1)
        return ell ** max(a + b - 1, 2 * b - 2 * c - 2) * (ell - 1)
    # inert above f
    if b <= 2 * c:
        return ell ** (a + b - 1) * (ell - 1)
    return ell ** max(a + b - 1, 2 * b - 2 * c - 1) * (ell - 1)


def t_kf_small(order: Order, m: int, n: int) -> int:
    """Explicit rows for N = 2, 3."""
    w = order.w
    if n == 2:
        chi = kronecker(order.delta, 2)
        if m == 1:
            return 3 if chi == -1 and order.delta != -3 else 1
        return 2 * (2 - chi) // w
    if n == 3:
        chi = kronecker(order.delta, 3)
        if m == 1:
            return 8 // w if chi == -1 else 1
        return 2 * (3 - chi) // w
    raise InvalidInput("explicit rows exist only for N = 2, 3")


def t_kf_value(order: Order, m: int, n: int) -> int:
    parts = level_parts(m, n)
    check_cap(n, current_caps().max_n, "N")
    if n == 1:
        return 1
    if n in (2, 3):
        return t_kf_small(order, m, n)
    prod = 1
    for lv in parts:
        prod *= t_tilde(order, lv)
    return _divide(prod, order.w)


def _divide(num: int, w: int) -> int:
    q, r = divmod(num, w)
    assert r == 0, f"{num} not divisible by w={w}"
    return q


def t_kf(order: Order, m: int, n: int) -> DegreeAnswer:
    """T(O, M, N): least degree over K(f) with Z/M x Z/N torsion."""
    return DegreeAnswer(t_kf_value(order, m, n), Base.KF, True)


def t_tilde_parts(order: Order, m: int, n: int) -> List[Tuple[PrimePowerLevel, int]]:
    return [(lv, t_tilde(order, lv)) for lv in level_parts(m, n)]
