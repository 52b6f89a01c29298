"""Rational cyclic isogenies of CM elliptic curves, classified arithmetically.

Three views are kept side by side and cross-checked in the tests:
Kwon's numeric criterion, the existence of primitive proper real ideals
(closed form and lattice enumeration), and the K(f)-side square criterion.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import List, Tuple, Union

from sympy.ntheory import sqrt_mod

from .orders import (CaseTag, InvalidInput, Order, check_cap, current_caps,
                     divisors, kronecker, prime_powers, ring_class_coincidence,
                     splitting_case, vp)


class Unsupported(ValueError):
    """The question is outside what the closed forms decide."""


@functools.total_ordering
class _Unbounded:
    """Supremum that is not attained; compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __hash__(self) -> int:
        return hash("cm_degrees.Unbounded")

    def __reduce__(self):
        return (_Unbounded, ())


UNBOUNDED = _Unbounded()
Depth = Union[int, _Unbounded]


def _gt(x: Depth, y: Depth) -> bool:
    if x is UNBOUNDED:
        return y is not UNBOUNDED
    return y is not UNBOUNDED and x > y


@dataclass(frozen=True)
class IsogenyDepth:
    m: int
    m_sup: Depth

    def __post_init__(self):
        if _gt(self.m, self.m_sup):
            raise ValueError("m exceeds m_sup")


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidInput("N must be positive")
    check_cap(n, current_caps().max_n, "N")


# -- Kwon's criterion -------------------------------------------------------

def kwon_qf_isogeny(order: Order, n: int) -> bool:
    """I(O, N): some O-CM curve has a Q(f)-rational cyclic N-isogeny."""
    _check_n(n)
    d = order.delta
    if d == -4:
        return n in (1, 2, 4)
    if d == -3:
        return n in (1, 2, 3, 6, 9)
    f = order.f
    chi2 = kronecker(order.delta_k, 2)
    if (f % 2 == 0 and chi2 == 0) or f % 4 == 0:
        return (d // 4) % n == 0
    if (f % 4 == 2 and chi2 != 0) or (f % 2 == 1 and chi2 != -1):
        odd = n if n % 2 else n // 2
        return odd % 2 == 1 and d % odd == 0
    return d % n == 0


# -- primitive proper real ideals ----------------------------------------------

def _real_ideal_prime_power(order: Order, ell: int, a: int) -> bool:
    delta = order.delta
    if ell > 2:
        return a == vp(delta, ell)
    if delta % 16 == 0:
        return a in (2, vp(delta, 2) - 2)
    if delta % 2 == 0:
        # 4 || delta with 2 | f: the only index-2 ideal is 2*O(f/2), never proper
        return a == 1 and order.f % 2 == 1
    return False


def real_ideal_exists(order: Order, n: int) -> bool:
    """Closed-form test for a primitive proper real O-ideal of index N."""
    _check_n(n)
    return all(_real_ideal_prime_power(order, p, a) for p, a in prime_powers(n))


@dataclass(frozen=True)
class Lattice:
    """Z*(d1 + 0w) + Z*(s + d2 w) inside Z + Zw, in Hermite form."""

    d1: int
    s: int
    d2: int

    @property
    def index(self) -> int:
        return self.d1 * self.d2

    def contains(self, x: int, y: int) -> bool:
        if y % self.d2:
            return False
        return (x - (y // self.d2) * self.s) % self.d1 == 0

    def basis(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.d1, 0), (self.s, self.d2)


def hermite_lattices(n: int) -> List[Lattice]:
    return [Lattice(d1, s, n // d1) for d1 in divisors(n) for s in range(d1)]


def _times_w(order: Order, x: int, y: int) -> Tuple[int, int]:
    d = order.delta
    return -((d * d - d) // 4) * y, x + d * y


def is_ideal(order: Order, lat: Lattice) -> bool:
    return all(lat.contains(*_times_w(order, *b)) for b in lat.basis())


def is_primitive(lat: Lattice) -> bool:
    return math.gcd(math.gcd(lat.d1, lat.s), lat.d2) == 1


def is_real(order: Order, lat: Lattice) -> bool:
    x, y = lat.s, lat.d2
    return lat.contains(x + y * order.delta, -y)


def multiplier_conductor(order: Order, lat: Lattice) -> int:
    """Conductor g of the multiplier ring (I:I) = O(g) of an O-ideal I.

    f*tau_K = w - k0 with k0 = f*delta_k*(f-1)/2, and (f/e)*tau_K lies in
    (I:I) exactly when g divides f/e.
    """
    f = order.f
    k0 = f * order.delta_k * (f - 1) // 2
    best = 1
    for e in divisors(f):
        ok = True
        for bx, by in lat.basis():
            wx, wy = _times_w(order, bx, by)
            x, y = wx - k0 * bx, wy - k0 * by
            if x % e or y % e or not lat.contains(x // e, y // e):
                ok = False
                break
        if ok:
            best = max(best, e)
    return f // best


def real_ideals(order: Order, n: int) -> List[Lattice]:
    """All primitive proper real O-ideals of index N, by lattice enumeration."""
    if n < 1:
        raise InvalidInput("N must be positive")
    check_cap(n, current_caps().lattice_n, "N (lattice)")
    return [lat for lat in hermite_lattices(n)
            if is_primitive(lat) and is_ideal(order, lat) and is_real(order, lat)
            and multiplier_conductor(order, lat) == order.f]


def real_ideal_exists_oracle(order: Order, n: int) -> bool:
    return bool(real_ideals(order, n))


def generalized_kwon_criterion(order: Order, n: int) -> bool:
    """Exists d | gcd(f, N) with a primitive proper real O(f/d)-ideal of index N/d."""
    _check_n(n)
    return any(real_ideal_exists(order.with_conductor(order.f // d), n // d)
               for d in divisors(math.gcd(order.f, n)))


def structural_isogeny_admissible(order: Order, n: int) -> bool:
    """Ideal-theoretic form of I(O, N).

    When Q(f) = Q(2f) (2 split in K, f odd) the criterion is read on O(2f):
    the canonical 2-isogeny between the two orders is then already rational.
    """
    if order.delta < -4 and ring_class_coincidence(order, 2):
        order = order.with_conductor(2 * order.f)
    return generalized_kwon_criterion(order, n)


# -- K(f)-side criterion and depths ---------------------------------------------

def _is_square_mod(a: int, modulus: int) -> bool:
    return sqrt_mod(a % modulus, modulus) is not None


def isogeny_depth(order: Order, ell: int) -> IsogenyDepth:
    """(m, M): largest ell-power cyclic isogeny degree exponent over Q(f) and K(f)."""
    delta = order.delta
    if delta % ell == 0:
        if (delta, ell) in ((-3, 3), (-4, 2)):
            return IsogenyDepth(2, 2)
        case = splitting_case(order, ell)
        c = case.c
        if case.tag is CaseTag.RAMIFIED:
            if ell > 2:
                m = 2 * c + 1
            elif c == 0:
                m = 1
            else:
                m = 2 * c if vp(order.delta_k, 2) == 2 else 2 * c + 1
            return IsogenyDepth(m, 2 * c + 1)
        if ell > 2:
            m = 2 * c
        else:
            m = 1 if c == 1 else 2 * c - 2
        if case.tag is CaseTag.SPLIT_ABOVE_F:
            return IsogenyDepth(m, UNBOUNDED)
        return IsogenyDepth(m, 2 * c)
    if kronecker(delta, ell) == 1:
        return IsogenyDepth(1 if ell == 2 else 0, UNBOUNDED)
    if delta == -3 and ell == 2:
        return IsogenyDepth(1, 1)
    return IsogenyDepth(0, 0)


def kf_cyclic_isogeny_exists(order: Order, n: int) -> bool:
    """Some O-CM curve has a K(f)-rational cyclic N-isogeny."""
    _check_n(n)
    if order.delta < -4:
        return _is_square_mod(order.delta, 4 * n)
    parts = prime_powers(n)
    if len(parts) > 1:
        raise Unsupported(f"composite N={n} for delta={order.delta} is not decided by the closed forms")
    if not parts:
        return True
    ell, b = parts[0]
    return not _gt(b, isogeny_depth(order, ell).m_sup)


def square_depth(order: Order, ell: int, horizon: int = 12) -> Depth:
    """Largest b <= horizon with delta a square mod 4 ell^b; UNBOUNDED if all pass."""
    for b in range(1, horizon + 1):
        if not _is_square_mod(order.delta, 4 * ell**b):
            return b - 1
    return UNBOUNDED
