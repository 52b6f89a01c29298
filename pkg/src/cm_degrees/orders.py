"""Imaginary quadratic orders and the small arithmetic they need.

An order is indexed by its fundamental discriminant ``delta_k`` and its
conductor ``f``; everything else (total discriminant, unit count) is derived.
"""
from __future__ import annotations

import contextlib
import contextvars
import enum
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple, Union

from sympy import factorint, isprime


class InvalidInput(ValueError):
    """Malformed discriminant, conductor or level."""


class CapExceeded(ValueError):
    """Input is larger than the configured safety cap."""


@dataclass(frozen=True)
class Caps:
    max_abs_delta: int = 10**6
    max_n: int = 10**4
    oracle_n: int = 64
    lattice_n: int = 200


_caps: contextvars.ContextVar[Caps] = contextvars.ContextVar("cm_degrees_caps", default=Caps())


def current_caps() -> Caps:
    return _caps.get()


@contextlib.contextmanager
def caps(**overrides) -> Iterator[Caps]:
    """Temporarily override the safety caps, e.g. ``with caps(oracle_n=8): ...``."""
    token = _caps.set(replace(_caps.get(), **overrides))
    try:
        yield _caps.get()
    finally:
        _caps.reset(token)


def check_cap(value: int, cap: int, what: str) -> None:
    if abs(value) > cap:
        raise CapExceeded(f"{what}={value} exceeds cap {cap}")


# -- integer helpers -------------------------------------------------------

def factor(n: int) -> Dict[int, int]:
    """Prime factorization of a nonzero integer as {p: e}, sign ignored."""
    if n == 0:
        raise InvalidInput("cannot factor 0")
    return {int(p): int(e) for p, e in factorint(abs(n)).items()}


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise InvalidInput("valuation of 0 is infinite")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def prime_powers(n: int) -> List[Tuple[int, int]]:
    """[(p, e), ...] sorted by p."""
    return sorted(factor(n).items()) if n > 1 else []


def divisors(n: int) -> List[int]:
    ds = [1]
    for p, e in prime_powers(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factor(n).values())


def is_fundamental(d: int) -> bool:
    """True for fundamental discriminants (of either sign, d != 1)."""
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


# -- orders -----------------------------------------------------------------

@dataclass(frozen=True)
class Order:
    delta_k: int
    f: int
    delta: int
    w: int

    def with_conductor(self, f: int) -> "Order":
        return make_order(self.delta_k, f)

    def __str__(self) -> str:
        return f"O(delta_k={self.delta_k}, f={self.f})"


def _unit_count(delta: int) -> int:
    return {-3: 6, -4: 4}.get(delta, 2)


def make_order(delta_k: int, f: int) -> Order:
    delta_k, f = int(delta_k), int(f)
    if f <= 0:
        raise InvalidInput(f"conductor must be positive, got {f}")
    if delta_k >= 0:
        raise InvalidInput(f"discriminant must be negative, got {delta_k}")
    check_cap(delta_k, current_caps().max_abs_delta, "|delta_k|")
    if not is_fundamental(delta_k):
        raise InvalidInput(f"{delta_k} is not a fundamental discriminant")
    delta = f * f * delta_k
    check_cap(delta, current_caps().max_abs_delta, "|delta|")
    return Order(delta_k, f, delta, _unit_count(delta))


def order_from_discriminant(delta: int) -> Order:
    """Split a total discriminant into (delta_k, f) with f as large as possible."""
    delta = int(delta)
    if delta >= 0 or delta % 4 not in (0, 1):
        raise InvalidInput(f"{delta} is not an imaginary quadratic discriminant")
    check_cap(delta, current_caps().max_abs_delta, "|delta|")
    f = 1
    for p, e in prime_powers(-delta):
        f *= p ** (e // 2)
    while not is_fundamental(delta // (f * f)):
        f //= 2  # only the 2-part can overshoot, e.g. -16 = 4 * -4
    return make_order(delta // (f * f), f)


def all_orders(max_abs_delta: int) -> List[Order]:
    """Every order with |delta| <= bound, sorted by (|delta|, f)."""
    out = []
    for d in range(3, max_abs_delta + 1):
        if (-d) % 4 in (0, 1):
            out.append(order_from_discriminant(-d))
    return out


# -- Kronecker symbol and splitting -----------------------------------------

def kronecker(delta: int, ell: int) -> int:
    if not isprime(ell):
        raise InvalidInput(f"{ell} is not prime")
    if ell == 2:
        if delta % 2 == 0:
            return 0
        return 1 if delta % 8 in (1, 7) else -1
    r = pow(delta % ell, (ell - 1) // 2, ell)
    return -1 if r == ell - 1 else r


class CaseTag(enum.Enum):
    INERT = "Inert"
    SPLIT_PRIME_TO_F = "SplitPrimeToF"
    SPLIT_ABOVE_F = "SplitAboveF"
    RAMIFIED = "Ramified"
    INERT_ABOVE_F = "InertAboveF"


@dataclass(frozen=True)
class LocalCase:
    tag: CaseTag
    c: int

    def __str__(self) -> str:
        return f"{self.tag.value}(c={self.c})"


def splitting_case(order: Order, ell: int) -> LocalCase:
    c = vp(order.f, ell)
    chi_k = kronecker(order.delta_k, ell)
    if chi_k == 0:
        return LocalCase(CaseTag.RAMIFIED, c)
    if c > 0:
        tag = CaseTag.SPLIT_ABOVE_F if chi_k == 1 else CaseTag.INERT_ABOVE_F
        return LocalCase(tag, c)
    return LocalCase(CaseTag.SPLIT_PRIME_TO_F if chi_k == 1 else CaseTag.INERT, 0)


# -- class numbers -----------------------------------------------------------

def _check_disc(delta: int) -> None:
    if delta >= 0 or delta % 4 not in (0, 1):
        raise InvalidInput(f"{delta} is not a negative discriminant")
    check_cap(delta, current_caps().max_abs_delta, "|delta|")


def reduced_forms(delta: int) -> List[Tuple[int, int, int]]:
    """Reduced primitive positive definite forms (a, b, c) of discriminant delta."""
    _check_disc(delta)
    forms = []
    a = 1
    while 3 * a * a <= -delta:
        for b in range(-a + 1, a + 1):
            if (b * b - delta) % (4 * a):
                continue
            c = (b * b - delta) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(math.gcd(a, b), c) == 1:
                forms.append((a, b, c))
        a += 1
    return forms


def class_number(delta: int) -> int:
    return len(reduced_forms(delta))


# -- degree helpers ------------------------------------------------------------

def ring_class_relative_degree(order: Order) -> Union[int, Fraction]:
    """[K(f) : K(1)] as (2/w_K) f prod_{p | f} (1 - (delta_k/p)/p)."""
    if order.f == 1:
        return 1
    val = Fraction(2, _unit_count(order.delta_k)) * order.f
    for p, _ in prime_powers(order.f):
        val *= 1 - Fraction(kronecker(order.delta_k, p), p)
    return int(val) if val.denominator == 1 else val


def ring_class_coincidence(order: Order, ell: int) -> bool:
    """Whether Q(f) = Q(ell f)."""
    if ell == 2 and kronecker(order.delta_k, 2) == 1 and order.f % 2 == 1:
        return True
    if order.f == 1 and order.delta_k == -4 and ell == 2:
        return True
    return order.f == 1 and order.delta_k == -3 and ell in (2, 3)


def x1_degree(n: int) -> int:
    """Degree of the forgetful map X_1(N) -> X(1)."""
    if n < 2:
        raise InvalidInput("x1_degree needs N >= 2")
    if n == 2:
        return 3
    val = Fraction(n * n, 2)
    for p, _ in prime_powers(n):
        val *= 1 - Fraction(1, p * p)
    return int(val)


def class_number_recount(delta: int) -> int:
    """Independent count of reduced forms, looping over b first (Cohen's order)."""
    _check_disc(delta)
    n = -delta
    h = 0
    b = n % 2
    while 3 * b * b <= n:
        q = (b * b + n) // 4
        a = max(b, 1)
        while a * a <= q:
            if q % a == 0:
                c = q // a
                if math.gcd(math.gcd(a, b), c) == 1:
                    # (a, +-b, c) are distinct reduced forms unless b = 0, b = a or a = c
                    h += 1 if b == 0 or b == a or a == c else 2
            a += 1
        b += 2
    return h
