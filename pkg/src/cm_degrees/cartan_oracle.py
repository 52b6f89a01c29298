"""Brute-force arithmetic in O/NO and Cartan orbits on (M,N)-pairs.

Elements of O/NO are written u + v*w with w = (delta + sqrt(delta))/2, so
w^2 = delta*w - k with k = (delta^2 - delta)/4.  Inside the sweeps an element
is encoded as the integer u*N + v and a pair (P, Q) as code(P)*N^2 + code(Q),
which makes integer order agree with lexicographic order on (uP, vP, uQ, vQ).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

import numpy as np

from .orders import (InvalidInput, Order, check_cap, current_caps, kronecker,
                     prime_powers)


class RingElement(NamedTuple):
    u: int
    v: int


@dataclass(frozen=True)
class QuotientRing:
    """The ring O/NO for a fixed order and modulus."""

    order: Order
    n: int

    @property
    def k(self) -> int:
        d = self.order.delta
        return (d * d - d) // 4

    def elt(self, u: int, v: int) -> RingElement:
        return RingElement(u % self.n, v % self.n)

    def add(self, x: RingElement, y: RingElement) -> RingElement:
        return self.elt(x.u + y.u, x.v + y.v)

    def mul(self, x: RingElement, y: RingElement) -> RingElement:
        d = self.order.delta
        vv = x.v * y.v
        return self.elt(x.u * y.u - self.k * vv, x.u * y.v + x.v * y.u + d * vv)

    def norm(self, x: RingElement) -> int:
        d = self.order.delta
        return (x.u * x.u + d * x.u * x.v + self.k * x.v * x.v) % self.n

    def conj(self, x: RingElement) -> RingElement:
        return self.elt(x.u + x.v * self.order.delta, -x.v)

    def is_unit(self, x: RingElement) -> bool:
        return math.gcd(self.norm(x), self.n) == 1

    def additive_order(self, x: RingElement) -> int:
        return self.n // math.gcd(math.gcd(x.u, x.v), self.n)

    def elements(self) -> List[RingElement]:
        return [RingElement(u, v) for u in range(self.n) for v in range(self.n)]


def cartan_order(order: Order, n: int) -> int:
    """#(O/NO)^x from the product formula."""
    if n < 1:
        raise InvalidInput("N must be positive")
    check_cap(n, current_caps().max_n, "N")
    val = n * n
    for p, _ in prime_powers(n):
        val = val * (p - kronecker(order.delta, p)) * (p - 1) // (p * p)
    return val


def _check_oracle(n: int) -> None:
    if n < 1:
        raise InvalidInput("N must be positive")
    check_cap(n, current_caps().oracle_n, "N (oracle)")


def enumerate_units(order: Order, n: int) -> List[RingElement]:
    _check_oracle(n)
    ring = QuotientRing(order, n)
    return [x for x in ring.elements() if ring.is_unit(x)]


def torsion_unit_image(order: Order, n: int) -> List[RingElement]:
    """Image of O^x in (O/NO)^x, sorted and without repeats."""
    ring = QuotientRing(order, n)
    if order.delta in (-3, -4):
        gen = ring.elt(2, 1)  # w + 2 is i resp. a primitive sixth root of unity
    else:
        gen = ring.elt(-1, 0)
    image = {ring.elt(1, 0)}
    x = gen
    for _ in range(order.w):
        image.add(x)
        x = ring.mul(x, gen)
    return sorted(image)


@dataclass(frozen=True)
class OrbitReport:
    """Orbit sizes listed orbit by orbit, so entry i of both tuples is one orbit."""

    orbit_sizes: Tuple[int, ...]
    reduced_orbit_sizes: Tuple[int, ...]

    @property
    def min_size(self) -> int:
        return min(self.orbit_sizes)

    @property
    def min_reduced_size(self) -> int:
        return min(self.reduced_orbit_sizes)

    @property
    def pair_count(self) -> int:
        return sum(self.orbit_sizes)


class CartanAction:
    """Action of (O/NO)^x on O/NO, tabulated once and reused for every M | N."""

    def __init__(self, order: Order, n: int):
        _check_oracle(n)
        self.order = order
        self.n = n
        nn = n * n
        d = order.delta % n
        k = ((order.delta * order.delta - order.delta) // 4) % n
        u = np.arange(nn, dtype=np.int64) // n
        v = np.arange(nn, dtype=np.int64) % n
        norm = (u * u + d * u * v + k * v * v) % n
        unit_mask = np.gcd(norm, n) == 1
        self.units = np.flatnonzero(unit_mask)
        gu = u[self.units][:, None]
        gv = v[self.units][:, None]
        # row i is the permutation of O/NO given by multiplication by unit i
        pu = (gu * u - k * gv * v) % n
        pv = (gu * v + gv * u + d * gv * v) % n
        self.table = (pu * n + pv).astype(np.int32)
        torsion = [x.u * n + x.v for x in torsion_unit_image(order, n)]
        rows = np.searchsorted(self.units, torsion)
        self.torsion_table = self.table[rows]
        g = np.gcd(np.gcd(u, v), n)
        self._content = g  # additive order of element e is n // g[e]

    @property
    def unit_count(self) -> int:
        return len(self.units)

    def pair_codes(self, m: int) -> np.ndarray:
        """Sorted codes of all (m, n)-pairs."""
        n = self.n
        if n % m:
            raise InvalidInput(f"M={m} does not divide N={n}")
        if n == 1:
            return np.zeros(1, dtype=np.int64)
        ps = np.flatnonzero(self._content == n // m)
        qs = np.flatnonzero(self._content == 1)
        up, vp_ = (ps // n)[:, None], (ps % n)[:, None]
        uq, vq = (qs // n)[None, :], (qs % n)[None, :]
        det = up * vq - uq * vp_
        ok = np.gcd(det, n) == n // m
        pi, qi = np.nonzero(ok)
        return ps[pi].astype(np.int64) * (n * n) + qs[qi]

    def orbits(self, m: int) -> OrbitReport:
        n = self.n
        if n == 1:
            if m != 1:
                raise InvalidInput(f"M={m} does not divide N={n}")
            return OrbitReport((1,), (1,))
        nn = n * n
        codes = self.pair_codes(m)
        seen = bytearray(nn * nn)
        seen_view = np.frombuffer(seen, dtype=np.uint8)
        table, ttable = self.table, self.torsion_table
        sizes: List[int] = []
        reduced: List[int] = []
        for code in codes.tolist():
            if seen[code]:
                continue
            p, q = divmod(code, nn)
            orbit = np.unique(table[:, p].astype(np.int64) * nn + table[:, q])
            seen_view[orbit] = 1
            op, oq = np.divmod(orbit, nn)
            canon = (ttable[:, op].astype(np.int64) * nn + ttable[:, oq]).min(axis=0)
            sizes.append(len(orbit))
            reduced.append(len(np.unique(canon)))
        return OrbitReport(tuple(sizes), tuple(reduced))


def pair_orbits(order: Order, m: int, n: int) -> OrbitReport:
    if m < 1 or n % m:
        raise InvalidInput(f"M={m} must divide N={n}")
    return CartanAction(order, n).orbits(m)


def min_orbit(order: Order, m: int, n: int) -> Tuple[int, int]:
    """(least Cartan orbit size, least reduced orbit size) on (M,N)-pairs."""
    rep = pair_orbits(order, m, n)
    return rep.min_size, rep.min_reduced_size


def is_mn_pair(ring: QuotientRing, p: RingElement, q: RingElement, m: int) -> bool:
    """Definition-level test: span of P, Q has M*N elements and exponent N."""
    n = ring.n
    if ring.additive_order(p) != m or ring.additive_order(q) != n:
        return False
    span = {ring.elt(i * p.u + j * q.u, i * p.v + j * q.v)
            for i in range(m) for j in range(n)}
    return len(span) == m * n

