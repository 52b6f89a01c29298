"""Least degrees over Q(f), where the base field need not contain K.

Every answer is T or 2T for the matching K(f)-side degree T; the functions
here decide which, and report the clause of the case ladder that decided it.

Clause ids:
  GenIsog-a..d   prime-power ladder on (m, M)
  TwoTwo-a..f    Z/2 x Z/2^b ladder for even delta < -4
  Gauss-1, Gauss-2   Z/2 x Z/2^b for delta = -4 (b = 1, b > 1)
  OddDisc        M = 2 with odd delta
  FullLevel      M >= 3
  Compile        combination over the prime-power parts of N
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .degree_formulas import Base, DegreeAnswer, t_kf_value
from .isogeny import UNBOUNDED, Depth, _gt, isogeny_depth
from .orders import CaseTag, InvalidInput, Order, prime_powers, splitting_case


@dataclass(frozen=True)
class QfCaseTrace:
    case_id: str
    m: Optional[int]
    m_sup: Optional[Depth]
    factor: int

    def __post_init__(self):
        if self.factor not in (1, 2):
            raise ValueError("factor must be 1 or 2")


def _qf(value: int) -> DegreeAnswer:
    return DegreeAnswer(value, Base.QF, False)


def _le(b: int, bound: Depth) -> bool:
    return not _gt(b, bound)


def genisog_clause(b: int, m: int, m_sup: Depth) -> Tuple[str, int]:
    if b <= m:
        return "GenIsog-a", 1
    if _le(b, m_sup):
        return "GenIsog-b", 2
    if m_sup == m:
        return "GenIsog-c", 1
    return "GenIsog-d", 2


def t_qf_prime_power(order: Order, ell: int, b: int) -> Tuple[DegreeAnswer, QfCaseTrace]:
    """T°(O, ell^b)."""
    if b < 1:
        raise InvalidInput("b must be positive")
    depth = isogeny_depth(order, ell)
    clause, factor = genisog_clause(b, depth.m, depth.m_sup)
    t = t_kf_value(order, 1, ell**b)
    return _qf(factor * t), QfCaseTrace(clause, depth.m, depth.m_sup, factor)


def table_factor(order: Order, ell: int, b: int) -> int:
    """Factor 1 or 2 read off the explicit branch tables, for ell | delta."""
    if order.delta % ell:
        raise InvalidInput(f"{ell} does not divide {order.delta}")
    if (order.delta, ell) in ((-3, 3), (-4, 2)):
        return 1  # m = M = 2: T for b <= 2 and again for b > 2
    case = splitting_case(order, ell)
    c = case.c
    if case.tag in (CaseTag.SPLIT_ABOVE_F, CaseTag.INERT_ABOVE_F):
        if ell == 2 and c == 1:
            return 1 if b == 1 else 2
        if ell == 2:
            return 1 if b <= 2 * c - 2 else 2
        if case.tag is CaseTag.SPLIT_ABOVE_F:
            return 1 if b <= 2 * c else 2
        return 1
    # ramified
    if ell == 2 and c >= 1 and order.delta_k % 8 == 4:
        return 1 if b <= 2 * c else 2
    return 1


def t_qf_with_trace(order: Order, n: int) -> Tuple[DegreeAnswer, List[Tuple[int, QfCaseTrace]]]:
    if n < 1:
        raise InvalidInput("N must be positive")
    traces = [(p, t_qf_prime_power(order, p, b)[1]) for p, b in prime_powers(n)]
    factor = 2 if any(tr.factor == 2 for _, tr in traces) else 1
    return _qf(factor * t_kf_value(order, 1, n)), traces


def t_qf(order: Order, n: int) -> DegreeAnswer:
    """T°(O, N) = T°(O, 1, N)."""
    return t_qf_with_trace(order, n)[0]


def twotwo_clause(b: int, m: int, m_sup: Depth) -> Tuple[str, int]:
    if b <= m:
        return "TwoTwo-a", 1
    if b == 2 and m == 1 and _gt(m_sup, 1):
        return "TwoTwo-b", 2
    if m + 1 < b and _le(b, m_sup):
        return "TwoTwo-c", 2
    if 3 <= m + 1 == b and _le(b, m_sup):
        return "TwoTwo-d", 1
    if m_sup == m:
        return "TwoTwo-e", 1
    return "TwoTwo-f", 2


def t_qf_2_2b(order: Order, b: int) -> Tuple[DegreeAnswer, QfCaseTrace]:
    """T°(O, 2, 2^b)."""
    if b < 1:
        raise InvalidInput("b must be positive")
    depth = isogeny_depth(order, 2)
    if order.delta % 2:
        clause, factor = "OddDisc", 2
    elif order.delta == -4:
        clause, factor = ("Gauss-1", 1) if b == 1 else ("Gauss-2", 2)
    else:
        clause, factor = twotwo_clause(b, depth.m, depth.m_sup)
    t = t_kf_value(order, 2, 2**b)
    return _qf(factor * t), QfCaseTrace(clause, depth.m, depth.m_sup, factor)


def t_qf_2_n_with_trace(order: Order, n: int) -> Tuple[DegreeAnswer, List[Tuple[int, QfCaseTrace]]]:
    if n < 2 or n % 2:
        raise InvalidInput(f"N must be even, got {n}")
    parts = prime_powers(n)
    t = t_kf_value(order, 2, n)
    if order.delta % 2:
        return _qf(2 * t), [(2, QfCaseTrace("OddDisc", None, None, 2))]
    traces = [(2, t_qf_2_2b(order, parts[0][1])[1])]
    traces += [(p, t_qf_prime_power(order, p, b)[1]) for p, b in parts[1:]]
    factor = 2 if any(tr.factor == 2 for _, tr in traces) else 1
    return _qf(factor * t), traces


def t_qf_2_n(order: Order, n: int) -> DegreeAnswer:
    """T°(O, 2, N) for even N."""
    return t_qf_2_n_with_trace(order, n)[0]


def t_qf_full_with_trace(order: Order, m: int, n: int) -> Tuple[DegreeAnswer, List[Tuple[int, QfCaseTrace]]]:
    if m < 1 or n % m:
        raise InvalidInput(f"M={m} must divide N={n}")
    if m == 1:
        return t_qf_with_trace(order, n)
    if m == 2:
        return t_qf_2_n_with_trace(order, n)
    return _qf(2 * t_kf_value(order, m, n)), [(0, QfCaseTrace("FullLevel", None, None, 2))]


def t_qf_full(order: Order, m: int, n: int) -> DegreeAnswer:
    """T°(O, M, N)."""
    return t_qf_full_with_trace(order, m, n)[0]


def clause_string(traces: List[Tuple[int, QfCaseTrace]]) -> str:
    """Compact, stable rendering such as 'Compile[2:GenIsog-b,3:GenIsog-a]'."""
    if len(traces) == 1 and traces[0][0] == 0:
        return traces[0][1].case_id
    if not traces:
        return "Trivial"
    return "Compile[" + ",".join(f"{p}:{tr.case_id}" for p, tr in traces) + "]"


__all__ = ["QfCaseTrace", "t_qf_prime_power", "t_qf", "t_qf_2_2b", "t_qf_2_n", "t_qf_full",
           "table_factor", "genisog_clause", "twotwo_clause", "clause_string", "UNBOUNDED"]
