"""Closed form versus oracle sweeps, and the batch degree table.

Both are embarrassingly parallel over orders.  Work is farmed out with
``ProcessPoolExecutor.map``, which returns results in submission order, so
the output never depends on the worker count.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import primerange

from . import __version__
from . import cartan_oracle as co
from . import degree_formulas as dfm
from . import dual_isogeny as dual
from . import isogeny as iso
from . import rational_degrees as rd
from .orders import (Order, all_orders, caps, class_number,
                     class_number_recount, divisors, prime_powers, vp)


@dataclass(frozen=True)
class SweepConfig:
    max_abs_delta: int = 40
    max_n: int = 12
    oracle_cap: int = 64
    workers: int = 1
    output: Optional[str] = None
    format: str = "jsonl"
    log: Optional[str] = None

    def __post_init__(self):
        for name in ("max_abs_delta", "max_n", "oracle_cap", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.max_abs_delta < 3:
            raise ValueError("max_abs_delta must be at least 3")
        if self.format not in ("jsonl", "csv"):
            raise ValueError(f"unknown format {self.format}")

    @property
    def oracle_n(self) -> int:
        return min(self.max_n, self.oracle_cap)


def parallel_map(fn: Callable, items: Sequence, workers: int) -> List:
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# -- verification -------------------------------------------------------------

@dataclass
class Record:
    suite: str
    key: Tuple
    ok: bool
    expected: object = None
    got: object = None

    def to_json(self) -> Dict:
        return {"suite": self.suite, "key": list(self.key), "ok": self.ok,
                "expected": _jsonable(self.expected), "got": _jsonable(self.got)}


def _jsonable(x):
    if x is iso.UNBOUNDED:
        return "inf"
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    return x


def _attempt(fn: Callable, *args):
    """Value of a closed form, or an error string that fails the comparison."""
    try:
        return fn(*args)
    except (AssertionError, ArithmeticError, ValueError) as exc:
        return f"error: {type(exc).__name__}: {exc}"


def _okey(order: Order) -> Tuple[int, int]:
    return (order.delta_k, order.f)


def oracle_checks(task: Tuple[Order, int]) -> List[Record]:
    """Everything that needs Cartan orbits, for one order."""
    order, nmax = task
    out: List[Record] = []
    for n in range(1, nmax + 1):
        act = co.CartanAction(order, n)
        out.append(Record("units", _okey(order) + (n,), act.unit_count == co.cartan_order(order, n),
                          co.cartan_order(order, n), act.unit_count))
        parts = prime_powers(n)
        for m in divisors(n):
            rep = act.orbits(m)
            key = _okey(order) + (m, n)
            if len(parts) == 1:
                ell, b = parts[0]
                lv = dfm.PrimePowerLevel(ell, vp(m, ell), b)
                tt = _attempt(dfm.t_tilde, order, lv)
                out.append(Record("t_tilde", key, tt == rep.min_size, tt, rep.min_size))
                bad = [s for s in rep.orbit_sizes if s % rep.min_size]
                out.append(Record("divisibility", key, not bad, 0, len(bad)))
            if n >= 4:
                ok = all(s == order.w * r for s, r in zip(rep.orbit_sizes, rep.reduced_orbit_sizes))
                out.append(Record("w_scaling", key, ok))
            t = _attempt(dfm.t_kf_value, order, m, n)
            out.append(Record("t_kf", key, t == rep.min_reduced_size, t, rep.min_reduced_size))
            if m == 1 and len(parts) == 1 and parts[0][1] == 2 and order.f % parts[0][0] == 0:
                ell = parts[0][0]
                want = sorted([ell**3 * (ell - 1)] + [ell * (ell - 1)] * ell)
                out.append(Record("census", key, sorted(rep.orbit_sizes) == want,
                                  want, sorted(rep.orbit_sizes)))
    return out


def closed_form_checks(task: Tuple[Order, int]) -> List[Record]:
    """Isogeny, depth and Q(f)-side consistency, for one order."""
    order, nmax = task
    out: List[Record] = []
    key = _okey(order)
    d = order.delta
    if d < -4:
        for n in range(1, min(-d, nmax) + 1):
            k, s = iso.kwon_qf_isogeny(order, n), iso.structural_isogeny_admissible(order, n)
            out.append(Record("isogeny_triangle", key + (n,), k == s, k, s))
            r, ro = iso.real_ideal_exists(order, n), iso.real_ideal_exists_oracle(order, n)
            out.append(Record("real_ideal_oracle", key + (n,), r == ro, r, ro))
        for ell in primerange(2, 14):
            want = iso.square_depth(order, ell)
            got = iso.isogeny_depth(order, ell).m_sup
            out.append(Record("square_depth", key + (ell,), want == got, want, got))
    for ell in primerange(2, 65):
        if d % ell:
            continue
        b = 1
        while ell**b <= 64:
            ladder = rd.t_qf_prime_power(order, ell, b)[1].factor
            table = rd.table_factor(order, ell, b)
            out.append(Record("qf_tables", key + (ell, b), ladder == table, table, ladder))
            b += 1
    for n in range(1, nmax + 1):
        for m in divisors(n):
            t = _attempt(dfm.t_kf_value, order, m, n)
            q = _attempt(lambda: rd.t_qf_full(order, m, n).value)
            ok = isinstance(t, int) and q in (t, 2 * t)
            out.append(Record("sandwich", key + (m, n), ok, t, q))
    h, h2 = class_number(d), class_number_recount(d)
    out.append(Record("class_number", key, h == h2, h2, h))
    return out


def dual_checks() -> List[Record]:
    out = []
    for spec in dual_specs():
        s, k, img = dual.module_structure(spec), dual.kernel_intersection(spec), dual.dual_image(spec)
        ell = spec.ell
        key = (spec.kind,) + spec.params + (ell, spec.c)
        out.append(Record("dual_order", key, ell**k * img.order(ell) == s.order(ell)))
        out.append(Record("dual_exponent", key, img.exponent(ell) == s.exponent(ell)))
    return out


def dual_specs(ells=(2, 3, 5), cmax: int = 4, pmax: int = 8) -> List[dual.TorsionModuleSpec]:
    specs = []
    for ell in ells:
        for c in range(cmax + 1):
            for b in range(pmax + 1):
                specs += [dual.split(a, b, ell, c) for a in range(b + 1)]
                specs += [dual.ramified(b, ell, c), dual.inert(b, ell, c)]
    return specs


SUITES = ("units", "t_tilde", "divisibility", "w_scaling", "t_kf", "census",
          "isogeny_triangle", "real_ideal_oracle", "square_depth", "qf_tables",
          "sandwich", "class_number", "dual_order", "dual_exponent")


@dataclass
class VerifyReport:
    counts: Dict[str, List[int]] = field(default_factory=dict)  # suite -> [passed, failed]
    failures: List[Record] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def minimal_counterexample(self) -> Optional[Record]:
        if not self.failures:
            return None
        return min(self.failures, key=lambda r: (SUITES.index(r.suite), tuple(abs(x) if isinstance(x, int) else x for x in r.key)))


def run_verify(config: SweepConfig, log: Optional[Callable[[Record], None]] = None) -> VerifyReport:
    orders = all_orders(config.max_abs_delta)
    with caps(oracle_n=config.oracle_cap):
        records: List[Record] = []
        for chunk in parallel_map(oracle_checks, [(o, config.oracle_n) for o in orders], config.workers):
            records += chunk
        for chunk in parallel_map(closed_form_checks, [(o, config.max_n) for o in orders], config.workers):
            records += chunk
        records += dual_checks()
    report = VerifyReport({s: [0, 0] for s in SUITES})
    for rec in records:
        report.counts[rec.suite][0 if rec.ok else 1] += 1
        if not rec.ok:
            report.failures.append(rec)
        if log is not None:
            log(rec)
    return report


# -- degree table -------------------------------------------------------------

TABLE_COLUMNS = ("delta_k", "f", "delta", "M", "N", "T_kf", "T_qf", "clause", "h", "h_T_qf")


def table_rows_for_order(task: Tuple[Order, int]) -> List[Dict]:
    order, nmax = task
    h = class_number(order.delta)
    rows = []
    for n in range(1, nmax + 1):
        for m in divisors(n):
            t = dfm.t_kf_value(order, m, n)
            ans, traces = rd.t_qf_full_with_trace(order, m, n)
            rows.append({"delta_k": order.delta_k, "f": order.f, "delta": order.delta,
                         "M": m, "N": n, "T_kf": t, "T_qf": ans.value,
                         "clause": rd.clause_string(traces), "h": h, "h_T_qf": h * ans.value})
    return rows


def table_rows(config: SweepConfig) -> List[Dict]:
    tasks = [(o, config.max_n) for o in all_orders(config.max_abs_delta)]
    rows = [r for chunk in parallel_map(table_rows_for_order, tasks, config.workers) for r in chunk]
    rows.sort(key=lambda r: (abs(r["delta"]), r["f"], r["N"], r["M"]))
    return rows


def cache_dir() -> Path:
    env = os.environ.get("CM_DEGREES_CACHE")
    return Path(env) if env else Path.home() / ".cache" / "cm_degrees"


def cache_key(config: SweepConfig) -> str:
    payload = json.dumps({"version": __version__, "max_abs_delta": config.max_abs_delta,
                          "max_n": config.max_n}, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


def cached_table_rows(config: SweepConfig, use_cache: bool = True) -> Tuple[List[Dict], bool]:
    """Rows plus whether they came from the cache."""
    path = cache_dir() / f"table-{cache_key(config)}.json"
    if use_cache and path.exists():
        try:
            return json.loads(path.read_text()), True
        except (OSError, ValueError):
            pass  # unreadable cache entries are recomputed
    rows = table_rows(config)
    if use_cache:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(f".{os.getpid()}.tmp")
            tmp.write_text(json.dumps(rows, sort_keys=True))
            tmp.replace(path)
        except OSError:
            pass  # a cache we cannot write is not an error
    return rows, False


def render_rows(rows: Iterable[Dict], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow(r)
        return buf.getvalue()
    return "".join(json.dumps({k: r[k] for k in TABLE_COLUMNS}) + "\n" for r in rows)


def config_dict(config: SweepConfig) -> Dict:
    return asdict(config)
