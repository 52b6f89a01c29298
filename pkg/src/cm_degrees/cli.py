"""Command line front end.

Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 cap exceeded, 4 I/O error.
JSON is the default output; the unbounded depth is written as the string "inf".
"""
from __future__ import annotations

import argparse
import configparser
import json
import sys
from dataclasses import asdict, dataclass, fields
from typing import Dict, List, Optional

from . import cartan_oracle as co
from . import degree_formulas as dfm
from . import dual_isogeny as dual
from . import isogeny as iso
from . import rational_degrees as rd
from . import sweeps
from .orders import (CapExceeded, InvalidInput, Order, class_number, make_order,
                     order_from_discriminant, prime_powers, reduced_forms)

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CAP, EXIT_IO = 0, 1, 2, 3, 4

VERIFY_DEFAULTS = {"max_abs_delta": 120, "max_n": 24}


@dataclass(frozen=True)
class QueryResult:
    delta_k: int
    f: int
    delta: int
    m_level: int
    n_level: int
    over: str
    degree: Dict[str, int]
    clause: Dict[str, str]
    multiples_closed: Dict[str, bool]

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "QueryResult":
        data = json.loads(text)
        return cls(**{f.name: data[f.name] for f in fields(cls)})


def _depth_json(x) -> object:
    return "inf" if x is iso.UNBOUNDED else x


def _order(args) -> Order:
    if args.delta is not None:
        if args.delta_k is not None:
            raise InvalidInput("give either --delta or --delta-k/--f, not both")
        return order_from_discriminant(args.delta)
    if args.delta_k is None:
        raise InvalidInput("an order needs --delta or --delta-k")
    return make_order(args.delta_k, args.f)


def query_degree(order: Order, m: int, n: int, over: str = "both") -> QueryResult:
    sides = ["kf", "qf"] if over == "both" else [over]
    degree, clause, closed = {}, {}, {}
    if "kf" in sides:
        ans = dfm.t_kf(order, m, n)
        degree["kf"] = ans.value
        clause["kf"] = "Trivial" if n == 1 else ("Table" if n <= 3 else "Product")
        closed["kf"] = ans.multiples_closed
    if "qf" in sides:
        ans, traces = rd.t_qf_full_with_trace(order, m, n)
        degree["qf"] = ans.value
        clause["qf"] = rd.clause_string(traces)
        closed["qf"] = ans.multiples_closed
    return QueryResult(order.delta_k, order.f, order.delta, m, n, over, degree, clause, closed)


def _emit(obj, fmt: str = "json") -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        for k in sorted(obj):
            print(f"{k:>18}  {obj[k]}")


def cmd_degree(args) -> int:
    order = _order(args)
    res = query_degree(order, args.m, args.n, args.over)
    if args.format == "json":
        print(res.to_json())
    else:
        _emit(asdict(res), "text")
    return EXIT_OK


def cmd_isogeny(args) -> int:
    order = _order(args)
    out: Dict[str, object] = {"delta_k": order.delta_k, "f": order.f, "delta": order.delta}
    if args.n is not None:
        out["n_level"] = args.n
        out["qf"] = iso.kwon_qf_isogeny(order, args.n)
        out["structural"] = iso.structural_isogeny_admissible(order, args.n)
        try:
            out["kf"] = iso.kf_cyclic_isogeny_exists(order, args.n)
        except iso.Unsupported:
            out["kf"] = "unsupported"
        ells = [p for p, _ in prime_powers(args.n)]
        out["depths"] = {str(p): _depth_dict(order, p) for p in ells}
    if args.ell is not None:
        out["ell"] = args.ell
        out.update(_depth_dict(order, args.ell))
    if args.n is None and args.ell is None:
        raise InvalidInput("isogeny needs --n and/or --ell")
    _emit(out, args.format)
    return EXIT_OK


def _depth_dict(order: Order, ell: int) -> Dict[str, object]:
    dep = iso.isogeny_depth(order, ell)
    return {"m": dep.m, "M": _depth_json(dep.m_sup)}


def cmd_orbits(args) -> int:
    order = _order(args)
    rep = co.pair_orbits(order, args.m, args.n)
    out = {"delta_k": order.delta_k, "f": order.f, "delta": order.delta,
           "m_level": args.m, "n_level": args.n,
           "orbit_sizes": sorted(rep.orbit_sizes),
           "reduced_orbit_sizes": sorted(rep.reduced_orbit_sizes),
           "min_size": rep.min_size, "min_reduced_size": rep.min_reduced_size,
           "pairs": rep.pair_count}
    _emit(out, args.format)
    return EXIT_OK


def cmd_dual(args) -> int:
    spec = dual.TorsionModuleSpec(args.case, tuple(args.params), args.ell, args.c)
    s, img = dual.module_structure(spec), dual.dual_image(spec)
    out = {"case": args.case, "params": list(spec.params), "ell": args.ell, "c": args.c,
           "module": [s.inv1, s.inv2], "kernel": dual.kernel_intersection(spec),
           "image": [img.inv1, img.inv2]}
    _emit(out, args.format)
    return EXIT_OK


def cmd_classnumber(args) -> int:
    forms = reduced_forms(args.delta)
    out = {"delta": args.delta, "h": class_number(args.delta)}
    if args.forms:
        out["forms"] = [list(x) for x in forms]
    _emit(out, args.format)
    return EXIT_OK


def _sweep_config(args, defaults: Optional[Dict] = None) -> sweeps.SweepConfig:
    values: Dict[str, object] = dict(defaults or {})
    if args.config:
        values.update(read_config_file(args.config))
    for name in ("max_abs_delta", "max_n", "oracle_cap", "workers", "output", "format", "log"):
        v = getattr(args, name, None)
        if v is not None:
            values[name] = v
    try:
        return sweeps.SweepConfig(**values)
    except (TypeError, ValueError) as exc:
        raise InvalidInput(str(exc)) from exc


_INT_KEYS = {"max_abs_delta", "max_n", "oracle_cap", "workers"}


def read_config_file(path: str) -> Dict[str, object]:
    """key=value lines; keys are the long flag names with - or _."""
    parser = configparser.ConfigParser()
    with open(path) as fh:
        parser.read_string("[config]\n" + fh.read())
    out: Dict[str, object] = {}
    for key, val in parser["config"].items():
        key = key.replace("-", "_")
        if key not in _INT_KEYS | {"output", "format", "log"}:
            raise InvalidInput(f"unknown config key {key}")
        out[key] = int(val) if key in _INT_KEYS else val
    return out


def cmd_table(args) -> int:
    config = _sweep_config(args)
    rows, hit = sweeps.cached_table_rows(config, use_cache=not args.no_cache)
    text = sweeps.render_rows(rows, config.format)
    if config.output:
        with open(config.output, "w", newline="") as fh:
            fh.write(text)
        print(f"wrote {len(rows)} rows to {config.output}" + (" (cached)" if hit else ""),
              file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = _sweep_config(args, VERIFY_DEFAULTS)
    log_path = config.log or "cm_degrees_verify.jsonl"
    with open(log_path, "w") as fh:
        report = sweeps.run_verify(config, log=lambda r: fh.write(json.dumps(r.to_json()) + "\n"))
    for suite in sweeps.SUITES:
        passed, failed = report.counts[suite]
        print(f"{suite:<18} {'PASS' if failed == 0 else 'FAIL'}  passed={passed} failed={failed}")
    if report.ok:
        print(f"all suites pass; log: {log_path}")
        return EXIT_OK
    bad = report.minimal_counterexample()
    print("minimal counterexample: " + json.dumps(bad.to_json()), file=sys.stderr)
    return EXIT_VERIFY


def _add_order_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delta", type=int, help="total discriminant f^2 * delta_k")
    p.add_argument("--delta-k", type=int, help="fundamental discriminant")
    p.add_argument("--f", type=int, default=1, help="conductor (with --delta-k)")


def _add_sweep_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value file mirroring these flags")
    p.add_argument("--max-abs-delta", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--oracle-cap", type=int)
    p.add_argument("--workers", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cm-degrees", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degree", help="least degrees T(O,M,N) and T°(O,M,N)")
    _add_order_flags(p)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--over", choices=("kf", "qf", "both"), default="both")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("isogeny", help="rational cyclic isogenies and depths")
    _add_order_flags(p)
    p.add_argument("--n", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_isogeny)

    p = sub.add_parser("orbits", help="brute-force Cartan orbits on (M,N)-pairs")
    _add_order_flags(p)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("dual", help="kernel and image of the dual canonical isogeny")
    p.add_argument("--case", choices=("split", "ramified", "inert"), required=True)
    p.add_argument("--params", type=int, nargs="+", required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("classnumber", help="class number by reduced forms")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--forms", action="store_true", help="also list the reduced forms")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_classnumber)

    p = sub.add_parser("table", help="batch table of degrees over a grid")
    _add_sweep_flags(p)
    p.add_argument("--output", "-o")
    p.add_argument("--format", choices=("jsonl", "csv"))
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="closed forms versus brute-force oracles")
    _add_sweep_flags(p)
    p.add_argument("--log", help="JSON-lines detail log (default cm_degrees_verify.jsonl)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidInput, iso.Unsupported, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
