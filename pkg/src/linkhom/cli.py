"""Command line interface: ``linkhom {analyze,pair,complex,chambers,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import betti, chains, euler, oracle
from .errors import LinkhomError
from .lengths import (
    MAX_CHAMBER_N,
    LengthVector,
    chamber_key,
    dominating_indices,
    enumerate_chambers,
    is_generic,
    morse_numbers,
    short_set_stats,
)
from .poly import IntPolynomial, render, to_json_obj

MAX_COMPLEX_M = 6
MAX_COMPLEX_J = 10
EMPTY = "empty moduli space"


def _poly(p: IntPolynomial, fmt: str):
    if fmt == "json":
        return to_json_obj(p)
    return render(p, fmt)


def _sets(sets) -> list[list[int]]:
    return [sorted(s) for s in sets]


def _emit(obj: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=True) + "\n")
        return
    for key, val in obj.items():
        if isinstance(val, (dict, list)) and fmt != "json":
            val = json.dumps(val, sort_keys=True)
        out.write(f"{key} = {val}\n")


def _optional(fn, *args):
    try:
        return fn(*args)
    except LinkhomError as exc:
        return str(exc)


def analyze(ell: LengthVector, d: int | None, fmt: str) -> dict[str, Any]:
    n = ell.n
    rep: dict[str, Any] = {"ell": str(ell), "n": n}
    generic, witness = is_generic(ell)
    rep["generic"] = generic
    if not generic:
        rep["median witness"] = sorted(witness)
        return rep
    rep["dominating"] = dominating_indices(ell)
    stats = short_set_stats(ell)
    rep["a"] = list(stats.a)
    key = chamber_key(ell)
    rep["chamber key"] = {"n": key.n, "short_sets": _sets(key.short_family())}
    ds = [d] if d else [3, 4, 5, 6]
    rep["dimensions"] = {}
    for dd in ds:
        info = betti.dim_and_connectivity(n, dd)
        entry = {"dimension": info.dimension, "connectivity": info.connectivity}
        if info.sphere_dimension is not None:
            entry["sphere dimension"] = info.sphere_dimension
        rep["dimensions"][str(dd)] = entry
    if not stats.a0_nonempty:
        for field in ("mu", "P3", "P5", "chi(M4)", "chi(M6)", "betti bounds"):
            rep[field] = EMPTY
        return rep
    rep["mu"] = list(morse_numbers(ell).mu)
    rep["P3"] = _poly(betti.p3_recursive(ell), fmt)
    if n >= 5:
        rep["P5"] = _poly(betti.p5_closed(ell), fmt)
    if d and d % 2 and d >= 7:
        rep[f"P{d}"] = _poly(betti.poincare_odd(ell, d), fmt)
    if n >= 5:
        rep["chi(M4)"] = euler.chi_m4(ell)
    if n >= 7:
        rep["chi(M6)"] = euler.chi_m6(ell)
    bounds = []
    for dd, min_n in ((4, 6), (6, 9)):
        if n >= min_n:
            for b in euler.betti_bounds(ell, dd):
                bounds.append({"d": dd, "degree": b.degree, "lower": b.lower, "upper": b.upper,
                               "difference": b.exact_difference})
    if bounds:
        rep["betti bounds"] = bounds
    return rep


def chamber_profile(key, fmt: str) -> dict[str, Any]:
    w = key.witness
    row: dict[str, Any] = {
        "witness": str(w),
        "a": list(key.a),
        "short_sets": _sets(key.short_family()),
    }
    if not key.a0_nonempty:
        row["P3"] = EMPTY
        return row
    row["P3"] = _poly(betti.p3_recursive(w), fmt)
    if key.n >= 5:
        row["P5"] = _poly(betti.p5_closed(w), fmt)
        row["chi4"] = euler.chi_m4(w)
    if key.n >= 7:
        row["chi6"] = euler.chi_m6(w)
    return row


def cmd_analyze(args, out) -> int:
    ell = LengthVector.parse(args.ell)
    _emit(analyze(ell, args.d, args.format), args.format, out)
    return 0


def cmd_pair(args, out) -> int:
    if args.d < 4 or args.k < 0:
        raise LinkhomError("need d >= 4 and k >= 0")
    p = betti.pair_poincare(args.d, args.k)
    _emit({"d": args.d, "k": args.k, "P": _poly(p, args.format), "chi": p(-1)}, args.format, out)
    return 0


def cmd_complex(args, out) -> int:
    if (args.m > MAX_COMPLEX_M or args.j > MAX_COMPLEX_J) and not args.force:
        raise LinkhomError(f"guard: m <= {MAX_COMPLEX_M}, j <= {MAX_COMPLEX_J}; pass --force (may be slow)")
    c = chains.build_E(args.m, args.j)
    H = chains.homology(c)
    if args.format == "json":
        out.write(chains.dump_json({"m": args.m, "j": args.j, "complex": c.to_json_obj(),
                                    "homology": H.to_json_obj()}) + "\n")
        return 0
    out.write(f"E({args.m},{args.j})\n")
    for q in c.degrees():
        out.write(f"C_{q}: {' '.join(c.generators[q])}\n")
    for q in sorted(c.boundary):
        trip = sorted((r, col, v) for (r, col), v in c.boundary[q].items() if v)
        if trip:
            out.write(f"d_{q}: {trip}\n")
    out.write(f"H: {H.describe()}\n")
    return 0


def cmd_chambers(args, out) -> int:
    if args.n > MAX_CHAMBER_N and not args.force:
        raise LinkhomError(f"guard: n <= {MAX_CHAMBER_N}; pass --force (may be slow)")
    keys = enumerate_chambers(args.n, args.nonempty, force=args.force)
    rows = oracle.run_parallel(lambda k: chamber_profile(k, args.format), keys)
    if args.format == "json":
        out.write(json.dumps({"n": args.n, "nonempty": args.nonempty, "count": len(rows),
                              "chambers": rows}, sort_keys=True) + "\n")
        return 0
    for i, row in enumerate(rows, 1):
        out.write(f"[{i}] " + "  ".join(f"{k}={v}" for k, v in row.items()) + "\n")
    out.write(f"count = {len(rows)}\n")
    return 0


def cmd_verify(args, out) -> int:
    result = oracle.run_suite(args.scope, args.seed)
    fails = result.failures()
    if args.format == "json":
        for r in result.reports:
            out.write(json.dumps(r.to_json_obj(), sort_keys=True) + "\n")
    else:
        by_name: dict[str, list[int]] = {}
        for r in result.reports:
            tally = by_name.setdefault(r.name, [0, 0])
            tally[0 if r.passed else 1] += 1
        for name, (ok, bad) in by_name.items():
            out.write(f"{name}: {ok} passed, {bad} failed\n")
        for r in fails:
            out.write(f"FAIL {r.name} {r.inputs}: expected {r.to_json_obj()['expected']}, "
                      f"got {r.to_json_obj()['actual']} ({r.details})\n")
    out.write(f"{'ALL PASS' if not fails else 'FAILURES'}: {len(result.reports)} checks\n"
              if args.format != "json" else "")
    return 0 if not fails else 1


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["plain", "json", "latex"], default="plain")
    p = argparse.ArgumentParser(prog="linkhom", description="Homology of polygon (linkage) spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[fmt], help="invariants of one length vector")
    a.add_argument("--ell", required=True, help="comma separated lengths, e.g. 1,1,1,1,1,4 or 1/2,3/2,2")
    a.add_argument("--d", type=int, default=None, help="ambient dimension for dimension data")
    a.set_defaults(func=cmd_analyze)

    q = sub.add_parser("pair", parents=[fmt], help="Poincare polynomial of (X^k_d, dX^k_d)")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=cmd_pair)

    c = sub.add_parser("complex", parents=[fmt], help="dump E(m, j) and its integral homology")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--j", type=int, required=True)
    c.add_argument("--force", action="store_true", help="lift the size guard (may be slow)")
    c.set_defaults(func=cmd_complex)

    ch = sub.add_parser("chambers", parents=[fmt], help="chamber census for n sides")
    ch.add_argument("--n", type=int, required=True)
    ch.add_argument("--nonempty", action="store_true", help="only chambers with nonempty moduli space")
    ch.add_argument("--force", action="store_true", help="lift the size guard (may be slow)")
    ch.set_defaults(func=cmd_chambers)

    v = sub.add_parser("verify", parents=[fmt], help="run the cross-check suite")
    v.add_argument("--scope", choices=("all",) + oracle.SCOPES, default="all")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (LinkhomError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
