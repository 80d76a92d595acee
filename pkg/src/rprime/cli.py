"""Command-line entry point: ``rprime <subcommand> ...``.

Exit codes: 0 success, 1 a verification mismatch was found, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds, constructions
from .enumeration import (
    MAX_ORDER,
    SearchSpec,
    default_workers,
    min_variation,
    probe_conjecture,
)
from .errors import DomainError, FeasibilityError, InputError
from .graph import parse_graph, to_edgelist, to_graph6
from .indices import general_randic, randic, variation_randic

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _frac(x: Fraction | None) -> str:
    return "" if x is None else f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _int_range(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        lo, sep, hi = part.partition("..")
        try:
            out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    return out


def _index_fn(spec: str):
    if spec == "rprime":
        return lambda g: _frac(variation_randic(g))
    if spec == "randic":
        return lambda g: f"{randic(g):.12f}"
    if spec.startswith("general:"):
        try:
            alpha = float(spec.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad alpha in {spec!r}") from None
        return lambda g: f"{general_randic(g, alpha):.12f}"
    raise UsageError(f"unknown index {spec!r}")


def cmd_compute(args) -> int:
    fn = _index_fn(args.index)
    if args.graph is not None:
        lines = [args.graph]
    else:
        stream = open(args.input) if args.input else sys.stdin
        with stream:
            lines = stream.read().splitlines()
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            g = parse_graph(line)
        except InputError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
        print(fn(g), flush=True)
    return EXIT_OK


def cmd_construct(args) -> int:
    fam = args.family
    need = {
        "complete-split": ("n", "k"),
        "regular": ("p", "d"),
        "gnpk": ("n", "p", "k"),
        "gnpkm": ("n", "p", "k", "m"),
    }[fam]
    missing = [f"--{a}" for a in need if getattr(args, a) is None]
    if missing:
        raise UsageError(f"{fam} needs {' '.join(missing)}")
    vals = [getattr(args, a) for a in need]
    build = {
        "complete-split": constructions.complete_split,
        "regular": constructions.regular_graph,
        "gnpk": constructions.family_gnpk,
        "gnpkm": constructions.family_gnpkm,
    }[fam]
    g = build(*vals)
    print(to_graph6(g) if args.format == "graph6" else to_edgelist(g))
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.m is None:
        res = bounds.bound_theorem1(args.n, args.k)
    else:
        res = bounds.bound_theorem2(args.n, args.k, args.m)
    if args.format == "json":
        print(json.dumps({
            "n": args.n, "k": args.k, "m": args.m,
            "bound": {"num": res.value.numerator, "den": res.value.denominator},
            "regime": res.regime,
            "family": res.family,
            "family_params": list(res.family_params),
            "parity_feasible": res.parity_feasible,
        }))
    else:
        print(f"{_frac(res.value)}\t{float(res.value):.12f}\t{res.regime}")
    return EXIT_OK


def cmd_certify(args) -> int:
    n, k = args.n, args.k
    rows = []
    ok = True
    for j in range(1, n - k):
        closed = bounds.hessian_minor(n, k, j)
        det = bounds.minor_by_determinant(n, k, j)
        sign_ok = (closed > 0) == (j % 2 == 0) and closed != 0
        ok &= closed == det and sign_ok
        rows.append({"j": j, "closed_form": _frac(closed), "determinant": _frac(det),
                     "agree": closed == det, "sign_alternates": sign_ok})
    residuals = bounds.check_stationarity(n, k)
    ok &= not any(residuals)
    value, point = bounds.gamma1_max(n, k)
    print(json.dumps({
        "n": n, "k": k,
        "minors": rows,
        "stationarity_residuals": [_frac(r) for r in residuals],
        "gamma1_max": _frac(value),
        "maximiser": [_frac(x) for x in point],
        "certified": ok,
    }, indent=2))
    return EXIT_OK if ok else EXIT_MISMATCH


VERIFY_FIELDS = ["n", "k", "m", "regime", "bound", "constructed", "equal", "parity_feasible",
                 "search_min", "search_equal", "unique"]


def verify_rows(ns, ks, m, search: bool, workers: int):
    for n in ns:
        for k in ks or range(1, n - 1):
            mm = m if m is not None and m < n else None
            try:
                res = bounds.bound_theorem1(n, k) if mm is None else bounds.bound_theorem2(n, k, mm)
            except (InputError, DomainError):
                continue
            g = bounds.build_extremal(res)
            built = None if g is None else variation_randic(g)
            row = {
                "n": n, "k": k, "m": "" if mm is None else mm, "regime": res.regime,
                "bound": _frac(res.value), "constructed": _frac(built),
                "equal": "" if built is None else str(built == res.value).lower(),
                "parity_feasible": str(res.parity_feasible).lower(),
                "search_min": "", "search_equal": "", "unique": "",
            }
            mismatch = built is not None and built != res.value
            if search and n <= MAX_ORDER:
                rep = min_variation(SearchSpec(n, k, mm), workers)
                row["search_min"] = _frac(rep.minimum)
                row["search_equal"] = str(rep.equal).lower()
                row["unique"] = str(rep.unique).lower()
                mismatch |= rep.respects_bound is False
            yield row, mismatch


def cmd_verify(args) -> int:
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    bad = False
    try:
        w = csv.DictWriter(out, fieldnames=VERIFY_FIELDS)
        w.writeheader()
        for row, mismatch in verify_rows(args.n, args.k, args.m, args.search, args.workers):
            w.writerow(row)
            out.flush()
            bad |= mismatch
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_search(args) -> int:
    spec = SearchSpec(args.n, args.k, args.m, not args.allow_disconnected,
                      args.exact_min_degree, args.budget)
    rep = min_variation(spec, args.workers)
    if args.emit_minimizers:
        Path(args.emit_minimizers).write_text("".join(s + "\n" for s in rep.minimizers))
    if args.report:
        Path(args.report).write_text(json.dumps(rep.to_json(), indent=2) + "\n")
    print(f"class_size={rep.class_size} minimum={_frac(rep.minimum)} bound={_frac(rep.bound)} "
          f"equal={rep.equal} minimizers={len(rep.minimizers)} partial={rep.partial}")
    for s in rep.minimizers:
        print(s)
    return EXIT_MISMATCH if rep.respects_bound is False else EXIT_OK


def cmd_conjecture(args) -> int:
    rep = probe_conjecture(args.n, args.k, args.workers, args.budget)
    text = json.dumps(rep.to_json(), indent=2)
    if args.report:
        Path(args.report).write_text(text + "\n")
    print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rprime", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compute", help="evaluate an index on graphs (one per line)")
    s.add_argument("--index", default="rprime", help="rprime | randic | general:ALPHA")
    s.add_argument("--input", help="file of graph6 or 'n; u-v,...' lines (default stdin)")
    s.add_argument("--graph", help="a single graph given inline")
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("construct", help="build an extremal family member")
    s.add_argument("family", choices=["complete-split", "regular", "gnpk", "gnpkm"])
    for flag in ("n", "k", "p", "m", "d"):
        s.add_argument(f"--{flag}", type=int)
    s.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("bound", help="closed-form lower bound on R'")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--m", type=int, help="maximum degree cap")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("certify", help="Hessian minors and stationarity residuals as JSON")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("verify", help="CSV table of bound vs. extremal construction")
    s.add_argument("--n", type=_int_range, required=True, help="e.g. 6..8")
    s.add_argument("--k", type=_int_range, help="default 1..n-2")
    s.add_argument("--m", type=int)
    s.add_argument("--search", action="store_true", help="add exhaustive minima")
    s.add_argument("--workers", type=int, default=default_workers())
    s.add_argument("--output", help="CSV path (default stdout)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exhaustive minimum of R' over a graph class")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True, help="minimum degree bound")
    s.add_argument("--m", type=int, help="maximum degree bound")
    s.add_argument("--exact-min-degree", action="store_true")
    s.add_argument("--allow-disconnected", action="store_true")
    s.add_argument("--workers", type=int, default=default_workers())
    s.add_argument("--budget", type=int)
    s.add_argument("--emit-minimizers", metavar="PATH")
    s.add_argument("--report", metavar="PATH")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("conjecture", help="probe the conjectured extremal p-table")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--workers", type=int, default=default_workers())
    s.add_argument("--budget", type=int)
    s.add_argument("--report", metavar="PATH")
    s.set_defaults(func=cmd_conjecture)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, InputError, DomainError, FeasibilityError, OSError) as exc:
        print(f"rprime: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
