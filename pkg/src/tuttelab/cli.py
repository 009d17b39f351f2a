"""Command-line front end: ``tuttelab poly | check | plotdata | catalog``.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 resource limit,
4 internal mismatch between independent computations.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .catalog import DescriptorError, build, catalog, canonical_json, resolve
from .closed_forms import ConsistencyError, catalan_binomial_identity
from .graph import GraphError, GraphicMatroid
from .matroid import MatroidError, ResourceLimitError
from .packing import PackingConsistencyError, check_inequality_equivalence, check_paving_dichotomy, packing_report
from .reports import FAIL, reports_to_csv
from .tutte import EngineMismatch, check_coefficient_relations, restrict_to_segment, tutte_polynomial

log = logging.getLogger("tuttelab")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT, EXIT_MISMATCH = 0, 1, 2, 3, 4

PREDICATES = ("mw", "family", "convexity", "packing", "paving", "relations", "quadrant-probe",
              "catalan-identity", "cubic-bounds", "conjecture")


class UsageError(ValueError):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


# --- instance handling ---------------------------------------------------------


def _instances(args) -> list[tuple[str, dict]]:
    from .search import parse_corpus

    items = [(text, resolve(text)) for text in args.instances]
    if getattr(args, "corpus", None):
        items.extend(parse_corpus(args.corpus))
    if not items:
        raise UsageError("no instance given (positional INSTANCE or --corpus)")
    return items


def _graph_of(desc: dict, label: str):
    m = build(desc)
    if not isinstance(m, GraphicMatroid):
        raise UsageError(f"{label}: this check needs a graph instance")
    return m, m.graph


# --- commands ----------------------------------------------------------------------


def cmd_poly(args, out) -> int:
    desc = resolve(args.instance)
    m = build(desc)
    p = tutte_polynomial(m, args.engine)
    if args.format == "latex":
        out.write(p.to_latex() + "\n")
    elif args.format == "text":
        out.write(p.to_text() + "\n")
    else:
        out.write(json.dumps({"instance": desc, "engine": args.engine, "polynomial": p.to_json()},
                             sort_keys=True, separators=(",", ":")) + "\n")
    return EXIT_OK


def _check_one(args, label: str, desc: dict) -> list:
    from . import inequalities as ineq

    pred = args.predicate
    if pred == "catalan-identity":
        return [catalan_binomial_identity(m) for m in range(1, args.m + 1)] if args.all_m else [
            catalan_binomial_identity(args.m)]
    if pred == "cubic-bounds":
        _, g = _graph_of(desc, label)
        return [ineq.cubic_girth5_bounds(g, prec=args.precision, instance=desc)]
    if pred == "simplicial":
        _, g = _graph_of(desc, label)
        return [ineq.check_simplicial(g, instance=desc)]
    m = build(desc)
    if pred == "mw":
        return [ineq.check_merino_welsh(m, instance=desc)]
    if pred == "family":
        poly = tutte_polynomial(m)
        from .packing import packing

        summary = packing(m)
        return [ineq.check_family_inequality(m, a, poly, summary, instance=desc) for a in args.a]
    if pred == "convexity":
        poly = tutte_polynomial(m)
        reports = []
        for p in args.p:
            rep = ineq.check_segment_convexity(poly, p, args.method, args.density)
            reports.append(rep.to_check_report(desc))
            if args.figures:
                from .plotting import plot_segment, segment_samples

                rows = segment_samples(restrict_to_segment(poly, p), p, 41)
                name = f"{_slug(label)}_p{str(p).replace('/', '-')}.png"
                plot_segment(rows, p, Path(args.figures) / name, title=f"{label}, x + y = {p}")
        return reports
    if pred == "packing":
        return [packing_report(m, desc)]
    if pred == "paving":
        return [check_paving_dichotomy(m, desc)]
    if pred == "relations":
        return [check_coefficient_relations(tutte_polynomial(m), m, desc)]
    if pred == "equivalence":
        return [check_inequality_equivalence(m, desc)]
    if pred == "quadrant-probe":
        return [ineq.sampled_quadrant_convexity_probe(m, samples=args.samples, bound=args.bound,
                                                      density=args.density, seed=args.seed, instance=desc)]
    raise UsageError(f"unknown predicate {pred!r}")


def _slug(label: str) -> str:
    return "".join(c if c.isalnum() or c in "-_." else "_" for c in label)[:60] or "instance"


def cmd_check(args, out) -> int:
    if args.predicate == "conjecture":
        return _cmd_conjecture(args, out)
    if args.predicate == "catalan-identity":
        items = [("catalan-identity", {})]
    else:
        items = _instances(args)
    reports = []
    for label, desc in items:
        for rep in _check_one(args, label, desc):
            if not args.no_timestamp:
                rep.stamp()
            out.write(rep.to_json() + "\n")
            out.flush()
            reports.append(rep)
    _write_csv(args, reports)
    return EXIT_FAIL if any(r.verdict == FAIL for r in reports) else EXIT_OK


def _cmd_conjecture(args, out) -> int:
    from .search import conjecture_search, counterexamples, parse_corpus

    items = [(text, resolve(text)) for text in args.instances]
    if args.corpus:
        items.extend(parse_corpus(args.corpus))
    if not items:
        raise UsageError("conjecture search needs --corpus or instances")
    reports = conjecture_search(items, workers=args.workers)
    for rep in reports:
        if not args.no_timestamp:
            rep.stamp()
        out.write(rep.to_json() + "\n")
    bad = counterexamples(reports)
    for rep in bad:
        log.error("COUNTEREXAMPLE %s", rep.values.get("label"))
    _write_csv(args, reports)
    if args.figures:
        from .plotting import plot_conjecture

        plot_conjecture(reports, Path(args.figures) / "conjecture.png")
    return EXIT_FAIL if bad else EXIT_OK


def _write_csv(args, reports) -> None:
    if args.csv:
        Path(args.csv).parent.mkdir(parents=True, exist_ok=True)
        Path(args.csv).write_text(reports_to_csv(reports), encoding="utf-8")


def cmd_plotdata(args, out) -> int:
    from .plotting import decimal_string, plot_segment, segment_samples

    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    if args.p <= 0:
        raise UsageError("--p must be positive")
    desc = resolve(args.instance)
    poly = tutte_polynomial(build(desc))
    rows = segment_samples(restrict_to_segment(poly, args.p), args.p, args.samples)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["t", "f"])
    for t, v in rows:
        writer.writerow([decimal_string(t, args.precision), decimal_string(v, args.precision)])
    if args.figure:
        plot_segment(rows, args.p, args.figure, title=f"{args.instance}, x + y = {args.p}")
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    for entry in catalog():
        if args.json:
            out.write(json.dumps({"id": entry.id, "descriptor": entry.descriptor},
                                 sort_keys=True, separators=(",", ":")) + "\n")
        else:
            out.write(f"{entry.id}\t{entry.size}\t{canonical_json(entry.descriptor)}\n")
    return EXIT_OK


# --- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tuttelab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--max-bits", type=_positive_int, help="cap on subset expansion (TUTTE_MAX_BITS)")
    parser.add_argument("--node-budget", type=_positive_int, help="deletion-contraction node cap")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="compute a Tutte polynomial")
    p.add_argument("instance", help="shorthand, inline JSON, or JSON file")
    p.add_argument("--engine", default="auto", choices=["auto", "subsets", "delcon", "activities", "all"])
    p.add_argument("--format", default="json", choices=["json", "latex", "text"])
    p.set_defaults(func=cmd_poly)

    c = sub.add_parser("check", help="run one predicate over instances or a corpus")
    c.add_argument("predicate", choices=PREDICATES + ("simplicial", "equivalence"))
    c.add_argument("instances", nargs="*")
    c.add_argument("--corpus", help="corpus spec, e.g. 'wheel:2..8;multigraphs:6'")
    c.add_argument("--a", type=_rational, action="append", help="a-values for 'family' (repeatable)")
    c.add_argument("--p", type=_rational, action="append", help="segment sums for 'convexity' (repeatable)")
    c.add_argument("--method", default="sturm", choices=["sturm", "exact-sturm", "grid"])
    c.add_argument("--density", type=_positive_int, default=16, help="grid density")
    c.add_argument("--samples", type=_positive_int, default=400, help="quadrant-probe segment pairs")
    c.add_argument("--bound", type=_positive_int, default=4, help="quadrant-probe box [0,B]^2")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--m", type=_positive_int, default=10, help="catalan-identity parameter")
    c.add_argument("--all-m", action="store_true", help="catalan-identity for every m' <= m")
    c.add_argument("--precision", type=_positive_int, default=128, help="interval precision in bits")
    c.add_argument("--workers", type=_positive_int, default=1)
    c.add_argument("--csv", help="also write a CSV summary here")
    c.add_argument("--figures", help="directory for PNG figures")
    c.add_argument("--no-timestamp", action="store_true")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("plotdata", help="CSV of t, T(t, p - t) on a segment")
    d.add_argument("instance")
    d.add_argument("--p", type=_rational, required=True)
    d.add_argument("--samples", type=int, default=11)
    d.add_argument("--precision", type=int, default=12, help="digits after the decimal point")
    d.add_argument("--figure", help="also render a PNG here")
    d.set_defaults(func=cmd_plotdata)

    k = sub.add_parser("catalog", help="built-in instances")
    k.add_argument("action", choices=["list"])
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_catalog)
    return parser


def _defaults(args) -> None:
    if args.command != "check":
        return
    if args.a is None:
        args.a = [Fraction(2)]
    if args.p is None:
        args.p = [Fraction(2)]
    if any(p <= 0 for p in args.p):
        raise UsageError("--p must be positive")
    if any(a < 0 for a in args.a):
        raise UsageError("--a must be nonnegative")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    overrides = {"TUTTE_MAX_BITS": args.max_bits, "TUTTE_NODE_BUDGET": args.node_budget}
    saved = {k: os.environ.get(k) for k in overrides}
    # environment, not globals, so corpus worker processes inherit the limits
    for k, v in overrides.items():
        if v:
            os.environ[k] = str(v)
    try:
        _defaults(args)
        return args.func(args, out)
    except (UsageError, DescriptorError, GraphError, MatroidError, ValueError) as exc:
        print(f"tuttelab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"tuttelab: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (EngineMismatch, PackingConsistencyError, ConsistencyError) as exc:
        print(f"tuttelab: internal mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    finally:
        for k, v in saved.items():
            if v is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = v


if __name__ == "__main__":
    sys.exit(main())
