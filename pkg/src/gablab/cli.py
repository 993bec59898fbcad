"""Command-line front end: one subcommand per capability, CSV reports.

Codes come from plain key=value spec files (see ``parse_code_spec``);
words and polynomials are comma-separated canonical element codes.  All
enumeration orders are fixed, and parallel scans merge chunk results in
index order, so identical inputs give byte-identical output at any
``--jobs`` count.  Exit status: 0 success, 1 domain error (message on
stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from . import acceptance
from .code import (DEFAULT_ORACLE_CAP, METRICS, dist_to_code_exhaustive,
                   load_code_spec, min_distance)
from .deephole import (DEFAULT_CLASS_SCAN_CAP, DEFAULT_SUBSPACE_CAP,
                       FAMILY_KINDS, _witness_codes, covering_radius_scan,
                       distance_by_search, family_check, quadric_census)
from .linpoly import LinPoly


def _parse_codes(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed code list {text!r}; expected comma-separated integers") from None


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(args):
    return load_code_spec(args.spec)


def _word(args, code):
    return code.word(_parse_codes(args.word))


def _witness_str(wit) -> str:
    codes = _witness_codes(wit)
    return "" if codes is None else ",".join(str(c) for c in codes)


# -- subcommand bodies -------------------------------------------------------


def _cmd_field(args) -> int:
    code = _load(args)
    ctx = code.ctx
    lines = [
        f"p={ctx.p}",
        f"s={ctx.s}",
        f"m={ctx.m}",
        f"q={ctx.q}",
        f"order={ctx.order}",
        "modulus=" + ",".join(str(c) for c in ctx.modulus),
        f"n={code.n}",
        f"k={code.k}",
        "g=" + ",".join(str(g.code) for g in code.points),
    ]
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_encode(args) -> int:
    code = _load(args)
    msg = LinPoly(code.ctx, _parse_codes(args.poly))
    word = code.encode(msg)
    _emit(args, ",".join(str(c) for c in word.codes) + "\n")
    return 0


def _cmd_dist(args) -> int:
    code = _load(args)
    w = _word(args, code)
    d, msg = dist_to_code_exhaustive(code, w, args.metric,
                                     oracle_cap=args.cap or DEFAULT_ORACLE_CAP)
    padded = list(msg.codes) + [0] * (code.k - len(msg.codes))
    _emit(args, f"distance={d} witness={','.join(str(c) for c in padded)}\n")
    return 0


def _cmd_search(args) -> int:
    code = _load(args)
    res = distance_by_search(code, _word(args, code), args.metric,
                             subspace_cap=args.cap or DEFAULT_SUBSPACE_CAP)
    _emit(args, f"distance={res.distance} bound={res.bound} "
                f"deep_hole={_bool(res.is_deep_hole)} witness={_witness_str(res.witness)}\n")
    return 0


def _cmd_classify(args) -> int:
    code = _load(args)
    res = distance_by_search(code, _word(args, code), args.metric,
                             subspace_cap=args.cap or DEFAULT_SUBSPACE_CAP)
    _emit(args, f"distance={res.distance} deep_hole={_bool(res.is_deep_hole)}\n")
    return 0


def _cmd_mindist(args) -> int:
    code = _load(args)
    _emit(args, f"{min_distance(code, args.metric, oracle_cap=args.cap or DEFAULT_ORACLE_CAP)}\n")
    return 0


def _cmd_radius(args) -> int:
    code = _load(args)
    scan = covering_radius_scan(code, args.metric, jobs=args.jobs,
                                scan_cap=args.cap or DEFAULT_CLASS_SCAN_CAP)
    _emit(args, f"{scan.radius}\n")
    return 0


def _cmd_census(args) -> int:
    code = _load(args)
    scan = covering_radius_scan(code, args.metric, jobs=args.jobs,
                                scan_cap=args.cap or DEFAULT_CLASS_SCAN_CAP,
                                collect_rows=True)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["class_id", "coeffs", "metric", "distance", "is_deep_hole", "witness"])
    n = code.n
    for idx, codes, metric, dist, deep, wit in scan.rows:
        coeffs = list(codes) + [0] * (n - len(codes))
        writer.writerow([idx, ",".join(str(c) for c in coeffs), metric, dist,
                         _bool(deep), "" if wit is None else ",".join(str(c) for c in wit)])
    _emit(args, buf.getvalue())
    return 0


def _cmd_family(args) -> int:
    code = _load(args)
    kwargs = {}
    if args.a is not None:
        kwargs["a"] = args.a
    if args.b is not None:
        kwargs["b"] = args.b
    if args.c is not None:
        kwargs["c"] = args.c
    if args.low is not None:
        kwargs["low"] = LinPoly(code.ctx, _parse_codes(args.low))
    verdict = family_check(code, args.kind, metric=args.metric,
                           subspace_cap=args.cap or DEFAULT_SUBSPACE_CAP, **kwargs)
    parts = []
    for key, val in verdict.params.items():
        parts.append(f"{key}=" + (",".join(str(v) for v in val)
                                  if isinstance(val, (list, tuple)) else str(val)))
    observed = "deep_hole" if verdict.observed.is_deep_hole else "not_deep_hole"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "params", "predicted", "observed", "agree"])
    writer.writerow([verdict.kind, ";".join(parts), verdict.predicted, observed,
                     _bool(verdict.agree)])
    _emit(args, buf.getvalue())
    return 0


def _cmd_quadric(args) -> int:
    code = _load(args)
    census = quadric_census(code.ctx, args.b, materialize=args.solutions)
    lines = [str(census.count)]
    if args.solutions:
        lines.extend(f"{c1.code},{c2.code}" for c1, c2 in census.solutions)
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_selftest(args) -> int:
    results = acceptance.run_all(numbers=args.numbers or None, seed=args.seed)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"criterion {r.number}: {status} - {r.title}: {r.detail}")
    if not results:
        print("no matching criteria", file=sys.stderr)
        return 1
    return 0 if all(r.passed for r in results) else 1


# -- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gab",
        description="distance and deep-hole laboratory for rank-metric evaluation codes")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *, spec=True, metric=False, word=False, poly=False,
            cap=False, jobs=False, out=False):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        if spec:
            p.add_argument("--spec", required=True, help="path to the code spec file")
        if metric:
            p.add_argument("--metric", choices=METRICS, default="rank")
        if word:
            p.add_argument("--word", required=True,
                           help="comma-separated element codes, one per point")
        if poly:
            p.add_argument("--poly", required=True,
                           help="comma-separated coefficient codes, degree 0 first")
        if cap:
            p.add_argument("--cap", type=int, default=None,
                           help="override the enumeration cap")
        if jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="parallel workers (output is identical at any count)")
        if out:
            p.add_argument("--out", default=None, help="write output to a file")
        return p

    add("field", _cmd_field, "print the field and code parameters", out=True)
    add("encode", _cmd_encode, "evaluate a message polynomial at the points",
        poly=True, out=True)
    add("dist", _cmd_dist, "exhaustive distance of a word to the code",
        metric=True, word=True, cap=True, out=True)
    add("search", _cmd_search, "distance by the descending witness search",
        metric=True, word=True, cap=True, out=True)
    add("classify", _cmd_classify, "deep-hole status of a word",
        metric=True, word=True, cap=True, out=True)
    add("mindist", _cmd_mindist, "exhaustive minimum distance",
        metric=True, cap=True, out=True)
    add("radius", _cmd_radius, "covering radius by the class scan",
        metric=True, cap=True, jobs=True, out=True)
    add("census", _cmd_census, "CSV of every translation class",
        metric=True, cap=True, jobs=True, out=True)
    fam = add("family", _cmd_family, "build and verify one structured-family word",
              metric=True, cap=True, out=True)
    fam.add_argument("kind", choices=FAMILY_KINDS)
    fam.add_argument("--a", type=int, default=None, help="leading parameter code")
    fam.add_argument("--b", type=int, default=None, help="quartic middle coefficient code")
    fam.add_argument("--c", type=int, default=None, help="linear coefficient code")
    fam.add_argument("--low", default=None,
                     help="low-part coefficient codes, degree 0 first")
    quad = add("quadric", _cmd_quadric, "census of x1^2+x1x2+x2^2 = b over the field",
               out=True)
    quad.add_argument("--b", type=int, required=True, help="right-hand side code")
    quad.add_argument("--solutions", action="store_true",
                      help="also list the distinct-coordinate pairs")
    st = sub.add_parser("selftest", help="run the built-in verification suite")
    st.set_defaults(func=_cmd_selftest)
    st.add_argument("numbers", nargs="*", type=int,
                    help="criterion numbers to run (default: all)")
    st.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
