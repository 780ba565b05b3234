"""Command-line interface.

Subcommands:

* ``count``      -- one weighted count, or a census table up to a perimeter bound
* ``poly``       -- a Laplace-transformed or volume polynomial (text/JSON/LaTeX)
* ``verify``     -- run the internal consistency suites
* ``intersect``  -- intersection numbers read off the symplectic volume

All output is deterministic for fixed arguments: table rows, JSON keys and
verification cases are emitted in sorted order, and randomized suites are
driven by the --seed value.  Exit status is 0 on success, 1 when a
verification or computation fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ._version import __version__
from .crosscheck import (
    golden_laplace,
    intersection_ratio_report,
    series_identity,
    verify_continuous_recursion,
)
from .eo import CURVES, verify_eo
from .lattice import census, count
from .surface import is_stable
from .transform import (
    CONFIGS,
    LAPLACE,
    compute,
    euclidean_matches_leading,
    kontsevich_ratio,
)

_POLY_KINDS = {"L": "laplace", "VE": "euclidean", "VS": "symplectic"}

_SERIES_TYPES = ((0, 3), (1, 1), (0, 4), (1, 2))
_EO_TYPES = ((0, 3), (1, 1), (0, 4), (1, 2), (2, 1))
_CONTINUOUS_TYPES = ((0, 4), (1, 2))


def _parse_gn(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("expected the form g,n")
    g, n = (int(part) for part in parts)
    if not is_stable(g, n):
        raise ValueError(f"({g}, {n}) is not a stable surface type")
    return g, n


def _fraction_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _poly_text(poly) -> str:
    if not poly:
        return "0"
    pieces = []
    for exps, coeff in poly.sorted_terms():
        factors = [f"t{j + 1}^{2 * e}" for j, e in enumerate(exps) if e]
        body = " ".join(factors) if factors else "1"
        pieces.append(f"({coeff}) {body}")
    return " + ".join(pieces)


def _stable_types(max_complexity: int) -> list[tuple[int, int]]:
    out = []
    for g in range(max_complexity // 2 + 2):
        for n in range(1, max_complexity + 3):
            if 0 < 2 * g - 2 + n <= max_complexity:
                out.append((g, n))
    return sorted(out, key=lambda t: (2 * t[0] - 2 + t[1], t[0]))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_count(args, parser) -> int:
    try:
        g, n = _parse_gn(args.gn)
    except ValueError as exc:
        parser.error(str(exc))
    if (args.p is None) == (args.max_sum is None):
        parser.error("provide exactly one of --p and --max-sum")

    if args.p is not None:
        try:
            p = tuple(int(part) for part in args.p.split(","))
            value = count(g, n, p)
        except ValueError as exc:
            parser.error(str(exc))
        if args.format == "json":
            doc = {"g": g, "n": n, "p": list(p), "value": _fraction_text(value)}
            print(json.dumps(doc, sort_keys=True))
        else:
            print(_fraction_text(value))
        return 0

    table = census(g, n, args.max_sum, cache_dir=args.cache_dir)
    if args.format == "csv":
        sys.stdout.write(table.csv_text())
    elif args.format == "json":
        print(json.dumps(table.to_json_dict(), indent=2, sort_keys=True))
    else:
        for p, value in table.rows():
            print(f"{' '.join(str(v) for v in p)}\t{_fraction_text(value)}")
    return 0


def _cmd_poly(args, parser) -> int:
    config = CONFIGS[_POLY_KINDS[args.kind]]
    if not is_stable(args.g, args.n):
        parser.error(f"({args.g}, {args.n}) is not a stable surface type")
    poly = compute(config, args.g, args.n)
    if args.format == "json":
        doc = poly.to_json_dict()
        doc["kind"] = args.kind
        doc["g"], doc["n"] = args.g, args.n
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif args.format == "latex":
        print(poly.to_latex())
    else:
        print(_poly_text(poly))
    return 0


def _verify_cases(suite: str, level: int | None, seed: int, trials: int):
    """Yield (suite, case, ok, detail) rows for one suite."""
    if suite == "golden":
        reference = golden_laplace()
        for (g, n), expected in sorted(reference.items()):
            ok = compute(LAPLACE, g, n) == expected
            yield suite, f"L({g},{n})", ok, "matches closed form"
    elif suite == "ratio":
        bound = level if level is not None else 5
        for g, n in _stable_types(bound):
            target = Fraction(2) ** (5 * g - 5 + 2 * n)
            try:
                ok = kontsevich_ratio(g, n) == target
            except ArithmeticError:
                ok = False
            yield suite, f"VS/VE({g},{n})", ok, f"2^{5 * g - 5 + 2 * n}"
    elif suite == "leading":
        bound = level if level is not None else 5
        for g, n in _stable_types(bound):
            yield suite, f"VE({g},{n})", euclidean_matches_leading(g, n), "top part of L"
    elif suite == "series":
        bound = level if level is not None else 12
        for g, n in _SERIES_TYPES:
            try:
                checked = series_identity(g, n, bound)
                yield suite, f"series({g},{n})", True, f"{checked} lattice points"
            except ArithmeticError as exc:
                yield suite, f"series({g},{n})", False, str(exc)
    elif suite == "eo":
        for name in sorted(CURVES):
            for g, n in _EO_TYPES:
                results = verify_eo(CURVES[name], g, n, trials=trials, seed=seed)
                ok = all(flag for _, flag in results)
                yield suite, f"residues[{name}]({g},{n})", ok, f"{len(results)} trials"
    elif suite == "symplectic":
        for g, n in _CONTINUOUS_TYPES:
            results = verify_continuous_recursion(g, n, trials=trials, seed=seed)
            ok = all(flag for _, flag in results)
            yield suite, f"integral({g},{n})", ok, f"{len(results)} chamber points"
    else:  # pragma: no cover - guarded by argparse choices
        raise ValueError(suite)


def _cmd_verify(args, parser) -> int:
    suites = (
        ["golden", "ratio", "leading", "series", "eo", "symplectic"]
        if args.suite == "all"
        else [args.suite]
    )
    failures = 0
    for suite in suites:
        for row in _verify_cases(suite, args.level, args.seed, args.trials):
            suite_name, case, ok, detail = row
            if not ok:
                failures += 1
            if args.format == "jsonl":
                doc = {"suite": suite_name, "case": case, "ok": ok, "detail": detail}
                print(json.dumps(doc, sort_keys=True))
            else:
                mark = "ok  " if ok else "FAIL"
                print(f"{mark} {suite_name:<10} {case:<24} {detail}")
    if failures and args.format != "jsonl":
        print(f"{failures} check(s) failed")
    return 1 if failures else 0


def _cmd_intersect(args, parser) -> int:
    if not is_stable(args.g, args.n):
        parser.error(f"({args.g}, {args.n}) is not a stable surface type")
    try:
        rows = intersection_ratio_report(args.g, args.n)
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    ratios = set()
    for key, literal, classical, ratio in rows:
        tau = " ".join(f"tau_{d}" for d in key)
        line = f"<{tau}> literal={literal}"
        if classical is not None:
            line += f" classical={classical} ratio={ratio}"
            ratios.add(ratio)
        print(line)
    if ratios and len(ratios) == 1:
        print(f"common literal/classical ratio: {ratios.pop()}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ribbonvol",
        description="Exact counts and volume polynomials for integral ribbon graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="weighted counts of integral ribbon graphs")
    p_count.add_argument("--gn", required=True, metavar="G,N", help="surface type, e.g. 1,2")
    p_count.add_argument("--p", metavar="P1,P2,..", help="one perimeter vector")
    p_count.add_argument(
        "--max-sum", type=int, metavar="S", help="census of all vectors with sum <= S"
    )
    p_count.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_count.add_argument("--cache-dir", metavar="DIR", help="directory for census caching")

    p_poly = sub.add_parser("poly", help="print a polynomial")
    p_poly.add_argument("kind", choices=sorted(_POLY_KINDS), help="L, VE or VS")
    p_poly.add_argument("g", type=int)
    p_poly.add_argument("n", type=int)
    p_poly.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p_verify = sub.add_parser("verify", help="run consistency suites")
    p_verify.add_argument(
        "--suite",
        choices=("golden", "ratio", "leading", "series", "eo", "symplectic", "all"),
        default="all",
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument(
        "--level",
        type=int,
        default=None,
        help="complexity bound for ratio/leading, perimeter-sum bound for series",
    )
    p_verify.add_argument("--trials", type=int, default=5)
    p_verify.add_argument("--format", choices=("text", "jsonl"), default="text")

    p_int = sub.add_parser("intersect", help="intersection numbers from V^S")
    p_int.add_argument("g", type=int)
    p_int.add_argument("n", type=int)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": _cmd_count,
        "poly": _cmd_poly,
        "verify": _cmd_verify,
        "intersect": _cmd_intersect,
    }
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
