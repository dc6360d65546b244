"""Command-line interface.

Subcommands:

* ``homfly``  compute one polynomial from a braid word, PD file, or
              half-twist matrix, optionally doubled or Whitehead-doubled.
* ``stats``   diagram statistics only (crossings, Seifert circles, writhe,
              components, degree bound, canonical genus).
* ``verify``  run verification suites; exit 0 iff all selected checks pass.
* ``cache``   inspect or compact a polynomial cache file.

Exit codes: 0 all checks pass; 1 check failure (or, with ``--strict``, a
budget skip); 2 usage error.  The default cache path comes from the
``SKEINKIT_CACHE`` environment variable when set.
"""

from __future__ import annotations

import argparse
import os
import sys

from .braid import BraidWord
from .diagram import LinkDiagram, from_braid_closure
from .errors import BudgetExceededError, SkeinKitError
from .hecke import homfly_closed_braid
from .jones import jones_via_bracket, specialize_homfly_to_jones
from .report import InvariantReport, reports_to_csv, reports_to_json
from .satellite import blackboard_double, build_K_A, canonical_double, canonical_whitehead
from .skein import SkeinEngine
from .suites import SUITES, SuiteConfig, run_suites

__all__ = ["main"]

CACHE_ENV = "SKEINKIT_CACHE"


class UsageError(Exception):
    pass


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--braid", metavar="WORD", help='braid word, e.g. "3: 2 -1 2 -1 2 -1"')
    p.add_argument("--pd", metavar="FILE", help="file with a PD[...] diagram ('-' for stdin)")
    p.add_argument("--k-a", metavar="FILE", help="r x 3 comma-separated half-twist matrix")
    p.add_argument("--double", action="store_true", help="take the doubled link diagram")
    p.add_argument("--whitehead", choices=["+", "-"], help="take the Whitehead double")
    p.add_argument("--twists-to", type=int, metavar="M", help="framing target for the double")


def _add_budget_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cache", metavar="PATH", help="polynomial cache file")
    p.add_argument("--nodes", type=int, default=10**8, help="skein node budget")
    p.add_argument("--timeout", type=float, default=None, metavar="SECONDS", help="wall budget")
    p.add_argument("--out", choices=["text", "json", "csv"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skeinkit", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_h = sub.add_parser("homfly", help="compute a HOMFLYPT polynomial")
    _add_input_options(p_h)
    p_h.add_argument("--engine", choices=["skein", "hecke", "both"], default="skein")
    p_h.add_argument("--check", choices=["jones"], help="cross-check against the bracket oracle")
    _add_budget_options(p_h)

    p_s = sub.add_parser("stats", help="diagram statistics")
    _add_input_options(p_s)
    p_s.add_argument("--out", choices=["text", "json", "csv"], default="text")

    p_v = sub.add_parser("verify", help="run verification suites")
    p_v.add_argument(
        "--suite",
        default="all",
        choices=sorted(SUITES) + ["all"],
        help="which suite to run",
    )
    p_v.add_argument("--r-max", type=int, default=2, help="largest r for the main suite")
    p_v.add_argument("--stretch", action="store_true", help="attempt the r=3 stretch computation")
    p_v.add_argument("--strict", action="store_true", help="budget skips fail the run")
    p_v.add_argument("--no-jones", action="store_true", help="skip the bracket cross-checks")
    _add_budget_options(p_v)

    p_c = sub.add_parser("cache", help="inspect or compact a cache file")
    p_c.add_argument("action", choices=["inspect", "compact"])
    p_c.add_argument("--cache", metavar="PATH", help="cache file (default from environment)")

    return parser


def _cache_path(args) -> str | None:
    return getattr(args, "cache", None) or os.environ.get(CACHE_ENV)


def _read_matrix(path: str) -> list:
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append([int(tok) for tok in line.split(",")])
    return rows


def _base_diagram(args) -> tuple:
    sources = [s for s in ("braid", "pd", "k_a") if getattr(args, s.replace("-", "_"), None)]
    if len(sources) != 1:
        raise UsageError("exactly one of --braid, --pd, --k-a is required")
    try:
        if args.braid:
            word = BraidWord.parse_text(args.braid)
            return from_braid_closure(word), f"braid({args.braid.strip()})", word
        if args.pd:
            text = (
                sys.stdin.read() if args.pd == "-" else open(args.pd, "r", encoding="utf-8").read()
            )
            return LinkDiagram.from_pd_text(text), f"pd({args.pd})", None
        matrix = _read_matrix(args.k_a)
        return build_K_A(matrix), f"k-a({args.k_a})", None
    except (ValueError, SkeinKitError) as exc:
        raise UsageError(f"malformed input: {exc}") from exc


def _construct(args) -> tuple:
    d, desc, word = _base_diagram(args)
    if args.whitehead and args.double:
        raise UsageError("--double and --whitehead are mutually exclusive")
    if args.twists_to is not None and not (args.double or args.whitehead):
        raise UsageError("--twists-to needs --double or --whitehead")
    if args.whitehead:
        m = args.twists_to if args.twists_to is not None else d.writhe()
        sign = 1 if args.whitehead == "+" else -1
        d = canonical_whitehead(d, m, sign)
        desc = f"whitehead({args.whitehead}, m={m}, {desc})"
        word = None
    elif args.double:
        if args.twists_to is not None:
            d = canonical_double(d, args.twists_to)
            desc = f"double(m={args.twists_to}, {desc})"
        else:
            d = blackboard_double(d)
            desc = f"double({desc})"
        word = None
    return d, desc, word


def _emit(reports: list, out: str) -> None:
    if out == "json":
        print(reports_to_json(reports))
    elif out == "csv":
        print(reports_to_csv(reports), end="")
    else:
        for rep in reports:
            for line in rep.text_lines():
                print(line)


def _cmd_homfly(args) -> int:
    d, desc, word = _construct(args)
    engine = SkeinEngine(
        node_budget=args.nodes, wall_seconds=args.timeout, cache_path=_cache_path(args)
    )
    rep = InvariantReport(desc, args.engine)
    skein_poly = hecke_poly = None
    try:
        if args.engine in ("skein", "both"):
            skein_poly = engine.homfly(d)
        if args.engine in ("hecke", "both"):
            if word is None:
                raise UsageError(
                    "the hecke engine accepts coherent braid-closure inputs only; "
                    "doubled and PD inputs go through --engine skein"
                )
            hecke_poly = homfly_closed_braid(word)
    except BudgetExceededError as exc:
        rep.skip("computation", f"budget exhausted: {exc}")
        _emit([rep], args.out)
        return 1

    p = skein_poly if skein_poly is not None else hecke_poly
    rep.polynomial = p
    rep.max_z = p.max_z_degree() if not p.is_zero else None
    rep.morton = d.stats().morton_bound
    if args.engine == "both":
        rep.check("engines-agree", True, skein_poly == hecke_poly)
    if args.check == "jones":
        rep.check(
            "jones-specialization-equals-bracket",
            True,
            specialize_homfly_to_jones(p) == jones_via_bracket(d),
        )
    if engine.cache_path:
        engine.save_cache()
    _emit([rep], args.out)
    if args.out == "text" and args.engine == "both" and skein_poly == hecke_poly:
        print("engines agree")
    return 1 if rep.failed else 0


def _cmd_stats(args) -> int:
    d, desc, _ = _construct(args)
    st = d.stats()
    rep = InvariantReport(desc, "stats")
    rep.morton = st.morton_bound
    if args.out == "text":
        print(
            f"{desc}: c={st.crossings} s={st.seifert_circles} w={st.writhe} "
            f"mu={st.components} bound={st.morton_bound} genus={st.canonical_genus}"
        )
    else:
        rep.check("crossings", st.crossings, st.crossings)
        rep.check("seifert-circles", st.seifert_circles, st.seifert_circles)
        rep.check("writhe", st.writhe, st.writhe)
        rep.check("components", st.components, st.components)
        rep.check("genus", str(st.canonical_genus), str(st.canonical_genus))
        _emit([rep], args.out)
    return 0


def _cmd_verify(args) -> int:
    engine = SkeinEngine(
        node_budget=args.nodes, wall_seconds=args.timeout, cache_path=_cache_path(args)
    )
    cfg = SuiteConfig(
        engine=engine, r_max=args.r_max, stretch=args.stretch, jones_check=not args.no_jones
    )
    reports = run_suites([args.suite], cfg)
    if engine.cache_path:
        engine.save_cache()
    _emit(reports, args.out)
    failed = any(r.failed for r in reports)
    skipped = any(r.skipped for r in reports)
    if args.out == "text":
        counts = (
            sum(1 for r in reports for c in r.checks if c.status == "PASS"),
            sum(1 for r in reports for c in r.checks if c.status == "FAIL"),
            sum(1 for r in reports for c in r.checks if c.status == "SKIP"),
        )
        print(f"checks: {counts[0]} passed, {counts[1]} failed, {counts[2]} skipped")
    if failed:
        return 1
    if skipped and args.strict:
        return 1
    return 0


def _cmd_cache(args) -> int:
    path = _cache_path(args)
    if not path:
        raise UsageError(f"no cache path given (set --cache or {CACHE_ENV})")
    engine = SkeinEngine(cache_path=path)
    size = os.path.getsize(path) if os.path.exists(path) else 0
    print(f"cache {path}: {len(engine.memo)} entries, {size} bytes")
    if args.action == "compact":
        written = engine.save_cache(path)
        print(f"rewrote {written} entries")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "homfly":
            return _cmd_homfly(args)
        if args.command == "stats":
            return _cmd_stats(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "cache":
            return _cmd_cache(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SkeinKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
