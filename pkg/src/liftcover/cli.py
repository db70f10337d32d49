"""Command-line front end.

Subcommands: lift, find-cover, census, rmin, verify, export.

Exit codes: 0 lifts / success, 1 does not lift, 2 usage or precondition
error, 3 criterion/traversal disagreement or failed verification, 4 search
budget exhausted.  Errors go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from liftcover import census, verify
from liftcover.cover import from_json, lift_check, to_dot, to_json
from liftcover.errors import BudgetExceeded, InconsistencyError, LiftCoverError
from liftcover.families import build_cover, criterion, identify_family, parse_family
from liftcover.solver import LemmaCase, find_prime_normal_cover
from liftcover.words import parse_word

EXIT_LIFT, EXIT_NO_LIFT, EXIT_USAGE, EXIT_TRIPWIRE, EXIT_BUDGET = 0, 1, 2, 3, 4


def _cover_dict(c):
    return json.loads(to_json(c))


def _spec_dict(spec):
    return {"variant": spec.variant, "n": spec.n, "l": spec.l, "u": spec.u, "v": spec.v, "k": spec.k,
            "text": spec.text}


def _read_word(args, n):
    text = sys.stdin.read() if args.word == "-" else args.word
    return parse_word(text, n)


def _load_cover(path):
    with open(path) as fh:
        return from_json(fh.read())


def _resolve_cover(args):
    """(spec or None, cover, rank) from -f/-F and -n."""
    if args.cover_file:
        cover = _load_cover(args.cover_file)
        if args.n is not None and args.n != cover.n:
            raise LiftCoverError(f"-n {args.n} does not match the cover file rank {cover.n}")
        return None, cover, cover.n
    if args.family:
        if args.n is None:
            raise LiftCoverError("-n is required with -f")
        spec = parse_family(args.family, args.n)
        return spec, build_cover(spec), args.n
    raise LiftCoverError("one of -f FAMILY or -F COVER_FILE is required")


def _need_n(args):
    if args.n is None:
        raise LiftCoverError("-n is required")
    return args.n


# -- subcommands ------------------------------------------------------------

def cmd_lift(args) -> int:
    spec, cover, n = _resolve_cover(args)
    w = _read_word(args, n)
    start = cover.base if args.start is None else args.start
    report = lift_check(w, cover, start)
    crit = criterion(w, spec) if spec is not None else None
    verdict = {
        "word": w.render(),
        "family": spec.text if spec else None,
        "criterion": crit,
        "traversal": {"closed": report.closed, "start": report.start, "end_sheet": report.end_sheet},
        "lifts": report.closed,
    }
    if crit is not None and crit != report.closed:
        raise InconsistencyError("criterion and traversal disagree:\n" + json.dumps(
            {**verdict, "cover": _cover_dict(cover)}, indent=2))
    if args.format == "json":
        print(json.dumps(verdict))
    elif args.format == "dot":
        print(to_dot(cover), end="")
    else:
        name = spec.text if spec else args.cover_file
        crit_txt = "n/a" if crit is None else ("lifts" if crit else "no lift")
        print(f"{w} on {name}: {'lifts' if report.closed else 'does not lift'} "
              f"(criterion: {crit_txt}; traversal: sheet {report.start} -> {report.end_sheet})")
    return EXIT_LIFT if report.closed else EXIT_NO_LIFT


def _lemma_dict(lemma):
    if isinstance(lemma, LemmaCase):
        return {"case": lemma.case_id, "a": lemma.a, "b": lemma.b, "p": lemma.p, "x": lemma.x}
    return {"case": "PARITY", "reason": lemma}


def cmd_find_cover(args) -> int:
    n = _need_n(args)
    w = _read_word(args, n)
    pair = tuple(int(x) for x in args.pair.split(",")) if args.pair else None
    if pair is not None and len(pair) != 2:
        raise LiftCoverError("--pair takes two generator indices like 1,2")
    res = find_prime_normal_cover(w, args.p, pair)
    if args.format == "json":
        print(json.dumps({"word": w.render(), "p": args.p, "family": res.spec.text, "spec": _spec_dict(res.spec),
                          "pair": list(res.pair), "lemma": _lemma_dict(res.lemma), "cover": _cover_dict(res.cover)}))
    elif args.format == "dot":
        print(to_dot(res.cover), end="")
    else:
        print(res.spec.text)
    return EXIT_LIFT


def cmd_census(args) -> int:
    q = census.CensusQuery(_need_n(args), args.degree, require_connected=args.connected,
                           require_normal=args.normal, up_to_iso=args.up_to_iso, max_tuples=args.budget)
    covers = census.enumerate_covers(q, jobs=args.jobs)
    if args.format == "dot":
        for i, c in enumerate(covers):
            print(to_dot(c, name=f"cover{i}"), end="")
        return EXIT_LIFT
    summary = {"n": q.n, "degree": q.degree, "connected": q.require_connected, "normal": q.require_normal,
               "up_to_iso": q.up_to_iso, "count": len(covers)}
    if args.format == "json":
        for c in covers:
            print(to_json(c))
        print(json.dumps({"summary": summary}))
    else:
        for c in covers:
            name = identify_family(c)
            print(" ".join(str(list(p)) for p in c.perms) + (f"  {name.text}" if name else ""))
        print(f"{len(covers)} covers")
    return EXIT_LIFT


def cmd_rmin(args) -> int:
    n = _need_n(args)
    w = _read_word(args, n)
    res = census.min_nonlift_degree(w, dmax=args.dmax, max_tuples=args.budget, jobs=args.jobs)
    name = identify_family(res.witness) if res.witness else None
    if args.format == "json":
        print(json.dumps({"word": w.render(), "r": res.r, "witness": _cover_dict(res.witness) if res.witness else None,
                          "witness_family": name.text if name else None, "covers_checked": res.covers_checked}))
    elif args.format == "dot" and res.witness:
        print(to_dot(res.witness), end="")
    elif res.r is None:
        print("r = none (identity lifts to every cover)")
    else:
        label = name.text if name else " ".join(str(list(p)) for p in res.witness.perms)
        print(f"r = {res.r}, witness {label}")
    return EXIT_LIFT


def _run_check(item):
    fn_name, kwargs = item
    return getattr(verify, fn_name)(**kwargs)


def cmd_verify(args) -> int:
    log = None if args.format == "json" else print
    if args.jobs > 1:
        plan = verify.plan(args.quick)
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_check, [(fn.__name__, kw) for fn, kw in plan]))
        if log:
            for r in results:
                log(r.line())
    else:
        results = verify.run_all(quick=args.quick, log=log)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps([{"name": r.name, "passed": r.passed, "checked": r.checked, "detail": r.detail,
                           "seconds": round(r.seconds, 3), "failures": r.failures[:20]} for r in results]))
    else:
        for r in results:
            for f in r.failures[:5]:
                print(f"  {r.name}: {f}")
        print(f"{sum(r.passed for r in results)}/{len(results)} suites passed")
    return EXIT_LIFT if ok else EXIT_TRIPWIRE


def cmd_export(args) -> int:
    _, cover, _ = _resolve_cover(args)
    if args.format == "json":
        print(to_json(cover))
    else:
        print(to_dot(cover), end="")
    return EXIT_LIFT


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liftcover", description="Lifting closed curves to finite covers of a bouquet of circles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="text", formats=("json", "text", "dot")):
        p.add_argument("-n", type=int, default=None, help="rank of the free group")
        p.add_argument("--format", choices=formats, default=fmt_default)
        p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("lift", help="decide whether a word lifts to a family cover or a cover file")
    common(p)
    p.add_argument("-w", "--word", required=True, help="word like 'a1^2 a2^-3'; '-' reads stdin")
    p.add_argument("-f", "--family", help="family like 'M:1,2^3@7' or 'L:1'")
    p.add_argument("-F", "--cover-file", help="cover JSON document")
    p.add_argument("--start", type=int, default=None, help="start sheet (default: the base)")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("find-cover", help="a p-sheeted normal cover the word lifts to")
    common(p, fmt_default="json")
    p.add_argument("-w", "--word", required=True)
    p.add_argument("-p", type=int, required=True, help="prime degree")
    p.add_argument("--pair", default=None, help="generator pair u,v (default 1,2)")
    p.set_defaults(func=cmd_find_cover)

    p = sub.add_parser("census", help="enumerate covers of a given degree")
    common(p, fmt_default="json")
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--normal", action="store_true")
    p.add_argument("--up-to-iso", action="store_true", help="one cover per isomorphism class, base ignored")
    p.add_argument("--budget", type=int, default=census.DEFAULT_MAX_TUPLES, help="max permutation tuples")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("rmin", help="minimal degree of a connected cover the word fails to lift to")
    common(p)
    p.add_argument("-w", "--word", required=True)
    p.add_argument("--dmax", type=int, default=census.DEFAULT_DMAX)
    p.add_argument("--budget", type=int, default=census.DEFAULT_MAX_TUPLES)
    p.set_defaults(func=cmd_rmin)

    p = sub.add_parser("verify", help="run the property suites")
    common(p)
    p.add_argument("--quick", action="store_true", help="smaller corpora")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="print a family cover or cover file as DOT or JSON")
    common(p, fmt_default="dot", formats=("json", "dot"))
    p.add_argument("-f", "--family")
    p.add_argument("-F", "--cover-file")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_TRIPWIRE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc} (proven lower bound: {exc.lower_bound})", file=sys.stderr)
        return EXIT_BUDGET
    except (LiftCoverError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
