"""``rho-r`` command line front end.

Exit codes: 0 feasible / success, 1 infeasible (certificate printed),
2 usage or parameter error, 3 resource cap or search budget exhausted.
Errors print one line to stderr: ``rho-r: error[<kind>]: <message>``.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from contextlib import redirect_stdout
from fractions import Fraction
from importlib import resources
from io import StringIO
from pathlib import Path

from .bounds import Th1Params, path_bounds
from .cache import default_cache_path
from .constructions import (
    DoubleStarSpec,
    anticlique_profile,
    double_star_graph,
    double_star_profile,
    double_star_value,
    path_ub_profile,
    path_ub_value,
)
from .errors import NoRainbowError, ResourceError, RhoError
from .formats import (
    Target,
    format_coloring,
    format_profile,
    parse_coloring,
    parse_profile,
    parse_target,
    read_profiles,
)
from .search import (
    SearchConfig,
    min_profiles_cycle,
    min_profiles_path,
    verify_conjectures,
)
from .verifier import (
    Verdict,
    check_anticlique,
    check_cycle,
    check_general,
    check_path,
    extract_rainbow,
    make_bad_coloring,
    random_proper_coloring,
)

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

log = logging.getLogger("rho_r")


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, default=_json_default))
    else:
        print(human)


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def _verdict_for(target: Target, p, mode: str | None) -> Verdict:
    if target.kind == "path":
        return check_path(p)
    if target.kind == "cycle":
        return check_cycle(p)
    if target.kind == "anticlique" and mode is None:
        return check_anticlique(p)
    h = target.graph(len(p))
    if mode is None:
        mode = "clique" if target.perfect else "chromatic"
    return check_general(h, p, mode)


def _profiles_arg(args) -> list[tuple[int, ...]]:
    if args.profile_file:
        return read_profiles(args.profile_file)
    if args.profile is None:
        raise _Usage("give --profile or --profile-file")
    return [parse_profile(args.profile)]


class _Usage(RhoError):
    kind = "usage"


def cmd_verify(args) -> int:
    target = parse_target(args.target)
    rows = []
    for p in _profiles_arg(args):
        v = _verdict_for(target, p, args.mode)
        rows.append((p, v))
    code = EXIT_OK if all(v.feasible for _, v in rows) else EXIT_INFEASIBLE
    if args.json:
        results = [{"profile": list(p), **v.to_json()} for p, v in rows]
        payload = {"command": "verify", "target": args.target, "results": results,
                   "feasible": code == EXIT_OK}
        print(json.dumps(payload))
    else:
        for p, v in rows:
            if v.feasible:
                print(f"{format_profile(p)}\tfeasible")
            else:
                w = v.witness
                print(f"{format_profile(p)}\tinfeasible\twitness={format_profile(w.subset)}"
                      f"\tachieved={w.achieved}")
    return code


def cmd_construct(args) -> int:
    kind = args.kind
    nums = args.numbers
    if kind == "path-ub":
        _arity(nums, 1, kind)
        (n,) = nums
        p = path_ub_profile(n)
        value = path_ub_value(n)
        feasible = check_path(p).feasible
    elif kind == "double-star":
        _arity(nums, 2, kind)
        spec = DoubleStarSpec(*nums)
        p = double_star_profile(spec)
        value = double_star_value(spec)
        feasible = check_general(double_star_graph(spec), p, "clique").feasible
    else:
        _arity(nums, 1, kind)
        (n,) = nums
        p = anticlique_profile(n)
        value = n * (n + 1) // 2
        feasible = check_anticlique(p).feasible
    payload = {"command": "construct", "construction": kind, "args": nums,
               "profile": list(p), "total": sum(p), "value": value, "feasible": feasible}
    _emit(args, payload, f"{format_profile(p)}\ntotal={sum(p)} value={value}")
    return EXIT_OK


def _arity(nums, k, kind):
    if len(nums) != k:
        raise _Usage(f"construct {kind} takes {k} integer(s)")


def cmd_bounds(args) -> int:
    params = Th1Params.parse(args.params) if args.params else None
    out = path_bounds(args.n, params, as_stated=args.as_stated)
    payload = {"command": "bounds", "family": "path", **out}
    if params is not None:
        payload["params"] = [str(x) for x in (params.a_prime, params.a, params.b,
                                              params.c, params.d)]
    print(json.dumps(payload, default=_json_default))
    return EXIT_OK


def _search_cfg(args) -> SearchConfig:
    cache = None
    if not args.no_cache:
        cache = str(args.cache) if args.cache else str(default_cache_path())
    kw = dict(budget=args.budget, threads=args.threads, cache_path=cache,
              recompute=args.recompute)
    return SearchConfig.no_prune(**kw) if args.no_prune else SearchConfig(**kw)


def cmd_search(args) -> int:
    cfg = _search_cfg(args)
    run = min_profiles_path if args.family == "path" else min_profiles_cycle
    result = run(args.n, cfg)
    lines = [f"rho_R({'P' if args.family == 'path' else 'C'}_{args.n}) = {result.rho} "
             f"({result.count} profiles)"]
    lines += [f"{i}) {format_profile(p)}" for i, p in enumerate(result.profiles, 1)]
    _emit(args, {"command": "search", **result.to_json()}, "\n".join(lines))
    return EXIT_OK


def cmd_conjectures(args) -> int:
    cfg = _search_cfg(args)
    rows = verify_conjectures(args.max, cfg)
    if args.json:
        print(json.dumps({"command": "conjectures", "rows": [r.to_json() for r in rows]}))
    else:
        print("n\trho(P)\tupper\tgap\todd-tight\tresidual\trho(C)\tC=P")
        for r in rows:
            print(f"{r.n}\t{r.rho_path}\t{r.upper}\t{r.gap}\t{_tri(r.odd_tight)}\t{r.residual}"
                  f"\t{'-' if r.rho_cycle is None else r.rho_cycle}\t{_tri(r.cycle_equal)}")
    return EXIT_OK


def _tri(x) -> str:
    return "-" if x is None else ("yes" if x else "NO")


def _host_and_profile(args):
    target = parse_target(args.target)
    p = parse_profile(args.profile)
    return target, target.graph(len(p)), p


def cmd_rainbow(args) -> int:
    target, h, p = _host_and_profile(args)
    if args.coloring:
        c = parse_coloring(Path(args.coloring).read_text(), p)
    else:
        c = random_proper_coloring(h, p, random.Random(args.seed))
    try:
        ra = extract_rainbow(h, p, c)
    except NoRainbowError as exc:
        payload = {"command": "rainbow", "found": False, "hall_set": list(exc.hall_set),
                   "colors_used": exc.colors_used, "coloring": list(c.colors)}
        _emit(args, payload, f"no rainbow transversal: cliques {format_profile(exc.hall_set)} "
                             f"use {exc.colors_used} colors")
        return EXIT_INFEASIBLE
    payload = {"command": "rainbow", "found": True, **ra.to_json(), "coloring": list(c.colors)}
    human = "\n".join(f"clique {v.clique} member {v.member} color {col}"
                      for v, col in zip(ra.picks, ra.colors))
    _emit(args, payload, human)
    return EXIT_OK


def cmd_badcolor(args) -> int:
    target, h, p = _host_and_profile(args)
    if args.subset:
        subset = list(parse_profile_indices(args.subset))
    else:
        v = _verdict_for(target, p, None)
        if v.feasible:
            _emit(args, {"command": "badcolor", "feasible": True},
                  "feasible: every proper coloring has a rainbow transversal")
            return EXIT_OK
        subset = list(v.witness.subset)
    c = make_bad_coloring(h, p, subset)
    payload = {"command": "badcolor", "feasible": False, "subset": subset,
               "coloring": list(c.colors)}
    _emit(args, payload, format_coloring(c).rstrip("\n"))
    return EXIT_INFEASIBLE


def parse_profile_indices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise _Usage(f"cannot parse subset {text!r}") from None


# --- manifests ------------------------------------------------------------------


def _matches(expected, actual) -> bool:
    if isinstance(expected, dict):
        return isinstance(actual, dict) and all(
            k in actual and _matches(v, actual[k]) for k, v in expected.items()
        )
    return expected == actual


def run_suite(manifest: str | Path, out=None) -> dict:
    """Run every case of a manifest and compare against its expectations.

    A manifest is JSON ``{"cases": [{"name", "argv", "expect": {"exit",
    "json"}}]}``; ``json`` is matched as a recursive subset of the command's
    JSON output.  Manifest names starting with ``builtin:`` load a shipped
    manifest.
    """
    data = load_manifest(manifest)
    out = out or sys.stdout
    cases = []
    for case in data.get("cases", []):
        argv = list(case["argv"])
        if "--json" not in argv:
            argv.append("--json")
        buf = StringIO()
        with redirect_stdout(buf):
            code = run(argv)
        try:
            got = json.loads(buf.getvalue().strip().splitlines()[-1]) if buf.getvalue().strip() else None
        except json.JSONDecodeError:
            got = None
        expect = case.get("expect", {})
        ok = code == expect.get("exit", 0)
        if "json" in expect:
            ok = ok and got is not None and _matches(expect["json"], got)
        cases.append({"name": case.get("name", " ".join(case["argv"])), "passed": ok,
                      "exit": code})
        print(f"{'PASS' if ok else 'FAIL'}  {cases[-1]['name']}", file=out)
    passed = sum(c["passed"] for c in cases)
    return {"command": "suite", "passed": passed, "failed": len(cases) - passed,
            "cases": cases}


def load_manifest(manifest: str | Path) -> dict:
    name = str(manifest)
    if name.startswith("builtin:"):
        ref = resources.files("rho_r") / "data" / f"{name.split(':', 1)[1]}.json"
        return json.loads(ref.read_text())
    path = Path(manifest)
    if not path.exists():
        raise _Usage(f"manifest {name} not found")
    return json.loads(path.read_text())


def cmd_suite(args) -> int:
    report = run_suite(args.manifest, out=sys.stderr if args.json else sys.stdout)
    if args.json:
        print(json.dumps(report))
    else:
        print(f"{report['passed']} passed, {report['failed']} failed")
    return EXIT_OK if report["failed"] == 0 else EXIT_INFEASIBLE


# --- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="store_true")

    search_opts = argparse.ArgumentParser(add_help=False)
    search_opts.add_argument("--budget", type=int, help="largest total to try")
    search_opts.add_argument("--no-prune", action="store_true",
                             help="disable every pruning rule (cross-validation)")
    search_opts.add_argument("--threads", type=int, default=1)
    search_opts.add_argument("--cache", type=Path,
                             help="JSON-lines result cache (default: $RHO_R_CACHE)")
    search_opts.add_argument("--no-cache", action="store_true")
    search_opts.add_argument("--recompute", action="store_true",
                             help="ignore cached results")

    parser = argparse.ArgumentParser(prog="rho-r", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", parents=[common], help="decide a profile")
    p.add_argument("target", help="path | cycle | path:N | doublestar:A,B | anticlique:N | @file")
    p.add_argument("--profile")
    p.add_argument("--profile-file")
    p.add_argument("--mode", choices=["chromatic", "clique"],
                   help="for general hosts; clique is valid only for perfect hosts")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", parents=[common], help="emit a known construction")
    p.add_argument("kind", choices=["path-ub", "double-star", "anticlique"])
    p.add_argument("numbers", type=int, nargs="+")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", parents=[common], help="lower and upper bounds (JSON)")
    p.add_argument("family", choices=["path"])
    p.add_argument("n", type=int)
    p.add_argument("--params", help="a',a,b,c,d for the parametric bound")
    p.add_argument("--as-stated", action="store_true",
                   help="quadratic bound without the -n/56 term")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", parents=[common, search_opts], help="exact minimal profiles")
    p.add_argument("family", choices=["path", "cycle"])
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("conjectures", parents=[common, search_opts],
                       help="check the conjectures up to --max")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_conjectures)

    p = sub.add_parser("rainbow", parents=[common], help="extract a rainbow transversal")
    p.add_argument("target")
    p.add_argument("--profile", required=True)
    p.add_argument("--coloring", help="coloring file; random proper coloring if absent")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_rainbow)

    p = sub.add_parser("badcolor", parents=[common],
                       help="proper coloring without a rainbow transversal")
    p.add_argument("target")
    p.add_argument("--profile", required=True)
    p.add_argument("--subset", help="witness positions; defaults to the verifier's witness")
    p.set_defaults(func=cmd_badcolor)

    p = sub.add_parser("suite", parents=[common], help="run a reproduction manifest")
    p.add_argument("manifest", help="manifest file or builtin:paper_tables")
    p.set_defaults(func=cmd_suite)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"rho-r: error[{exc.kind}]: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (RhoError, OSError) as exc:
        kind = getattr(exc, "kind", "io")
        print(f"rho-r: error[{kind}]: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
