"""Command-line front end.

Exit codes: 0 success, 1 check failure, 2 parameter error, 3 theorem violation,
4 crossing cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from math import gcd

from .braid import TwistedTorusKnot, gauss_code, pd_code_of_closure, twisted_torus_braid, twisted_torus_word, writhe
from .errors import CrossingCapExceeded, ParameterError, TheoremViolation
from .invariants import DEFAULT_CROSSING_CAP, alexander_torus_closed_form, jones, kauffman_bracket
from .kernels import BACKEND
from .selfcheck import run_selfcheck
from .tunnel import classify_tunnel, scan_theorem

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARAM = 2
EXIT_THEOREM = 3
EXIT_CAP = 4


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _knot_args(sp):
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-q", type=int, required=True)
    sp.add_argument("-s", type=int, default=0)
    sp.add_argument("-o", "--output", default=None, help="output path (default stdout)")


def cmd_construct(args) -> str:
    k = TwistedTorusKnot(args.p, args.q, args.s)
    b = twisted_torus_braid(k)
    if args.format == "braid":
        return f"# T({k.p},{k.q},3,{k.s}) strands={b.strands} crossings={len(b)} writhe={writhe(b)}\n{b}\n"
    pd = pd_code_of_closure(b)
    if args.format == "pd":
        return "".join(line + "\n" for line in pd.lines())
    if args.format == "gauss":
        return " ".join(gauss_code(pd)) + "\n"
    doc = {
        "p": k.p,
        "q": k.q,
        "r": k.r,
        "s": k.s,
        "strands": b.strands,
        "letters": list(b.letters),
        "writhe": writhe(b),
        "pd": [list(x) for x in pd.crossings],
        "signs": list(pd.signs),
        "gauss": gauss_code(pd),
    }
    return json.dumps(doc) + "\n"


def cmd_tunnel(args) -> str:
    return classify_tunnel(TwistedTorusKnot(args.p, args.q, args.s)).to_json() + "\n"


def cmd_scan(args) -> tuple[str, int]:
    rep = scan_theorem(
        args.pmax,
        cross_check_walk=args.cross_check_walk,
        collect_stats=args.stats,
        case_search=args.case_search,
        workers=args.workers,
        max_records=args.max_records,
        timing=not args.no_timing,
    )
    return rep.to_json() + "\n", EXIT_OK if rep.ok else EXIT_THEOREM


def cmd_invariants(args) -> str:
    p, q, s = args.p, args.q, args.s
    if s == 0:
        # plain torus knot: the twist block is empty, so p = 2, 3 are fine
        if not 0 < q < p or gcd(p, q) != 1:
            raise ParameterError(f"need coprime 0 < q < p, got ({p}, {q})")
        b = twisted_torus_word(p, q, 0, r=min(3, p))
    else:
        b = twisted_torus_braid(TwistedTorusKnot(p, q, s))
    wanted = [name for name in ("bracket", "jones", "alexander") if getattr(args, name)]
    if not wanted:
        wanted = ["jones"] + (["alexander"] if s == 0 else [])
    polys = {}
    for name in wanted:
        if name == "jones":
            polys[name] = jones(b, args.max_crossings)
        elif name == "bracket":
            if len(b) > args.max_crossings:
                raise CrossingCapExceeded(len(b), args.max_crossings)
            polys[name] = kauffman_bracket(pd_code_of_closure(b), args.max_crossings)
        else:
            if s != 0:
                raise ParameterError("the Alexander closed form only covers s = 0 (torus knots)")
            polys[name] = alexander_torus_closed_form(p, q)
    fmt = args.format or ("text" if len(wanted) == 1 else "json")
    if fmt == "text":
        if len(polys) == 1:
            return next(iter(polys.values())).to_text() + "\n"
        return "".join(f"{name}: {poly.to_text()}\n" for name, poly in polys.items())
    doc = {"p": p, "q": q, "r": 3, "s": s, "crossings": len(b)}
    for name, poly in polys.items():
        doc[name] = poly.to_json()
        doc[f"{name}_text"] = poly.to_text()
    return json.dumps(doc) + "\n"


def cmd_selfcheck(args) -> tuple[str, int]:
    results = run_selfcheck(seed=args.seed, p_max=args.pmax, markov_trials=args.markov_trials)
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append(f"{'OK' if ok else 'FAILED'}: {sum(r.passed for r in results)}/{len(results)} checks passed (backend {BACKEND})")
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistedtorus", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="emit the braid / diagram of T(p,q,3,s)")
    _knot_args(sp)
    sp.add_argument("--format", choices=["braid", "pd", "gauss", "json"], default="braid")

    sp = sub.add_parser("tunnel", help="tunnel certificate JSON")
    _knot_args(sp)

    sp = sub.add_parser("scan", help="exhaustive scan over coprime pairs")
    sp.add_argument("--pmax", type=int, required=True)
    sp.add_argument("--stats", action="store_true", help="label-pair histogram and prefix consistency")
    sp.add_argument("--cross-check-walk", action="store_true", help="compare closed form with the step walk")
    sp.add_argument("--case-search", action="store_true", help="search witnesses for both equation systems")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--max-records", type=int, default=1000)
    sp.add_argument("--no-timing", action="store_true", help="emit elapsed_ms as null (byte-stable output)")
    sp.add_argument("-o", "--output", default=None)

    sp = sub.add_parser("invariants", help="Jones / bracket / Alexander polynomials")
    _knot_args(sp)
    sp.add_argument("--jones", action="store_true")
    sp.add_argument("--bracket", action="store_true")
    sp.add_argument("--alexander", action="store_true")
    sp.add_argument("--max-crossings", type=int, default=DEFAULT_CROSSING_CAP)
    sp.add_argument("--format", choices=["text", "json"], default=None)

    sp = sub.add_parser("selfcheck", help="run the consistency suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--pmax", type=int, default=300)
    sp.add_argument("--markov-trials", type=int, default=100)
    sp.add_argument("-o", "--output", default=None)
    return parser


_COMMANDS = {
    "construct": cmd_construct,
    "tunnel": cmd_tunnel,
    "scan": cmd_scan,
    "invariants": cmd_invariants,
    "selfcheck": cmd_selfcheck,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        result = _COMMANDS[args.command](args)
    except ParameterError as exc:
        print(f"twistedtorus: error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except TheoremViolation as exc:
        print(f"twistedtorus: theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except CrossingCapExceeded as exc:
        print(f"twistedtorus: refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    if isinstance(result, tuple):
        result, code = result
    with _output(getattr(args, "output", None)) as fh:
        fh.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
