"""Command line front end: ``analyze``, ``generate``, ``check``, ``dot``.

Exit codes: 0 ok, 1 malformed input, 2 budget exceeded, 3 a theorem
check failed (the failing instances are printed as JSON).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .checks import exhaustive_maps, random_maps, sweep
from .errors import BudgetExceeded, DomainTooLarge, PrimalDynError
from .fgraph import FunctionalMap, gen_mod_mul, gen_random, gen_tower, load_map
from .oracle import OracleBudget
from .report import build_report, dumps, to_dot

EXIT_MALFORMED = 1
EXIT_BUDGET = 2
EXIT_THEOREM = 3

EXHAUSTIVE_CAP = int(os.environ.get("PRIMALDYN_EXHAUSTIVE_CAP", "5"))


class MalformedInput(ValueError):
    pass


def parse_map(text: str) -> tuple[FunctionalMap, dict | None]:
    """JSON ``{"n": .., "succ": [..]}`` (or a bare JSON list), else space-separated ints."""
    text = text.strip()
    if not text:
        raise MalformedInput("empty input")
    family = None
    if text[0] in "{[":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"bad JSON: {exc}") from None
        if isinstance(doc, dict):
            if "succ" not in doc:
                raise MalformedInput('JSON input needs a "succ" array')
            raw = doc["succ"]
            if "n" in doc and doc["n"] != len(raw):
                raise MalformedInput(f'"n" = {doc["n"]} but succ has {len(raw)} entries')
            family = doc.get("family")
        else:
            raw = doc
        if not isinstance(raw, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw):
            raise MalformedInput("succ must be a list of integers")
    else:
        try:
            raw = [int(tok) for tok in text.split()]
        except ValueError:
            raise MalformedInput("expected space-separated integers") from None
    try:
        return load_map(raw), family
    except PrimalDynError as exc:
        raise MalformedInput(str(exc)) from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    f, family = parse_map(_read(args.input))
    _write(dumps(build_report(f, family)), args.output)
    return 0


def cmd_generate(args) -> int:
    if args.family == "mod-mul":
        f = gen_mod_mul(args.m, args.N)
        family = {"family": "mod-mul", "m": args.m, "N": args.N}
    elif args.family == "tower":
        f = gen_tower(args.m, args.n, args.J)
        family = {"family": "tower", "m": args.m, "n": args.n, "J": args.J}
    else:
        f = gen_random(args.n, args.seed)
        family = {"family": "random", "n": args.n, "seed": args.seed}
    doc = {"n": f.n, "succ": f.to_list(), "family": family}
    _write(json.dumps(doc) + "\n", args.output)
    return 0


def cmd_check(args) -> int:
    budget = OracleBudget()
    if args.exhaustive_upto > EXHAUSTIVE_CAP:
        raise BudgetExceeded(f"--exhaustive-upto {args.exhaustive_upto} above cap {EXHAUSTIVE_CAP} "
                             "(set PRIMALDYN_EXHAUSTIVE_CAP to raise it)")
    if args.random and args.n_max > budget.n_cap:
        raise BudgetExceeded(f"--n-max {args.n_max} above oracle cap {budget.n_cap}")

    def maps():
        for n in range(1, args.exhaustive_upto + 1):
            yield from exhaustive_maps(n)
        if args.random:
            for n in range(args.n_min, args.n_max + 1):
                yield from random_maps(n, args.random, args.seed)

    res = sweep(maps(), budget, oracle=not args.no_oracle)
    print(f"checked {res.instances} maps, {len(res.failures)} failures", file=sys.stderr)
    if res.failures:
        out = [{"succ": fl.succ, "check": fl.check, "detail": fl.detail} for fl in res.failures]
        print(json.dumps({"failures": out}, indent=2))
        return EXIT_THEOREM
    return 0


def cmd_dot(args) -> int:
    f, _ = parse_map(_read(args.input))
    _write(to_dot(f), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="primaldyn", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full analysis of one map as a JSON report")
    a.add_argument("input", nargs="?", default="-", help="map file, or - for stdin")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", help="emit a map from one of the example families")
    g.add_argument("--family", choices=("mod-mul", "tower", "random"), required=True)
    g.add_argument("--m", type=int, default=2)
    g.add_argument("--n", type=int, default=2, help="tower fan-in, or size for random")
    g.add_argument("--J", type=int, default=3, help="tower height")
    g.add_argument("--N", type=int, default=7, help="modulus for mod-mul")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("check", help="theorem checks and oracle agreement over many maps")
    c.add_argument("--exhaustive-upto", type=int, default=4, help="every map on up to this many points")
    c.add_argument("--random", type=int, default=0, help="random maps per size")
    c.add_argument("--n-min", type=int, default=5, help="smallest random size")
    c.add_argument("--n-max", type=int, default=12, help="largest random size")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--no-oracle", action="store_true", help="theorem checks only")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("dot", help="Graphviz rendering of the functional graph")
    d.add_argument("input", nargs="?", default="-")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_dot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (BudgetExceeded, DomainTooLarge) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
