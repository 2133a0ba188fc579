"""Command-line entry point: ``topofilt <subcommand> ...``.

Topology arguments take a JSON file ``{"n": .., "opens": [..]}`` or one of
the names ``sierpinski``, ``discrete:N``, ``indiscrete:N``. Filtrations take
a JSON file or a comma-separated list of names (the last one is the
target). Partitions take a JSON file or ``identity:N`` / ``one:N``.

Exit codes: 0 success, 1 verification failure, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import enumeration as en
from . import equiv as eq
from . import filtration as fl
from . import topology as tp
from . import verify as vf
from .errors import TopofiltError


class InputError(Exception):
    pass


def _load_json(arg: str):
    try:
        return json.loads(Path(arg).read_text())
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read {arg}: {exc}") from None


def _named(name: str):
    if name == "sierpinski":
        return tp.sierpinski()
    kind, _, size = name.partition(":")
    if kind in ("discrete", "indiscrete") and size.isdigit():
        return (tp.discrete if kind == "discrete" else tp.indiscrete)(int(size))
    return None


def parse_topology(arg: str) -> tp.Topology:
    return _named(arg) or tp.from_dict(_load_json(arg))


def parse_filtration(arg: str) -> fl.FiltrationSeq:
    names = arg.split(",")
    tops = [_named(a) for a in names]
    if all(tops):
        return fl.FiltrationSeq(tops[0].n, tops, tops[-1])
    return fl.seq_from_dict(_load_json(arg))


def parse_partition(arg: str) -> eq.Partition:
    kind, _, size = arg.partition(":")
    if kind in ("identity", "one") and size.isdigit():
        n = int(size)
        return eq.Partition.identity(n) if kind == "identity" else eq.Partition.one_block(n)
    return eq.partition_from_dict(_load_json(arg))


def _emit(obj) -> None:
    print(json.dumps(obj))


# -- subcommands ---------------------------------------------------------------

def cmd_enum(args) -> int:
    if args.cache or "TOPOFILT_CACHE" in os.environ:
        cat = en.cache_load(args.n, args.cache)
    else:
        cat = en.enumerate_topologies(args.n, jobs=args.jobs)
    if args.format == "json":
        out = {"n": args.n, "count": len(cat)}
        if args.list:
            out["entries"] = [list(t.opens) for t in cat]
        _emit(out)
    else:
        print(len(cat))
        if args.list:
            for t in cat:
                print(t)
    return 0


def cmd_distance(args) -> int:
    d = fl.distance(parse_topology(args.sigma), parse_topology(args.tau))
    if args.format == "json":
        _emit({"distance": d if d is not None else "unreachable"})
    else:
        print(d if d is not None else "unreachable")
    return 0


def cmd_filtrate(args) -> int:
    sigma, tau = parse_topology(args.sigma), parse_topology(args.tau)
    seq, status = fl.slowest(sigma, tau, args.max_stages)
    rec = seq.to_dict()
    rec["status"] = status
    rec["distance"] = len(seq) - 1 if status == fl.REACHED else "unreachable"
    _emit(rec)
    return 0


def cmd_tame(args) -> int:
    seq = parse_filtration(args.filtration)
    rec = {"alpha": args.alpha, "tame": list(fl.tame_sets(seq, args.alpha))}
    if args.alpha < len(seq):
        rec["slight_cover"] = fl.slight_cover(seq, args.alpha)
        if args.set is not None:
            rec["set"] = args.set
            rec["slight"] = fl.is_slight(seq, args.alpha, args.set)
            rec["solid"] = fl.is_solid(seq, args.alpha, args.set)
    _emit(rec)
    return 0


def cmd_approx(args) -> int:
    E = parse_partition(args.partition)
    seq = parse_filtration(args.filtration)
    chain = eq.approx_chain(E, seq)
    _emit({"chain": [p.to_dict() for p in chain], "meet": eq.relation_meet(chain).to_dict()})
    return 0


def cmd_classify(args) -> int:
    sigma = parse_topology(args.sigma)
    _emit(tp.borel_class(sigma, args.set, verbose=True, convention=args.borel_convention))
    return 0


def _print_report(r: vf.VerificationReport, timing: bool) -> None:
    line = f"{r.property_id}: {r.outcome.upper()} ({r.instances_checked} instances; {r.universe})"
    if timing:
        line += f" [{r.elapsed:.2f}s]"
    print(line)
    if r.note:
        print(f"  note: {r.note}")
    if r.counterexample is not None:
        print(f"  counterexample: {json.dumps(r.counterexample)}")


def cmd_verify(args) -> int:
    if args.replay:
        rec = _load_json(args.replay)
        res = vf.replay(rec["property_id"], rec["counterexample"])
        _emit({"property_id": rec["property_id"], "reproduced": res not in (None, vf.SKIP),
               "detail": res})
        return 1 if res not in (None, vf.SKIP) else 0
    if args.all:
        reports = vf.check_all(args.n, jobs=args.jobs)
    elif args.property:
        reports = [vf.check(args.property, args.n, jobs=args.jobs)]
    else:
        raise InputError("verify needs --property ID, --all or --replay FILE")
    if args.format == "json":
        dicts = [r.to_dict(args.timing) for r in reports]
        _emit(dicts if args.all else dicts[0])
    else:
        for r in reports:
            _print_report(r, args.timing)
    return 1 if any(r.outcome == vf.FAIL for r in reports) else 0


def cmd_explore(args) -> int:
    _emit(vf.explore(args.query, args.n))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topofilt", description="Finite filtration calculus.")
    p.add_argument("--borel-convention", choices=tp.CONVENTIONS, default="difference")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enum", help="count (and list) all topologies on n points")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--cache", default=None, help="cache directory")
    s.add_argument("--list", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("distance", help="stage at which the slowest filtration reaches tau")
    s.add_argument("--sigma", required=True)
    s.add_argument("--tau", required=True)
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("filtrate", help="slowest filtration from sigma to tau")
    s.add_argument("--sigma", required=True)
    s.add_argument("--tau", required=True)
    s.add_argument("--max-stages", type=int, default=None)
    s.set_defaults(func=cmd_filtrate)

    s = sub.add_parser("tame", help="alpha-tame sets of a filtration")
    s.add_argument("--filtration", required=True)
    s.add_argument("--alpha", type=int, required=True)
    s.add_argument("--set", type=int, default=None, help="mask to test for slight/solid")
    s.set_defaults(func=cmd_tame)

    s = sub.add_parser("approx", help="closure approximations of an equivalence relation")
    s.add_argument("--partition", required=True)
    s.add_argument("--filtration", required=True)
    s.set_defaults(func=cmd_approx)

    s = sub.add_parser("classify", help="Borel-style class of a set relative to sigma")
    s.add_argument("--sigma", required=True)
    s.add_argument("--set", type=int, required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", help="run finite-instance property checks")
    s.add_argument("--property", choices=sorted(vf.PROPERTIES))
    s.add_argument("--all", action="store_true")
    s.add_argument("--replay", default=None, help="report JSON with a counterexample")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.add_argument("--timing", action="store_true", help="include elapsed seconds")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("explore", help="search for hypothesis-necessity witnesses")
    s.add_argument("--query", choices=sorted(vf.QUERIES), required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_explore)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, TopofiltError, KeyError, ValueError) as exc:
        print(f"topofilt: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
