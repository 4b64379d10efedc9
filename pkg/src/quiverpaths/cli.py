"""Command-line front end.

Subcommands::

    enumerate     components (Maya tuples) with weight and energy
                  TSV columns: tuple, weight, energy
    character     weight multiplicities from tuples and from paths
                  TSV columns: weight, tuples, paths
    verify        named property checks; exit 1 if any fails
                  TSV columns: name, status, cases, counterexample
    fock          apply an operator word such as "F-1 F1 F0" to the vacuum
                  TSV columns: diagram, coeff
    lift          highest lift of a JSON path
    reduce        n-reduction of a JSON Maya tuple
    quiver-check  sampled stability of a JSON multisegment against the greedy rule
                  TSV columns: charges, predicted, votes, seeds

Weights are written as "u_0,...,u_n;deg".  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterable, Optional, Sequence

from . import encoding, fock, quiverlab, verify
from .multisegments import MayaTuple, is_chain
from .partitions import DomainError, YoungDiagram
from .paths import (
    HighestWeight,
    enumerate_components,
    enumerate_paths,
    geometric_weight,
    highest_lift,
    n_reduce,
    path_energy,
    path_weight,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _charges(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"charges must be integers: {text!r}")


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("bound must be nonnegative")
    return v


def _highest_weight(args) -> HighestWeight:
    if args.n is None:
        raise UsageError("--n is required")
    return HighestWeight(args.n, args.charges)


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    # executor.map preserves input order, so output stays deterministic
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _emit(args, rows: list[dict], columns: Sequence[str], out=None) -> None:
    out = out or sys.stdout
    if args.format == "json":
        json.dump(encoding.normalize(rows), out, sort_keys=True)
        out.write("\n")
        return
    out.write("\t".join(columns) + "\n")
    for r in rows:
        out.write("\t".join(_cell(r[c]) for c in columns) + "\n")


def _cell(v: Any) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(encoding.normalize(v), sort_keys=True, separators=(",", ":"))


def _read_json(path: Optional[str]) -> Any:
    try:
        if path in (None, "-"):
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON input: {exc}")


def _weight_row(M: MayaTuple) -> tuple[str, int]:
    w = geometric_weight(M)
    return str(w), -w.deg


def cmd_enumerate(args) -> int:
    lam = _highest_weight(args)
    comps = enumerate_components(lam, args.max_energy, reduced=not args.gl)
    weights = _pmap(_weight_row, comps, args.jobs)
    rows = []
    for M, (w, e) in zip(comps, weights):
        rows.append({"tuple": encoding.tuple_to_json(M) if args.format == "json" else encoding.tuple_text(M), "weight": w, "energy": e})
    _emit(args, rows, ("tuple", "weight", "energy"))
    return EXIT_OK


def _path_weight_str(eta) -> str:
    return str(path_weight(eta))


def character_tables(lam: HighestWeight, max_energy: int, gl: bool = False, jobs: int = 1):
    comps = enumerate_components(lam, max_energy, reduced=not gl)
    tuples = Counter(w for w, _ in _pmap(_weight_row, comps, jobs))
    paths = None
    if not gl:
        plist = enumerate_paths(lam, max_energy)
        paths = Counter(_pmap(_path_weight_str, plist, jobs))
    return tuples, paths


def _weight_key(text: str):
    h, deg = text.split(";")
    return (-int(deg), tuple(-int(x) for x in h.split(",")))


def cmd_character(args) -> int:
    lam = _highest_weight(args)
    tuples, paths = character_tables(lam, args.max_energy, args.gl, args.jobs)
    keys = sorted(set(tuples) | set(paths or {}), key=_weight_key)
    rows = [{"weight": k, "tuples": tuples.get(k, 0), "paths": "-" if paths is None else paths.get(k, 0)} for k in keys]
    _emit(args, rows, ("weight", "tuples", "paths"))
    if paths is not None and paths != tuples:
        print("tuple and path multiplicities differ", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    bounds = {"max_energy": args.max_energy if args.max_energy is not None else 3, "seeds": args.samples}
    if args.max_size is not None:
        bounds["max_size"] = args.max_size
    results = verify.run_all(bounds, faults=args.inject_fault or (), only=args.only)
    rows = [
        {
            "name": r.name,
            "status": "PASS" if r.passed else "FAIL",
            "cases": r.count,
            "counterexample": r.counterexample,
            "notes": r.notes,
        }
        for r in results
    ]
    _emit(args, rows, ("name", "status", "cases", "counterexample"))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_fock(args) -> int:
    try:
        word = fock.parse_word(" ".join(args.word))
    except ValueError as exc:
        raise UsageError(str(exc))
    start = None
    if args.start is not None:
        try:
            start = fock.FockVector.basis(YoungDiagram(tuple(json.loads(args.start))))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad start diagram: {exc}")
    v = fock.apply_word(word, start)
    rows = [{"diagram": r["diagram"], "coeff": r["coeff"]} for r in fock.fock_to_json(v)]
    _emit(args, rows, ("diagram", "coeff"))
    return EXIT_OK


def cmd_lift(args) -> int:
    try:
        eta = encoding.path_from_json(_read_json(args.input))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed path: {exc}")
    M = highest_lift(eta)
    row = {
        "path": encoding.path_to_json(eta),
        "lift": encoding.tuple_to_json(M),
        "weight": str(path_weight(eta)),
        "energy": path_energy(eta),
    }
    _emit(args, [row], ("path", "lift", "weight", "energy"))
    return EXIT_OK


def cmd_reduce(args) -> int:
    data = _read_json(args.input)
    if isinstance(data, dict):
        n, entries = data.get("n", args.n), data.get("entries")
    else:
        n, entries = args.n, data
    if n is None or entries is None:
        raise UsageError("reduce needs a cyclic tuple: give --n or {\"n\":..,\"entries\":[..]}")
    try:
        M = encoding.tuple_from_json(entries, int(n))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed tuple: {exc}")
    if not is_chain(M):
        raise UsageError(f"{M} is not chain-ordered")
    R = n_reduce(M)
    _emit(args, [{"input": encoding.tuple_to_json(M), "reduced": encoding.tuple_to_json(R)}], ("input", "reduced"))
    return EXIT_OK


def cmd_quiver_check(args) -> int:
    try:
        f = encoding.multiset_from_json(_read_json(args.input))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed multisegment: {exc}")
    if not args.charges:
        raise UsageError("--charges is required")
    seeds = range(args.seed, args.seed + args.samples)
    votes = quiverlab.stability_votes(f, [args.charges], seeds, gl=args.gl)
    rows = [
        {"charges": list(cs), "predicted": v.predicted, "votes": v.votes, "seeds": v.seeds}
        for cs, v in votes.items()
    ]
    _emit(args, rows, ("charges", "predicted", "votes", "seeds"))
    return EXIT_FAIL if any(v.unanimous_disagreement or not v.agrees for v in votes.values()) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank n of A_n^(1)")
    common.add_argument("--charges", type=_charges, default=(0,), help="weakly increasing charges, e.g. '0,1'")
    common.add_argument("--max-energy", type=_nonneg, default=None)
    common.add_argument("--max-size", type=_nonneg, default=None)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--reduced", dest="gl", action="store_false", help="n-reduced tuples only (default)")
    mode.add_argument("--gl", dest="gl", action="store_true", help="gl variant: no reduction, no nilpotency")
    common.set_defaults(gl=False)
    common.add_argument("--format", choices=("json", "tsv"), default="tsv")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=20, help="number of conormal samples")
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(prog="quiverpaths", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list components up to an energy")
    p.set_defaults(func=cmd_enumerate, need_energy=True)
    p = sub.add_parser("character", parents=[common], help="weight multiplicity table")
    p.set_defaults(func=cmd_character, need_energy=True)
    p = sub.add_parser("verify", parents=[common], help="run the property checks")
    p.add_argument("--inject-fault", action="append", choices=verify.FAULTS)
    p.add_argument("--only", action="append", choices=verify.GROUPS, help="restrict to a check group (repeatable)")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("fock", parents=[common], help="apply E/F/H words to a Fock vector")
    p.add_argument("word", nargs="+", help='operators such as F0 F-1 E2, rightmost acts first')
    p.add_argument("--start", help="starting Young diagram as a JSON array (default: empty)")
    p.set_defaults(func=cmd_fock)
    for name, func, what in (
        ("lift", cmd_lift, "JSON path {n, charges, prefix}"),
        ("reduce", cmd_reduce, "JSON tuple"),
        ("quiver-check", cmd_quiver_check, "JSON multisegment {mode, n, segments}"),
    ):
        p = sub.add_parser(name, parents=[common], help=f"read a {what}")
        p.add_argument("input", nargs="?", default="-", help="file name, or - for stdin")
        p.set_defaults(func=func)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "need_energy", False) and args.max_energy is None:
        parser.error("--max-energy is required")
    if args.jobs < 1 or args.samples < 1:
        parser.error("--jobs and --samples must be positive")
    try:
        return args.func(args)
    except (UsageError, DomainError, ValueError) as exc:
        print(f"quiverpaths {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
