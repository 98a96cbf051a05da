"""Command-line entry point: ``divsub <command> ...``.

Exit codes: 0 found/valid, 1 proven absent/invalid, 2 usage or input error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Optional

from . import FORMAT_VERSION, __version__
from .hamiltonian import exhaustive_check, find_even_split, split_to_json, verify_split
from .oracle import (
    _scan_level,
    bound_general,
    bound_lower,
    bound_prime,
    bound_tree,
    compute_sq,
    result_to_json,
)
from .pattern import classify, parse_pattern
from .subdivision import (
    DEFAULT_BUDGET,
    SearchBudgetExceeded,
    embedding_from_json,
    embedding_to_json,
    find_subdivision,
    find_t_subdivision,
    verify_embedding,
)
from .weighted import GuardExceeded, all_ones, default_guard, parse_weighting, serialize_weighting, star_witness
from .zq import is_prime

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


# text of every input read during this invocation, so pipes hash what was parsed
_seen: dict[str, str] = {}


def _read(path: str) -> str:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    _seen[path] = text
    return text


def _sha(path: str) -> str:
    text = _seen[path] if path in _seen else Path(path).read_text()
    return hashlib.sha256(text.encode()).hexdigest()


def _manifest(args: argparse.Namespace, inputs: dict, started: float, seed=None) -> dict:
    argv = {k: v for k, v in vars(args).items() if k != "func"}
    return {
        "command": args.command,
        "arguments": argv,
        "inputs": {name: _sha(p) for name, p in inputs.items() if p},
        "seed": seed,
        "guard": getattr(args, "guard", None) or default_guard(),
        "version": __version__,
        "format_version": FORMAT_VERSION,
        "wall_time": round(time.perf_counter() - started, 6),
    }


def _emit(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _load_host(path: str, reduce: bool = False):
    try:
        return parse_weighting(_read(path), reduce=reduce)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_pattern(path: str):
    try:
        return parse_pattern(_read(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_verify(args) -> int:
    W = _load_host(args.host, args.reduce)
    H = _load_pattern(args.pattern)
    try:
        E, cert_t = embedding_from_json(_read(args.cert), H)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{args.cert}: malformed certificate ({exc})") from None
    t = args.t if args.t is not None else cert_t
    try:
        verdict = verify_embedding(W, H, E, t)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if verdict:
        print("valid")
        return EXIT_OK
    print(f"invalid: {verdict.reason}", file=sys.stderr)
    return EXIT_NO


def cmd_find(args) -> int:
    started = time.perf_counter()
    W = _load_host(args.host, args.reduce)
    H = _load_pattern(args.pattern)
    try:
        if args.t is None:
            E = find_subdivision(W, H, args.budget)
        else:
            E = find_t_subdivision(W, H, args.t, args.budget)
    except SearchBudgetExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    if E is None:
        print("absent", file=sys.stderr)
        return EXIT_NO
    doc = embedding_to_json(W, H, E, args.t)
    doc["manifest"] = _manifest(args, {"host": args.host, "pattern": args.pattern}, started)
    _emit(doc, args.json)
    return EXIT_OK


def cmd_sq(args) -> int:
    started = time.perf_counter()
    H = _load_pattern(args.pattern)
    if args.range is not None:
        if args.fmin is None:
            raise InputError("--range scans a single level; give it with --fmin")
        lo, hi = args.range
        try:
            part = _scan_level(H, args.q, args.t, args.fmin, args.budget, args.shards, False, lo, hi)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        doc = {
            "f": args.fmin,
            "q": args.q,
            "t": args.t,
            "range": [lo, hi],
            "examined": part.examined,
            "failures": part.failures,
            "budget_hits": part.budget_hits,
            "first_failure": part.first_failure,
            "first_budget": part.first_budget,
        }
    else:
        try:
            res = compute_sq(H, args.q, args.t, args.fmin, args.fmax, args.guard, args.shards, args.budget)
        except (ValueError, GuardExceeded) as exc:
            raise InputError(str(exc)) from None
        doc = result_to_json(res, H)
    doc["manifest"] = _manifest(args, {"pattern": args.pattern}, started)
    _emit(doc, args.json)
    if args.json and args.range is None:
        print(f"{doc['kind']} {doc['value']}")
    return EXIT_OK


def cmd_witness(args) -> int:
    if args.kind == "all-ones":
        W = all_ones(args.f, args.q)
    else:
        k = (args.q - 1) // 2 if args.k is None else args.k
        try:
            W = star_witness(args.f, args.q, k)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    sys.stdout.write(serialize_weighting(W))
    return EXIT_OK


def cmd_ham(args) -> int:
    started = time.perf_counter()
    if args.exhaustive is not None:
        lo, hi = args.range if args.range else (0, None)
        try:
            res = exhaustive_check(
                args.exhaustive, args.shards, args.guard, lo, hi, True if args.constructive else None
            )
        except (ValueError, GuardExceeded) as exc:
            raise InputError(str(exc)) from None
        doc = {
            "n": res.n,
            "examined": res.examined,
            "failures": res.failures,
            "first_counterexample": res.first_counterexample,
            "manifest": _manifest(args, {}, started),
        }
        _emit(doc, args.json)
        return EXIT_OK if res.all_pass else EXIT_NO
    C = _load_host(args.coloring)
    if C.q != 2:
        raise InputError("a colouring file must have q = 2")
    try:
        S = find_even_split(C, True if args.constructive else None)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if S is None:
        print("absent", file=sys.stderr)
        return EXIT_NO
    assert verify_split(C, S)
    doc = split_to_json(S)
    doc["manifest"] = _manifest(args, {"coloring": args.coloring}, started)
    _emit(doc, args.json)
    return EXIT_OK


def cmd_bounds(args) -> int:
    n, m, q = args.n, args.m, args.q
    rows = [("lower", str(bound_lower(n, m, q)))]
    if args.tree or m == n - 1:
        rows.append(("tree", str(bound_tree(n, q))))
    rows.append(("general", str(bound_general(n, m, q))))
    if q >= 3 and is_prime(q):
        note = "" if args.connected else "  (assumes H connected)"
        rows.append(("prime", f"{bound_prime(n, m, q)}{note}"))
    else:
        rows.append(("prime", f"omitted: q={q} is not an odd prime"))
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k:<{width}}  {v}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="divsub", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"divsub {__version__} (format {FORMAT_VERSION})")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check a subdivision certificate")
    v.add_argument("--host", required=True)
    v.add_argument("--pattern", required=True)
    v.add_argument("--cert", required=True)
    v.add_argument("--t", type=int)
    v.add_argument("--reduce", action="store_true", help="reduce host weights mod q instead of rejecting")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("find", help="search for a q-divisible (t-)subdivision")
    f.add_argument("--host", required=True)
    f.add_argument("--pattern", required=True)
    f.add_argument("--t", type=int)
    f.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    f.add_argument("--json")
    f.add_argument("--reduce", action="store_true")
    f.set_defaults(func=cmd_find)

    s = sub.add_parser("sq", help="exhaustive s_q(H) / s_q(H, t)")
    s.add_argument("--pattern", required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--t", type=int)
    s.add_argument("--fmin", type=int)
    s.add_argument("--fmax", type=int)
    s.add_argument("--guard", type=int)
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--range", type=int, nargs=2, metavar=("START", "END"))
    s.add_argument("--json")
    s.set_defaults(func=cmd_sq)

    w = sub.add_parser("witness", help="print a lower-bound weighting")
    w.add_argument("--kind", choices=["all-ones", "star"], required=True)
    w.add_argument("--f", type=int, required=True)
    w.add_argument("--q", type=int, required=True)
    w.add_argument("--k", type=int)
    w.set_defaults(func=cmd_witness)

    h = sub.add_parser("ham", help="even red/blue split Hamiltonian cycles")
    g = h.add_mutually_exclusive_group(required=True)
    g.add_argument("--coloring")
    g.add_argument("--exhaustive", type=int, metavar="N")
    h.add_argument("--shards", type=int, default=1)
    h.add_argument("--range", type=int, nargs=2, metavar=("START", "END"))
    h.add_argument("--guard", type=int)
    h.add_argument("--constructive", action="store_true")
    h.add_argument("--json")
    h.set_defaults(func=cmd_ham)

    b = sub.add_parser("bounds", help="closed-form bounds on s_q(H)")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--connected", action="store_true")
    b.add_argument("--tree", action="store_true")
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
