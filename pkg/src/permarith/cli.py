"""Command-line front end: run checks and suites, print sequence tables,
explore conjectures, emit JSON/CSV.

Exit codes: 0 success, 1 verification failure, 2 usage error.  JSON output
is a single object {"schema", "command", "results"}; every exact value is a
decimal or num/den string, and timing is left out of JSON rows so that runs
with different --threads are byte-identical after the id/index sort.

Matrix families are addressed by the canonical textual form
`family:key=value,...` (e.g. `linear:d=2,p=7,range=1..p`, `cos2:n=9`),
parsed by families.FamilySpec; check parameters passed via flags (--n, --p,
--d, --a, --x, --backend, --idx-range) use the same value syntax.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .cyclotomic import CyclotomicField, gauss_sum
from .errors import DomainError, UnknownCheckError
from .matrices import Mat, per_naive, per_ryser
from .ntheory import odd_primes_upto
from .rings import GF, QPOLY, QQ, ZZ, Zmod
from .sequences import SEQ_NAMES, sequence_value
from .verifier import (ALL_CHECK_IDS, REGISTRY, Report, default_grid,
                       param_str, run_check)

SCHEMA = "permarith/1"

PARAM_FLAGS = ("n", "p", "d", "a", "x", "backend", "idx_range")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permarith",
        description="Exact permanents/determinants of structured matrices: "
                    "verification checks, sequence tables, conjecture explorer.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--csv", action="store_true", help="CSV output")
        p.add_argument("--threads", type=int, default=1, metavar="N")
        p.add_argument("--seed", type=int, default=0, metavar="S")
        p.add_argument("--strict", action="store_true",
                       help="conjecture failures also gate the exit code")

    v = sub.add_parser("verify", help="run one check or the whole registry")
    v.add_argument("check", help="check id, or 'all'")
    v.add_argument("--tier", choices=("fast", "full"), default="fast")
    v.add_argument("--n", type=int)
    v.add_argument("--p", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--a", type=int)
    v.add_argument("--x", type=str)
    v.add_argument("--backend", choices=("cyc", "fq"))
    v.add_argument("--idx-range", dest="idx_range", type=str,
                   help="index range variant for linear/quad families")
    common(v)

    s = sub.add_parser("seq", help="tabulate a named sequence over a range")
    s.add_argument("name", help=f"one of {', '.join(SEQ_NAMES)}")
    s.add_argument("--range", dest="range_", required=True, metavar="A..B")
    s.add_argument("--odd", action="store_true", help="odd indices only")
    common(s)

    e = sub.add_parser("explore", help="evidence tables for conjecture checks")
    e.add_argument("check", help="a conj.* check id")
    e.add_argument("--pmax", type=int, default=13)
    e.add_argument("--nmax", type=int, default=9)
    e.add_argument("--a", dest="a_range", metavar="A..B",
                   help="range of the parameter a where applicable")
    common(e)

    t = sub.add_parser("selftest", help="quick internal sanity suite")
    common(t)
    return parser


def _merge_negative_values(argv: list[str]) -> list[str]:
    # argparse rejects option values like "-3..3"; fold them into --flag=value.
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok in ("--a", "--range", "--x") and i + 1 < len(argv)
                and argv[i + 1].startswith("-")):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_negative_values(list(argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    command = "permarith " + " ".join(argv)
    try:
        if args.cmd == "verify":
            return _cmd_verify(args, command)
        if args.cmd == "seq":
            return _cmd_seq(args, command)
        if args.cmd == "explore":
            return _cmd_explore(args, command)
        return _cmd_selftest(args, command)
    except UnknownCheckError as exc:
        print(f"error: unknown check id {exc.args[0]!r}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _explicit_params(args) -> dict:
    out = {}
    for flag in PARAM_FLAGS:
        val = getattr(args, flag, None)
        if val is not None:
            out["range" if flag == "idx_range" else flag] = val
    return out


def _run_many(tasks, seed, threads):
    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(
                lambda t: run_check(t[0], t[1], seed=seed), tasks))
    return [run_check(cid, params, seed=seed) for cid, params in tasks]


def _cmd_verify(args, command) -> int:
    if args.check == "all":
        ids = ALL_CHECK_IDS
    else:
        if args.check not in REGISTRY:
            raise UnknownCheckError(args.check)
        ids = (args.check,)
    explicit = _explicit_params(args)
    tasks = []
    for cid in ids:
        if explicit and args.check != "all":
            tasks.append((cid, explicit))
        else:
            tasks.extend((cid, params) for params in default_grid(cid, args.tier))
    reports = _run_many(tasks, args.seed, args.threads)
    reports.sort(key=Report.sort_key)
    _emit_reports(args, command, reports)
    return _exit_code(reports, args.strict)


def _exit_code(reports, strict: bool) -> int:
    for r in reports:
        if r.status == "FAIL" and (strict or r.kind == "theorem"):
            return 1
    return 0


def _emit_reports(args, command, reports):
    if args.json:
        rows = [r.row(with_ms=False) for r in reports]
        print(json.dumps({"schema": SCHEMA, "command": command,
                          "results": rows}, sort_keys=True))
        return
    if args.csv:
        w = csv.writer(sys.stdout)
        w.writerow(["id", "params", "status", "computed", "expected",
                    "modulus", "kind", "ms"])
        for r in reports:
            w.writerow([r.check_id, param_str(r.params), r.status, r.computed,
                        r.expected, r.modulus or "", r.kind, f"{r.ms:.3f}"])
        return
    counts = {"PASS": 0, "FAIL": 0, "SKIP": 0}
    for r in reports:
        counts[r.status] += 1
        mod = f" (mod {r.modulus})" if r.modulus else ""
        tag = " [evidence]" if r.kind == "conjecture" else ""
        line = f"[{r.status}] {r.check_id} {param_str(r.params)}{tag}"
        if r.status == "FAIL":
            line += f": computed {r.computed}, expected {r.expected}{mod}"
        elif r.status == "SKIP":
            line += f": {r.note}"
        elif r.computed:
            line += f": {r.computed}{mod}"
        print(line)
    print(f"summary: {counts['PASS']} pass, {counts['FAIL']} fail, "
          f"{counts['SKIP']} skip")


# ---------------------------------------------------------------------------
# seq
# ---------------------------------------------------------------------------

def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise DomainError(f"bad range {text!r}; expected A..B")
    if hi < lo:
        raise DomainError(f"empty range {text!r}")
    return lo, hi


def _seq_row(name: str, idx: int) -> dict:
    start = time.perf_counter()
    try:
        v = sequence_value(name, idx)
    except DomainError as exc:
        return {"name": name, "index": idx, "status": "SKIP",
                "value": None, "is_integer": None, "note": str(exc),
                "ms": (time.perf_counter() - start) * 1e3}
    return {"name": name, "index": idx, "status": "OK",
            "value": str(v.value), "is_integer": v.is_integer,
            "note": None, "ms": (time.perf_counter() - start) * 1e3}


def _cmd_seq(args, command) -> int:
    if args.name not in SEQ_NAMES:
        print(f"error: unknown sequence {args.name!r}; "
              f"choose from {', '.join(SEQ_NAMES)}", file=sys.stderr)
        return 2
    lo, hi = _parse_range(args.range_)
    indices = [i for i in range(lo, hi + 1) if not args.odd or i % 2]
    if args.threads > 1 and len(indices) > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(lambda i: _seq_row(args.name, i), indices))
    else:
        rows = [_seq_row(args.name, i) for i in indices]
    if args.json:
        clean = [{k: row[k] for k in
                  ("name", "index", "status", "value", "is_integer", "note")}
                 for row in rows]
        print(json.dumps({"schema": SCHEMA, "command": command,
                          "results": clean}, sort_keys=True))
        return 0
    if args.csv:
        w = csv.writer(sys.stdout)
        w.writerow(["name", "index", "value", "is_integer", "ms"])
        for row in rows:
            w.writerow([row["name"], row["index"],
                        row["value"] if row["status"] == "OK" else "SKIP",
                        "" if row["is_integer"] is None else row["is_integer"],
                        f"{row['ms']:.3f}"])
        return 0
    for row in rows:
        if row["status"] == "SKIP":
            print(f"{row['name']}({row['index']}): SKIP ({row['note']})")
        else:
            flag = "" if row["is_integer"] else "  [non-integer]"
            print(f"{row['name']}({row['index']}) = {row['value']}"
                  f"{flag}  [{row['ms']:.1f} ms]")
    return 0


# ---------------------------------------------------------------------------
# explore
# ---------------------------------------------------------------------------

def explore_grid(check_id: str, pmax: int, nmax: int, a_range=None) -> list[dict]:
    """Parameter grid for a conjecture id over user-chosen bounds."""
    if check_id not in REGISTRY:
        raise UnknownCheckError(check_id)
    if not check_id.startswith("conj."):
        raise DomainError(f"{check_id} is not a conjecture check")
    a_lo, a_hi = a_range if a_range else (None, None)

    def a_vals(lo, hi):
        return range(a_lo if a_lo is not None else lo,
                     (a_hi if a_hi is not None else hi) + 1)

    if check_id == "conj.absjk":
        return [{"p": p} for p in odd_primes_upto(pmax)]
    if check_id == "conj.qdet":
        return [{"n": n, "a": a} for n in range(3, nmax + 1, 2)
                for a in a_vals(-3, 3)]
    if check_id in ("conj.maskper", "conj.maskdet"):
        return [{"p": p, "a": a} for p in odd_primes_upto(pmax) if p > 3
                for a in a_vals(1, 3)]
    if check_id == "conj.derange":
        return [{"n": n} for n in range(2, nmax + 1)]
    if check_id == "conj.sqdiff":
        return [{"p": p} for p in odd_primes_upto(pmax) if p % 4 == 1]
    if check_id == "conj.csign":
        return [{"p": p} for p in odd_primes_upto(pmax)]
    if check_id in ("conj.ssign", "conj.tsign"):
        return [{"n": n} for n in range(3, nmax + 1, 2)]
    if check_id == "conj.bernoulli":
        return [{"n": n} for n in range(1, nmax + 1)]
    raise DomainError(f"no explorer grid for {check_id}")


def _cmd_explore(args, command) -> int:
    a_range = _parse_range(args.a_range) if args.a_range else None
    grid = explore_grid(args.check, args.pmax, args.nmax, a_range)
    tasks = [(args.check, params) for params in grid]
    reports = _run_many(tasks, args.seed, args.threads)
    reports.sort(key=Report.sort_key)
    _emit_reports(args, command, reports)
    consistent = sum(r.status == "PASS" for r in reports)
    skipped = sum(r.status == "SKIP" for r in reports)
    if not args.json and not args.csv:
        print(f"evidence: {consistent}/{len(reports) - skipped} consistent"
              f" ({skipped} skipped); consistency is not proof")
    # evidence tables never gate the exit code unless --strict asks for it
    if args.strict and any(r.status == "FAIL" for r in reports):
        return 1
    return 0


# ---------------------------------------------------------------------------
# selftest
# ---------------------------------------------------------------------------

def _cmd_selftest(args, command) -> int:
    rng = random.Random(args.seed)
    problems = []

    rings = [ZZ, QQ, Zmod(9), GF(7), CyclotomicField(5), QPOLY]
    for ring in rings:
        for _ in range(150):
            a, b, c = (ring.rand(rng) for _ in range(3))
            if (a + b) + c != a + (b + c):
                problems.append(f"{ring.name}: associativity of +")
            if a * b != b * a:
                problems.append(f"{ring.name}: commutativity of *")
            if a * (b + c) != a * b + a * c:
                problems.append(f"{ring.name}: distributivity")
            if a + ring.zero != a or a * ring.one != a:
                problems.append(f"{ring.name}: identities")
        print(f"ring laws   {ring.name}: ok")

    for ring in (ZZ, CyclotomicField(5), QPOLY):
        for _ in range(20):
            m = Mat(ring, [[ring.rand(rng, 4) for _ in range(4)]
                           for _ in range(4)])
            if per_ryser(m) != per_naive(m):
                problems.append(f"{ring.name}: per_ryser != per_naive")
        print(f"permanents  {ring.name}: ok")

    for n in range(3, 26, 2):
        g = gauss_sum(n)
        want = n if (n - 1) // 2 % 2 == 0 else -n
        if not (g * g) == want:
            problems.append(f"gauss sum square at {n}")
    print("gauss sums  ok")

    if problems:
        for p in problems[:10]:
            print("FAIL:", p)
        return 1
    print("selftest: all ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
