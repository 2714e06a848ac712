"""Command line: construct, verify, search, admissible, sweep.

Exit codes: 0 built / passed, 1 verification failed, 2 nonexistent,
3 unsupported (outside the regime or out of search budget), 4 bad input.
Machine-readable output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from multiprocessing import Pool

from .admissibility import DESCRIPTIONS, in_regime, is_admissible_triple, cyclic_exclusions, necessary_conditions
from .dispatch import Nonexistent, SearchConfig, Unsupported, construct, construct_df
from .jsonio import dumps, loads
from .search import DEFAULT_NODES, DEFAULT_SECS, Budget, SearchBudgetExceeded, get_cache, search_df
from .verify import verify_cycle_system, verify_df
from .zmod import DifferenceFamily

EXIT_OK, EXIT_FAIL, EXIT_NONE, EXIT_UNSUPPORTED, EXIT_BAD = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_BAD)


def _config(args) -> SearchConfig:
    return SearchConfig(
        budget=Budget(args.budget_nodes, args.budget_secs),
        seed=args.seed,
        cache=get_cache(args.cache_path),
    )


def _check_triple(args) -> bool:
    if args.m < 2 or args.n < 1 or args.ell < 3:
        print("need m >= 2, n >= 1, ell >= 3", file=sys.stderr)
        return False
    return True


def cmd_construct(args) -> int:
    if not _check_triple(args):
        return EXIT_BAD
    try:
        if args.df_only:
            out = construct_df(args.m, args.n, args.ell, _config(args))
        else:
            out = construct(args.m, args.n, args.ell, _config(args))
    except Nonexistent as exc:
        print(f"nonexistent: {exc}", file=sys.stderr)
        return EXIT_NONE
    except Unsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    sys.stdout.write(dumps(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            obj = loads(fh.read())
    except (OSError, ValueError) as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_BAD
    report = verify_df(obj) if isinstance(obj, DifferenceFamily) else verify_cycle_system(obj)
    print(json.dumps({"ok": report.ok, "reason": report.reason, "witness": _plain(report.witness)}, default=str))
    return EXIT_OK if report else EXIT_FAIL


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if hasattr(x, "item"):
        return x.item()
    return x


def cmd_search(args) -> int:
    if not _check_triple(args):
        return EXIT_BAD
    cfg = _config(args)
    try:
        df = search_df(args.m, args.n, args.ell, budget=cfg.budget, seed=cfg.seed, cache=cfg.cache)
    except SearchBudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if df is None:
        print("no difference family exists", file=sys.stderr)
        return EXIT_NONE
    sys.stdout.write(dumps(df))
    return EXIT_OK


def cmd_admissible(args) -> int:
    if not _check_triple(args):
        return EXIT_BAD
    m, n, ell = args.m, args.n, args.ell
    nec = necessary_conditions(m, n, ell)
    excl = cyclic_exclusions(m, n, ell)
    regime = in_regime(m, n, ell)
    adm = is_admissible_triple(m, n, ell)
    print(json.dumps({
        "m": m, "n": n, "ell": ell,
        "in_regime": regime,
        "admissible": adm,
        "necessary": nec.value if nec else None,
        "exclusion": excl.value if excl else None,
        "detail": DESCRIPTIONS[excl] if excl else None,
    }))
    if not regime:
        return EXIT_UNSUPPORTED
    return EXIT_OK if adm else EXIT_NONE


def _sweep_one(job):
    m, n, ell, cfg = job
    t = time.perf_counter()
    try:
        system = construct(m, n, ell, cfg)
    except Nonexistent as exc:
        return m, n, ell, "nonexistent", exc.clause.value, time.perf_counter() - t
    except Unsupported as exc:
        return m, n, ell, "unsupported", exc.reason, time.perf_counter() - t
    report = verify_cycle_system(system)
    status = "built" if report else "failed"
    return m, n, ell, status, report.reason, time.perf_counter() - t


def sweep_triples(max_mn: int):
    for m in range(3, max_mn + 1):
        for n in range(1, max_mn // m + 1):
            for ell in range(3, (m - 1) * n // 2 + 1):
                if in_regime(m, n, ell):
                    yield m, n, ell


def run_sweep(max_mn: int, cfg: SearchConfig, jobs: int = 1) -> list[tuple]:
    """(m, n, ell, status, detail, seconds) for every triple in the regime with mn <= max_mn."""
    work = [(m, n, ell, cfg) for m, n, ell in sweep_triples(max_mn)]
    if jobs <= 1:
        return [_sweep_one(w) for w in work]
    with Pool(jobs) as pool:
        return pool.map(_sweep_one, work, chunksize=16)


def cmd_sweep(args) -> int:
    if args.max_mn < 9:
        print("bound must be at least 9", file=sys.stderr)
        return EXIT_BAD
    t0 = time.perf_counter()
    rows = run_sweep(args.max_mn, _config(args), args.jobs)
    counts = {"built": 0, "nonexistent": 0, "unsupported": 0, "failed": 0}
    disagree = []
    for m, n, ell, status, detail, _ in rows:
        counts[status] += 1
        if status == "failed":
            print(f"verification failed for {(m, n, ell)}: {detail}", file=sys.stderr)
        if (status == "nonexistent") == is_admissible_triple(m, n, ell):
            disagree.append([m, n, ell, status, detail])
    summary = {
        "max_mn": args.max_mn,
        "triples": len(rows),
        **counts,
        "verified": counts["failed"] == 0,
        "admissible_but_nonexistent": [r for r in disagree if r[3] == "nonexistent"],
        "other_disagreements": [r for r in disagree if r[3] != "nonexistent"],
        "seconds": round(time.perf_counter() - t0, 2),
    }
    print(json.dumps(summary))
    return EXIT_OK if counts["failed"] == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclesys", description="Cyclic cycle systems of complete multipartite graphs.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def search_flags(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--budget-nodes", type=int, default=DEFAULT_NODES)
        sp.add_argument("--budget-secs", type=float, default=DEFAULT_SECS)
        sp.add_argument("--cache-path", default=None, help="JSON-lines cache of searched families")

    def triple(sp):
        sp.add_argument("m", type=int)
        sp.add_argument("n", type=int)
        sp.add_argument("ell", type=int)

    sp = sub.add_parser("construct", help="build a cyclic ell-cycle system of K_m[n]")
    triple(sp)
    sp.add_argument("--df-only", action="store_true", help="print the difference family instead")
    search_flags(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check a family or system stored as JSON")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="search for an (mn, n, C_ell) difference family")
    triple(sp)
    search_flags(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("admissible", help="evaluate the existence conditions")
    triple(sp)
    sp.set_defaults(func=cmd_admissible)

    sp = sub.add_parser("sweep", help="construct and verify every triple up to a bound on mn")
    sp.add_argument("max_mn", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    search_flags(sp)
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
