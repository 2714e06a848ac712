"""The six acceptance criteria, one pass/fail line each.

Lines are printed as each test runs (visible with -s) and collected into the
terminal summary.  Criteria 3 and 4 fail on the triples (3, n, 3): no cyclic
triangle system of K_3[n] exists, although the triple passes the admissibility
predicate.  Their exact forms are strict xfails; separate tests pin the
disagreement set down to exactly those triples.
"""

import random
import time
from math import comb

import pytest

from conftest import ACCEPTANCE
from cyclesys import (
    DifferenceFamily,
    SearchConfig,
    blow_up_df,
    blow_up_system,
    exhaustive_nonexistence,
    is_admissible_triple,
    search_df,
    verify_cycle_system,
    verify_df,
)
from cyclesys.cli import run_sweep, sweep_triples
from cyclesys.even import df_2ell_m_even, df_4m_4, df_ell_0_mod4
from cyclesys.gadgets import cycle_from_balanced
from cyclesys.odd_m1 import df_4nu, df_8nu_ellp1
from cyclesys.search import Budget
from cyclesys.zmod import system_from_cycles
from gadget_samples import (
    abs_lengths,
    check_balanced_cycle,
    check_star,
    check_zigzag,
    random_balanced,
    random_star_input,
    random_zigzag_input,
)
from known_families import (
    ALL_DFS,
    BALANCED_12,
    BALANCED_12_CYCLE,
    BLOWUP_45_15_C5,
    BLOWUP_K3_15_C15,
    DF_24_4_C5,
)

TRIANGLES_ON_THREE_PARTS = "no cyclic triangle system of K_3[n] exists"


def record(name: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[name] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def three_part_triangles(limit):
    return {(3, n, 3) for n in range(1, limit // 3 + 1) if n % 3 == 0 and n % 4 != 2}


# 1 ----------------------------------------------------------------------

def _fixtures():
    out = []
    for name, (m, n, ell, cycles) in ALL_DFS.items():
        v = m * n
        cyc = tuple(tuple(x % v for x in c) for c in cycles)
        out.append((name, lambda m=m, n=n, ell=ell, c=cyc: verify_df(DifferenceFamily(m, n, ell, c))))

    def fifteen_cycles():
        m, n, ell, cycles = BLOWUP_K3_15_C15
        system = system_from_cycles(m, n, ell, cycles)
        return [(o.stabilizer, o.length) for o in system.orbits] == [(3, 15)] * 3 and verify_cycle_system(system)

    out.append(("K3-15-C15 system", fifteen_cycles))

    def twelve_cycle():
        c = BALANCED_12_CYCLE
        return len(set(c)) == 12 and abs_lengths(c, True) == sorted(BALANCED_12)

    out.append(("balanced-12-cycle", twelve_cycle))
    return out


def test_criterion_1_reference_examples_verify():
    slow, bad = [], []
    for name, check in _fixtures():
        t = time.perf_counter()
        ok = bool(check())
        dt = time.perf_counter() - t
        if not ok:
            bad.append(name)
        if dt >= 1.0:
            slow.append(name)
    n = len(_fixtures())
    record("1 reference examples verify", not bad and not slow,
           f"{n - len(bad)}/{n} verified, {len(slow)} over 1 s")
    assert not bad and not slow
    assert n == 17


# 2 ----------------------------------------------------------------------

def _closed_forms(m, nu):
    out = []
    for i in range(1, 2 * nu + 1):
        x, y = 2 * nu + i, 2 * i - 1
        if m == 6:
            out += [(0, 6 * x - 1, 6 * y, -4, 6 * y - 2), (0, 6 * x - 3, 6 * y, 5, 6 * y + 1)]
        else:
            out += [(0, 8 * x - 7, 8 * y, 3, 8 * y - 1, 4, 8 * y - 2),
                    (0, 8 * x - 1, 8 * y, 16 * y + 6, 8 * y + 1, 16 * y + 5, 8 * y + 2)]
    return tuple(tuple(c % (8 * nu * m) for c in cyc) for cyc in out)


def test_criterion_2_closed_forms_verbatim():
    checks = {}
    checks["(24,4,C5) table"] = df_4nu(6, 5, 1).base_cycles == tuple(DF_24_4_C5[3])
    for m, ell in ((6, 5), (8, 7)):
        for nu in (1, 2, 3):
            checks[f"C{ell} family nu={nu}"] = df_8nu_ellp1(m, ell, nu).base_cycles == _closed_forms(m, nu)
    f = DifferenceFamily(3, 5, 5, ((0, 1, 5, 10, 8),))
    checks["blow-up s=3"] = blow_up_df(f, 3).base_cycles == tuple(BLOWUP_45_15_C5[3])
    checks["blow-up s=3 u=3"] = blow_up_system(f, 3, 3).base_cycles == tuple(BLOWUP_K3_15_C15[3])
    checks["balanced 12-set"] = cycle_from_balanced(BALANCED_12) == BALANCED_12_CYCLE
    bad = [k for k, v in checks.items() if not v]
    record("2 closed forms reproduced verbatim", not bad, f"{len(checks) - len(bad)}/{len(checks)} match")
    assert not bad


# 3 ----------------------------------------------------------------------

@pytest.fixture(scope="module")
def sweep_400():
    t = time.perf_counter()
    rows = run_sweep(400, SearchConfig())
    return rows, time.perf_counter() - t


def _sweep_outcome(rows):
    disagree = {(m, n, ell) for m, n, ell, status, _, _ in rows
                if (status == "nonexistent") == is_admissible_triple(m, n, ell)}
    failed = [r for r in rows if r[3] in ("failed", "unsupported")]
    return disagree, failed


@pytest.mark.xfail(strict=True, reason=TRIANGLES_ON_THREE_PARTS)
def test_criterion_3_sharpness_sweep(sweep_400):
    rows, secs = sweep_400
    disagree, failed = _sweep_outcome(rows)
    built = sum(r[3] == "built" for r in rows)
    ok = not disagree and not failed and secs < 120
    record("3 sharpness sweep mn <= 400", ok,
           f"{len(rows)} triples, {built} built and verified, {len(failed)} failed or unsupported, "
           f"{len(disagree)} disagree with the predicate (all (3, n, 3)), {secs:.1f} s")
    assert ok


def test_sweep_disagreements_are_exactly_three_part_triangles(sweep_400):
    rows, secs = sweep_400
    disagree, failed = _sweep_outcome(rows)
    assert disagree == three_part_triangles(400)
    assert len(disagree) == 33
    assert not failed
    assert all(r[4] == "no-triangle-df" for r in rows if (r[0], r[1], r[2]) in disagree)
    assert secs < 120


# 4 ----------------------------------------------------------------------

@pytest.fixture(scope="module")
def oracle_60():
    t = time.perf_counter()
    budget = Budget(nodes=2_000_000, secs=20.0)
    found = {trip: search_df(*trip, budget=budget) is not None for trip in sweep_triples(60)}
    exhaustive = {trip: exhaustive_nonexistence(*trip, budget) for trip in [(7, 2, 3), (7, 2, 6)]}
    return found, exhaustive, time.perf_counter() - t


@pytest.mark.xfail(strict=True, reason=TRIANGLES_ON_THREE_PARTS)
def test_criterion_4_oracle_equivalence(oracle_60):
    found, exhaustive, secs = oracle_60
    disagree = {t for t, f in found.items() if f != is_admissible_triple(*t)}
    ok = not disagree and all(exhaustive.values()) and secs < 60
    record("4 search oracle agrees with the predicate mn <= 60", ok,
           f"{len(found)} triples, {len(disagree)} disagree (all (3, n, 3)), "
           f"no (14,2,C3)/(14,2,C6) family confirmed exhaustively: {all(exhaustive.values())}, {secs:.1f} s")
    assert ok


def test_oracle_disagreements_are_exactly_three_part_triangles(oracle_60):
    found, exhaustive, secs = oracle_60
    disagree = {t for t, f in found.items() if f != is_admissible_triple(*t)}
    assert disagree == three_part_triangles(60) == {(3, 3, 3), (3, 9, 3), (3, 12, 3), (3, 15, 3)}
    assert all(not found[t] for t in disagree)
    assert exhaustive == {(7, 2, 3): True, (7, 2, 6): True}
    assert secs < 60


def test_three_part_triangles_exhaustively_absent():
    budget = Budget(nodes=5_000_000, secs=30.0)
    for t in sorted(three_part_triangles(60)):
        assert exhaustive_nonexistence(*t, budget), t


# 5 ----------------------------------------------------------------------

def test_criterion_5_gadget_properties():
    rng = random.Random(20240601)
    counts = {"balanced": 0, "zigzag": 0, "star": 0}
    failures = 0
    for name, n, make, check in [
        ("balanced", 1000, random_balanced, check_balanced_cycle),
        ("zigzag", 1000, random_zigzag_input, lambda args: check_zigzag(*args)),
        ("star", 500, random_star_input, lambda args: check_star(*args)),
    ]:
        for _ in range(n):
            sample = make(rng)
            try:
                check(sample)
                counts[name] += 1
            except AssertionError:
                failures += 1
    record("5 gadget property suites", failures == 0,
           f"{counts['balanced']}/1000 balanced, {counts['zigzag']}/1000 zigzag, {counts['star']}/500 star pairings")
    assert failures == 0


# 6 ----------------------------------------------------------------------

def _base_families():
    return [
        DifferenceFamily(7, 1, 3, ((0, 1, 3),)),
        DifferenceFamily(3, 5, 5, ((0, 1, 5, 10, 8),)),
        DifferenceFamily(6, 4, 5, tuple(DF_24_4_C5[3])),
        df_ell_0_mod4(9, 1, 4),
        df_ell_0_mod4(5, 2, 4),
        df_4m_4(4, 6),
        df_4m_4(7, 6),
        df_2ell_m_even(3, 6),
        df_4nu(10, 9, 1),
        search_df(13, 1, 3),
        search_df(11, 1, 5),
    ]


def test_criterion_6_blow_up_conservation():
    rng = random.Random(7)
    pool = []
    for f in _base_families():
        for s in range(1, 2000 // f.v + 1):
            if (f.ell * (s - 1)) % 2 == 0:
                pool += [(f, s, u) for u in range(1, s + 1) if s % u == 0]
    picks = [rng.choice(pool) for _ in range(100)]
    good = 0
    for f, s, u in picks:
        system = blow_up_system(f, s, u)
        ws = f.n * s
        edges = system.ell * system.num_cycles
        if edges == comb(f.m, 2) * ws * ws and verify_cycle_system(system):
            good += 1
    record("6 blow-up conservation", good == 100, f"{good}/100 random (F, s, u) cover every edge once")
    assert good == 100


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
