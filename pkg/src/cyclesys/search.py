"""Bounded backtracking search for (mn, n, C_ell) difference families.

Cycles are built one at a time.  A new cycle always contains the first
still-unused difference class d0, and is written with the edge 0 -> d0
first; every family has exactly one such representation of that cycle, so
the search is complete.  Within a cycle the path is extended one unused class
at a time and the last vertex is chosen so that the closing edge also uses an
unused class.

A run that ends without hitting its node cap has explored everything, so a
None answer is a proof of nonexistence.  Randomized restarts with growing
caps are used first; the candidate order is derived from the seed, so
results are reproducible.
"""

from __future__ import annotations

import json
import sys
import os
import random
import time
from dataclasses import dataclass
from pathlib import Path

from filelock import FileLock

from .jsonio import from_dict, to_dict
from .verify import verify_df
from .zmod import DifferenceFamily, normalize

CACHE_ENV = "CYCLESYS_CACHE"

DEFAULT_NODES = 10_000_000
DEFAULT_SECS = 30.0

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


@dataclass(frozen=True)
class Budget:
    nodes: int = DEFAULT_NODES
    secs: float = DEFAULT_SECS


class SearchBudgetExceeded(RuntimeError):
    pass


class _Cap(Exception):
    """Internal: the current restart hit its node cap."""


def _rot(x: int, k: int, v: int, mask: int) -> int:
    """Cyclic shift of a v-bit set by k (adds k to every element mod v)."""
    k %= v
    return ((x << k) | (x >> (v - k))) & mask


class _PathSolver:
    """Cycle-by-cycle search, each cycle grown as a path from 0 -> d0."""

    def __init__(self, m: int, n: int, ell: int, rng: random.Random, cap: int, clock):
        self.m, self.n, self.ell = m, n, ell
        v = self.v = m * n
        self.mask = (1 << v) - 1
        self.cls = [min(x, v - x) for x in range(v)]
        self.valid = [c for c in range(1, v // 2 + 1) if c % m and 2 * c != v]
        self.free = bytearray(v // 2 + 1)
        for c in self.valid:
            self.free[c] = 1
        self.nfree = len(self.valid)
        order = self.valid[:]
        rng.shuffle(order)
        self.order = order
        self.flip = [rng.random() < 0.5 for _ in range(v // 2 + 1)]
        self.start_order = sorted(self.valid, reverse=rng.random() < 0.5)
        self.onpath = bytearray(v)
        self.nodes = 0
        self.cap = cap
        self.clock = clock
        self.found: list[tuple[int, ...]] = []

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.cap:
            raise _Cap
        if self.nodes & 1023 == 0:
            self.clock()

    def run(self) -> bool:
        return self._next_cycle()

    def _closable(self, target: int) -> bool:
        """Can the free classes be signed so that they sum to target (mod v)?"""
        v, mask = self.v, self.mask
        reach = 1
        for c in self.valid:
            if self.free[c]:
                reach = _rot(reach, c, v, mask) | _rot(reach, -c, v, mask)
        return bool((reach >> (target % v)) & 1)

    def _take(self, c):
        self.free[c] = 0
        self.nfree -= 1

    def _give(self, c):
        self.free[c] = 1
        self.nfree += 1

    def _next_cycle(self) -> bool:
        free = self.free
        d0 = next((c for c in self.start_order if free[c]), None)
        if d0 is None:
            return True
        if self.nfree == self.ell and not self._closable(0):
            return False
        self._take(d0)
        self.onpath[0] = self.onpath[d0] = 1
        if self._extend([0, d0]):
            return True
        self.onpath[0] = self.onpath[d0] = 0
        self._give(d0)
        return False

    def _extend(self, path: list[int]) -> bool:
        self._tick()
        v, free, onpath, cls = self.v, self.free, self.onpath, self.cls
        cur = path[-1]
        last = len(path) == self.ell - 1
        # on the final cycle the remaining classes are forced
        if self.nfree == self.ell - len(path) + 1 and not last and not self._closable(-cur):
            return False
        for e in self.order:
            if not free[e]:
                continue
            if self.flip[e]:
                cand = ((cur - e) % v, (cur + e) % v)
            else:
                cand = ((cur + e) % v, (cur - e) % v)
            if cand[0] == cand[1]:
                cand = cand[:1]
            for x in cand:
                if onpath[x]:
                    continue
                if last:
                    c = cls[x]
                    if c == e or not free[c]:
                        continue
                    self._take(e)
                    self._take(c)
                    path.append(x)
                    self.found.append(tuple(path))
                    for y in path[:-1]:
                        onpath[y] = 0
                    if self._next_cycle():
                        return True
                    self.found.pop()
                    path.pop()
                    for y in path:
                        onpath[y] = 1
                    self._give(e)
                    self._give(c)
                else:
                    self._take(e)
                    onpath[x] = 1
                    path.append(x)
                    if self._extend(path):
                        return True
                    path.pop()
                    onpath[x] = 0
                    self._give(e)
        return False


class _TriangleSolver:
    """Triangles only: always branch on the class with the fewest completions.

    Free elements of Z_v are kept as a v-bit integer S; the triangles through
    class d are (0, d, d + e) with e and d + e both in S, i.e. the bits of
    S & (S rotated by d).
    """

    def __init__(self, m: int, n: int, rng: random.Random, cap: int, clock):
        self.m, self.n = m, n
        v = self.v = m * n
        self.mask = (1 << v) - 1
        self.cls = [min(x, v - x) for x in range(v)]
        self.valid = [c for c in range(1, v // 2 + 1) if c % m and 2 * c != v]
        rng.shuffle(self.valid)
        self.S = 0
        for c in self.valid:
            self.S |= (1 << c) | (1 << (v - c))
        self.free = set(self.valid)
        self.nodes = 0
        self.cap = cap
        self.clock = clock
        self.found: list[tuple[int, ...]] = []

    def run(self) -> bool:
        self.nodes += 1
        if self.nodes > self.cap:
            raise _Cap
        if self.nodes & 255 == 0:
            self.clock()
        if not self.free:
            return True
        v, mask, S, cls = self.v, self.mask, self.S, self.cls
        best, best_opts = None, None
        for d in self.valid:
            if d not in self.free:
                continue
            hits = S & _rot(S, d, v, mask)
            opts = []
            while hits:
                low = hits & -hits
                x = low.bit_length() - 1
                hits ^= low
                e = (x - d) % v
                ce, cx = cls[e], cls[x]
                if ce == d or cx == d or ce == cx:
                    continue
                # (0, d, x) and (0, d, -e) are the same triangle
                if e < (v - x) % v:
                    opts.append(x)
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = d, opts
                if len(opts) <= 1:
                    break
        d = best
        for x in best_opts:
            e = (x - d) % v
            trio = (d, cls[e], cls[x])
            for c in trio:
                self.free.discard(c)
                self.S &= ~((1 << c) | (1 << (v - c)))
            self.found.append((0, d, x))
            if self.run():
                return True
            self.found.pop()
            for c in trio:
                self.free.add(c)
                self.S |= (1 << c) | (1 << (v - c))
        return False


def _triangle_hill_climb(m: int, n: int, rng: random.Random, max_steps: int):
    """Hill-climbing for difference triangles.

    An uncovered class d is joined with a random class e and sign; when the
    third class f = |d +- e| is free the triangle is added, and when exactly
    one of e, f is taken its triangle is swapped out.  Incomplete: returns
    None when max_steps is used up.
    """
    v = m * n
    valid = [c for c in range(1, v // 2 + 1) if c % m and 2 * c != v]
    ok = bytearray(v // 2 + 1)
    for c in valid:
        ok[c] = 1
    owner: dict[int, tuple[int, int, int]] = {}
    uncovered = set(valid)
    for _ in range(max_steps):
        if not uncovered:
            return [(0, t[0], t[0] + t[1]) for t in set(owner.values())]
        d = rng.choice(tuple(uncovered)) if len(uncovered) < 64 else _pick(uncovered, rng)
        e = rng.choice(valid)
        step = e if rng.random() < 0.5 else v - e
        x = (d + step) % v
        f = min(x, v - x)
        if f == 0 or not ok[f] or f == d or f == e or e == d:
            continue
        te, tf = owner.get(e), owner.get(f)
        if te is not None and tf is not None:
            continue
        old = te or tf
        if old is not None:
            for c in _classes(old, v):
                owner.pop(c, None)
                uncovered.add(c)
        tri = (d, step)
        for c in (d, e, f):
            owner[c] = tri
            uncovered.discard(c)
    return None


def _classes(tri, v):
    d, step = tri
    x = (d + step) % v
    return d, min(step, v - step), min(x, v - x)


def _pick(pool: set, rng: random.Random):
    # cheap pseudo-random element of a large set
    k = rng.randrange(len(pool))
    for i, c in enumerate(pool):
        if i == k:
            return c


def _parity_obstruction(m: int, n: int, ell: int) -> bool:
    """For even v each cycle uses an even number of odd classes."""
    v = m * n
    if v % 2:
        return False
    odd = sum(1 for c in range(1, v // 2 + 1, 2) if c % m and 2 * c != v)
    return odd % 2 == 1


def _search(m, n, ell, seed, budget: Budget, use_parity: bool):
    v = m * n
    ncls = sum(1 for c in range(1, v // 2 + 1) if c % m and 2 * c != v)
    if ell < 3 or m < 2 or ncls % ell or ell > v:
        return None
    if use_parity and _parity_obstruction(m, n, ell):
        return None
    t0 = time.monotonic()

    def clock():
        if time.monotonic() - t0 > budget.secs:
            raise SearchBudgetExceeded(f"time budget {budget.secs}s exceeded for {(m, n, ell)}")

    rng = random.Random(f"{seed}:{m}:{n}:{ell}")
    if ell == 3 and use_parity:
        found = _triangle_hill_climb(m, n, random.Random(rng.random()), 200 * v + 20000)
        if found is not None:
            return DifferenceFamily(m, n, 3, tuple(normalize(c, v) for c in found))
    cap = 2000
    used = 0
    while True:
        remaining = budget.nodes - used
        if remaining <= 0:
            raise SearchBudgetExceeded(f"node budget {budget.nodes} exceeded for {(m, n, ell)}")
        this_cap = min(cap, remaining)
        sub = random.Random(rng.random())
        if ell == 3:
            solver = _TriangleSolver(m, n, sub, this_cap, clock)
        else:
            solver = _PathSolver(m, n, ell, sub, this_cap, clock)
        try:
            ok = solver.run()
        except _Cap:
            used += solver.nodes
            cap *= 2
            clock()
            continue
        if not ok:
            return None
        cycles = tuple(normalize(c, v) for c in solver.found)
        return DifferenceFamily(m, n, ell, cycles)


def exhaustive_nonexistence(m: int, n: int, ell: int, budget: Budget = Budget()) -> bool:
    """True iff a complete search (without the parity shortcut) finds no DF.

    Raises SearchBudgetExceeded when the budget runs out first.
    """
    return _search(m, n, ell, 0, budget, use_parity=False) is None


def default_cache_path() -> Path | None:
    p = os.environ.get(CACHE_ENV)
    return Path(p) if p else None


class DFCache:
    """Append-only JSON-lines store of search results, re-verified when read.

    Each line is a family in the JSON format of `jsonio`, or a record of kind
    "none" when the search proved that no family exists.
    """

    def __init__(self, path: str | os.PathLike | None):
        self.path = Path(path) if path else None
        self._mem: dict[tuple[int, int, int], DifferenceFamily | None] = {}
        self._loaded = False

    def _lock(self):
        return FileLock(str(self.path) + ".lock")

    def _load(self):
        self._loaded = True
        if not self.path or not self.path.exists():
            return
        with self._lock():
            lines = self.path.read_text().splitlines()
        for line in lines:
            try:
                rec = json.loads(line)
                key = (rec["m"], rec["n"], rec["ell"])
            except (ValueError, KeyError, TypeError):
                continue
            if rec.get("kind") == "none":
                self._mem[key] = None
                continue
            try:
                df = from_dict(rec)
            except ValueError:
                continue
            if isinstance(df, DifferenceFamily) and verify_df(df):
                self._mem[key] = df

    def get(self, key):
        if not self._loaded:
            self._load()
        return self._mem.get(key, _MISSING)

    def put(self, key, df: DifferenceFamily | None):
        self._mem[key] = df
        if not self.path:
            return
        m, n, ell = key
        if df is None:
            rec = {"kind": "none", "m": m, "n": n, "ell": ell, "v": m * n}
        else:
            rec = to_dict(df)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self._lock():
            with open(self.path, "a") as fh:
                fh.write(json.dumps(rec) + "\n")


_MISSING = object()
_caches: dict[Path | None, DFCache] = {}


def get_cache(path=None) -> DFCache:
    path = Path(path) if path else default_cache_path()
    if path not in _caches:
        _caches[path] = DFCache(path)
    return _caches[path]


def search_df(
    m: int,
    n: int,
    ell: int,
    budget: Budget = Budget(),
    seed: int = 0,
    cache: DFCache | None = None,
) -> DifferenceFamily | None:
    """An (mn, n, C_ell)-DF, or None when none exists.

    Raises SearchBudgetExceeded if the budget runs out before either outcome
    is established.
    """
    key = (m, n, ell)
    if cache is not None:
        hit = cache.get(key)
        if hit is not _MISSING:
            return hit
    df = _search(m, n, ell, seed, budget, use_parity=True)
    if df is not None and not verify_df(df):
        raise AssertionError(f"search produced an invalid family for {key}")
    if cache is not None:
        cache.put(key, df)
    return df
