"""Independent checks for difference families and cyclic cycle systems.

Nothing here looks at how a structure was produced; only the primitives in
zmod are used.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .zmod import (
    CycleSystem,
    DifferenceFamily,
    canonical,
    delta_cycle,
    is_simple,
    non_multiples,
    normalize,
    stabilizer_order,
    translate,
)


@dataclass(frozen=True)
class Report:
    ok: bool
    reason: str = ""
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


PASS = Report(True)


def _check_cycle_shape(cycles: Sequence[Sequence[int]], v: int, ell: int) -> Report:
    for c in cycles:
        if len(c) != ell:
            return Report(False, f"cycle of length {len(c)}, expected {ell}", tuple(c))
        if not is_simple(c, v):
            return Report(False, "repeated vertex", tuple(c))
    return PASS


def verify_df(df: DifferenceFamily) -> Report:
    """The union of the difference lists must be Z_v minus mZ_v, each element once."""
    m, n, ell = df.m, df.n, df.ell
    v = m * n
    if m < 2 or n < 1 or ell < 3:
        return Report(False, "bad parameters", (m, n, ell))
    r = _check_cycle_shape(df.base_cycles, v, ell)
    if not r:
        return r
    counts = Counter()
    for c in df.base_cycles:
        counts.update(delta_cycle(c, v))
    for d, k in counts.items():
        if d % m == 0:
            return Report(False, "difference inside mZ_v", d)
        if k > 1:
            return Report(False, "difference covered twice", d)
    for d in non_multiples(m, n):
        if d not in counts:
            return Report(False, "difference not covered", d)
    return PASS


def _edge_keys(base: Sequence[int], shifts: np.ndarray, v: int) -> np.ndarray:
    c = np.asarray(base, dtype=np.int64)
    a = (c[None, :] + shifts[:, None]) % v
    b = np.roll(a, -1, axis=1)
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    return (lo * v + hi).ravel()


def verify_cycle_list(m: int, n: int, ell: int, cycles: Sequence[Sequence[int]]) -> Report:
    """Every edge of K_m[n] lies in exactly one of the given cycles."""
    v = m * n
    r = _check_cycle_shape(cycles, v, ell)
    if not r:
        return r
    if not cycles:
        return Report(m * (m - 1) * n * n == 0, "no cycles")
    keys = np.concatenate([_edge_keys(c, np.zeros(1, dtype=np.int64), v) for c in cycles])
    return _check_edge_keys(keys, m, n)


def _check_edge_keys(keys: np.ndarray, m: int, n: int) -> Report:
    v = m * n
    lo, hi = keys // v, keys % v
    inside = (hi - lo) % m == 0
    if inside.any():
        k = int(np.argmax(inside))
        return Report(False, "edge inside a part", (int(lo[k]), int(hi[k])))
    counts = np.bincount(keys, minlength=v * v)
    if counts.max(initial=0) > 1:
        k = int(np.argmax(counts))
        return Report(False, "edge covered twice", (k // v, k % v))
    expected = m * (m - 1) // 2 * n * n
    if len(keys) != expected:
        return Report(False, f"{len(keys)} edges covered, expected {expected}")
    return PASS


def verify_cycle_system(system: CycleSystem) -> Report:
    """Develop every orbit and check the exact edge partition of K_m[n].

    Stored stabilizer orders and orbit lengths are recomputed, not trusted.
    """
    m, n, ell = system.m, system.n, system.ell
    v = m * n
    r = _check_cycle_shape(system.base_cycles, v, ell)
    if not r:
        return r
    parts = []
    for o in system.orbits:
        s = stabilizer_order(o.base, v)
        if s != o.stabilizer or o.length * s != v:
            return Report(False, "stabilizer or orbit length mismatch", o)
        parts.append(_edge_keys(o.base, np.arange(v // s, dtype=np.int64), v))
    if not parts:
        return Report(False, "empty system")
    return _check_edge_keys(np.concatenate(parts), m, n)


def verify_cyclic(system: CycleSystem) -> Report:
    """The developed system is mapped to itself by x -> x + 1."""
    return verify_translation_invariant(system.cycles(), system.v)


def verify_translation_invariant(cycles: Sequence[Sequence[int]], v: int) -> Report:
    """A list of cycles of Z_v is closed under x -> x + 1 (and has no repeats)."""
    forms = {canonical(c, v) for c in cycles}
    if len(forms) != len(cycles):
        return Report(False, "repeated cycle")
    for c in cycles:
        if canonical(translate(c, 1, v), v) not in forms:
            return Report(False, "translate by 1 missing", normalize(c, v))
    return PASS
