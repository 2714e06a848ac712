"""Cycles in Z_v and the cyclic group action on them.

A cycle is a tuple of distinct residues (c_0, ..., c_{l-1}); it stands for the
closed walk c_0 -> c_1 -> ... -> c_{l-1} -> c_0.  Two tuples describe the same
cycle when one is a rotation or a reversal of the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

Cycle = tuple[int, ...]


@dataclass(frozen=True)
class Params:
    """The triple (m, n, ell) for K_m[n] with v = mn and ell-cycles."""

    m: int
    n: int
    ell: int

    @property
    def v(self) -> int:
        return self.m * self.n

    @property
    def q(self) -> int:
        """Number of base cycles of a difference family, (m-1)n / (2 ell)."""
        return (self.m - 1) * self.n // (2 * self.ell)

    def in_regime(self) -> bool:
        return (
            self.m >= 3
            and self.n >= 1
            and self.ell >= 3
            and ((self.m - 1) * self.n) % (2 * self.ell) == 0
        )


@dataclass(frozen=True)
class DifferenceFamily:
    """Base cycles whose difference lists partition Z_v minus the multiples of m."""

    m: int
    n: int
    ell: int
    base_cycles: tuple[Cycle, ...]

    @property
    def v(self) -> int:
        return self.m * self.n

    @property
    def params(self) -> Params:
        return Params(self.m, self.n, self.ell)


@dataclass(frozen=True)
class Orbit:
    base: Cycle
    stabilizer: int
    length: int


@dataclass(frozen=True)
class CycleSystem:
    """A cyclic cycle system of K_m[n], stored as orbit representatives."""

    m: int
    n: int
    ell: int
    orbits: tuple[Orbit, ...]
    _cycles: list = field(default=None, repr=False, compare=False, hash=False)

    @property
    def v(self) -> int:
        return self.m * self.n

    @property
    def base_cycles(self) -> tuple[Cycle, ...]:
        return tuple(o.base for o in self.orbits)

    @property
    def num_cycles(self) -> int:
        return sum(o.length for o in self.orbits)

    def cycles(self) -> list[Cycle]:
        """Every cycle of the system (all translates of every base cycle)."""
        if self._cycles is None:
            out = []
            for o in self.orbits:
                out.extend(orbit(o.base, self.v))
            object.__setattr__(self, "_cycles", out)
        return self._cycles


def normalize(cycle: Iterable[int], v: int) -> Cycle:
    return tuple(c % v for c in cycle)


def delta_cycle(cycle: Sequence[int], v: int) -> list[int]:
    """Sorted multiset {+-(c_{h+1} - c_h)} of a cycle, reduced mod v."""
    ell = len(cycle)
    out = []
    for h in range(ell):
        d = (cycle[(h + 1) % ell] - cycle[h]) % v
        out.append(d)
        out.append((-d) % v)
    out.sort()
    return out


def is_simple(cycle: Sequence[int], v: int) -> bool:
    return len(cycle) >= 3 and len({c % v for c in cycle}) == len(cycle)


def translate(cycle: Sequence[int], g: int, v: int) -> Cycle:
    return tuple((c + g) % v for c in cycle)


def canonical(cycle: Sequence[int], v: int) -> Cycle:
    """Rotation/reflection invariant form: start at the least vertex and read
    in whichever direction gives the lexicographically smaller tuple."""
    c = normalize(cycle, v)
    ell = len(c)
    i = c.index(min(c))
    fwd = tuple(c[(i + k) % ell] for k in range(ell))
    bwd = tuple(c[(i - k) % ell] for k in range(ell))
    return min(fwd, bwd)


def stabilizer_order(cycle: Sequence[int], v: int) -> int:
    """Order of {g in Z_v : C + g = C}."""
    # The stabilizer is the subgroup of some order k, and k divides the cycle
    # length because it acts freely on the vertices.  Translation by v/k lies
    # in it iff k divides its order, so the order is the largest such k.
    c = normalize(cycle, v)
    base = canonical(c, v)
    vs = set(c)
    g = gcd(v, len(c))
    best = 1
    for k in range(2, g + 1):
        if g % k:
            continue
        shift = v // k
        if all((y + shift) % v in vs for y in c) and canonical(translate(c, shift, v), v) == base:
            best = k
    return best


def orbit(cycle: Sequence[int], v: int) -> list[Cycle]:
    """The distinct translates of a cycle; there are v / stabilizer_order of them.

    The stabilizer is a subgroup of Z_v, hence generated by v/s, so the
    translates by 0, ..., v/s - 1 are pairwise distinct.
    """
    s = stabilizer_order(cycle, v)
    return [translate(cycle, g, v) for g in range(v // s)]


def non_multiples(m: int, n: int) -> list[int]:
    """Z_v minus the subgroup mZ_v, in increasing order."""
    return [d for d in range(1, m * n) if d % m]


def half_classes(m: int, n: int) -> list[int]:
    """One representative d in [1, v/2] of every class {d, -d} outside mZ_v."""
    v = m * n
    return [d for d in range(1, v // 2 + 1) if d % m]


def develop(df: DifferenceFamily) -> CycleSystem:
    """All translates of the base cycles of a difference family."""
    from .verify import verify_df

    report = verify_df(df)
    if not report:
        raise ValueError(f"not a difference family: {report.reason}")
    v = df.v
    orbits = tuple(Orbit(normalize(c, v), 1, v) for c in df.base_cycles)
    return CycleSystem(df.m, df.n, df.ell, orbits)


def system_from_cycles(m: int, n: int, ell: int, base: Iterable[Sequence[int]]) -> CycleSystem:
    """Wrap base cycles into a CycleSystem, computing stabilizers and orbit lengths."""
    v = m * n
    orbits = []
    for c in base:
        c = normalize(c, v)
        s = stabilizer_order(c, v)
        orbits.append(Orbit(c, s, v // s))
    return CycleSystem(m, n, ell, tuple(orbits))
