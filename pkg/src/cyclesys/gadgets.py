"""Building blocks shared by the explicit constructions.

* balanced sets of differences, which close up into a single cycle;
* zigzag paths, which spend a list of consecutive pairs on a short path;
* star pairings a -> a*, which make {a* - a} an arithmetic-looking set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def interval(lo: int, hi: int) -> list[int]:
    """[lo, hi] as a list; empty when hi < lo."""
    return list(range(lo, hi + 1))


def odds(lo: int, hi: int) -> list[int]:
    return [x for x in range(lo, hi + 1) if x % 2]


def evens(lo: int, hi: int) -> list[int]:
    return [x for x in range(lo, hi + 1) if x % 2 == 0]


def sumset(xs: Iterable[int], ys: Iterable[int], scale: int = 1) -> list[int]:
    """{x + y*scale}, sorted."""
    ys = list(ys)
    return sorted({x + y * scale for x in xs for y in ys})


def pair_at_distance(xs: Iterable[int], gap: int) -> list[tuple[int, int]]:
    """Split xs into pairs (x, x + gap), scanning upward.

    The least remaining element can only be paired with the element gap above
    it, so the greedy scan finds a pairing whenever one exists.
    """
    rest = set(xs)
    out = []
    for x in sorted(rest):
        if x not in rest:
            continue
        if x + gap not in rest:
            raise ValueError(f"{x} has no partner at distance {gap}")
        rest.discard(x)
        rest.discard(x + gap)
        out.append((x, x + gap))
    return out


def consecutive_pairs(xs: Iterable[int]) -> list[tuple[int, int]]:
    return pair_at_distance(xs, 1)


def alternating_pattern(ds: Iterable[int]) -> tuple[int, ...]:
    """(d_2 - d_1, d_4 - d_3, ...) for the increasing ordering of ds."""
    d = sorted(ds)
    if len(d) % 2:
        raise ValueError("alternating pattern needs an even number of elements")
    return tuple(d[2 * i + 1] - d[2 * i] for i in range(len(d) // 2))


def find_balance_tau(pattern: Sequence[int]) -> int | None:
    """Least tau with s_1 + ... + s_tau == s_{tau+1} + ... + s_k, or None."""
    total = sum(pattern)
    run = 0
    for tau, s in enumerate(pattern, start=1):
        run += s
        if 2 * run == total:
            return tau
        if 2 * run > total:
            return None
    return None


def is_balanced(ds: Iterable[int]) -> bool:
    ds = list(ds)
    return len(ds) % 2 == 0 and len(ds) >= 4 and find_balance_tau(alternating_pattern(ds)) is not None


def cycle_from_balanced(ds: Iterable[int]) -> tuple[int, ...]:
    """A 2k-cycle of Z with edge lengths exactly ds, for a balanced set ds.

    With ds sorted as d_1 < ... < d_2k and tau the balance point, the lengths
    are visited in the order d_1..d_2tau, d_{2tau+2}..d_2k, d_{2tau+1} with
    alternating signs.  The vertices stay inside [-max(ds), max(ds)].
    """
    d = sorted(ds)
    k = len(d) // 2
    pattern = alternating_pattern(d)
    tau = find_balance_tau(pattern)
    if tau is None or k < 2:
        raise ValueError("set is not balanced")
    order = d[: 2 * tau] + d[2 * tau + 1:] + [d[2 * tau]]
    c = [0]
    for h, delta in enumerate(order[:-1], start=1):
        c.append(c[-1] + (delta if h % 2 == 0 else -delta))
    return tuple(c)


def zigzag_path(d: int, d_star: int, xs: Iterable[int]) -> tuple[int, ...]:
    """Path 0, p_1, ..., p_2lam whose edge lengths are d, d* and the elements of xs.

    xs must split into pairs of consecutive integers and d < d*.  The path
    ends at d* - d + lam - 1, where lam = |xs|/2 + 1.
    """
    x = sorted(xs, reverse=True)
    if len(x) % 2 or any(x[2 * j] - x[2 * j + 1] != 1 for j in range(len(x) // 2)):
        raise ValueError("xs must be a union of consecutive pairs")
    if d >= d_star:
        raise ValueError("need d < d*")
    lam = len(x) // 2 + 1
    k = d_star - d
    p = [0, -d]
    for i in range(2, 2 * lam + 1):
        if i % 2 == 0:
            p.append(k + i // 2 - 1)
        else:
            p.append(k + x[i - 3] + (i - 3) // 2)
    return tuple(p)


@dataclass(frozen=True)
class StarPairing:
    """a -> a* = max A + min A + tau - a on A = I + J*mu."""

    domain: tuple[int, ...]
    image: tuple[int, ...]
    mapping: dict

    def __getitem__(self, a: int) -> int:
        return self.mapping[a]


def star_pairing(I: Sequence[int], J: Sequence[int], mu: int, tau: int) -> StarPairing:
    """Pair A = I + J*mu with A* so that the gaps a* - a are

        ([1, 2|I|]_odd + [1, 2|J|]_odd * mu) + tau - |I| - |J| mu.

    I must be an interval shorter than mu and J an interval.  An empty I or J
    gives the empty pairing.
    """
    I, J = sorted(I), sorted(J)
    if not I or not J:
        return StarPairing((), (), {})
    if len(I) >= mu:
        raise ValueError("|I| must be smaller than mu")
    A = sumset(I, J, mu)
    top = A[-1] + A[0] + tau
    mapping = {a: top - a for a in A}
    return StarPairing(tuple(A), tuple(sorted(mapping.values())), mapping)
