"""Odd cycle length ell >= 5 with m = 1 (mod ell) and 4 | n.

Every base cycle is a zigzag path P_a (spending a, a* and a block X_a of
consecutive pairs) closed up by a 3-path through -1 or -2 and -y_a.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .blowup import blow_up_df
from .gadgets import (
    consecutive_pairs,
    evens,
    interval,
    odds,
    pair_at_distance,
    star_pairing,
    sumset,
    zigzag_path,
)
from .zmod import DifferenceFamily, normalize


@dataclass
class OddPartition:
    """Split of a half difference set into the pieces the cycles consume.

    `groups` lists the index sets A_i in the order their cycles are built,
    together with the vertex each of their cycles passes through before -y_a.
    """

    groups: list[tuple[int, list[int]]]
    star: dict[int, int]
    B: list[int]
    X: list[int]
    Y_pairs: dict[int, list[tuple[int, int]]] = field(default_factory=dict)

    @property
    def A(self) -> list[int]:
        return sorted(a for _, g in self.groups for a in g)


def _lam_eps(ell: int) -> tuple[int, int]:
    lam = (ell - 3) // 2
    return lam, lam % 2


def _pieces(pairings) -> tuple[list[int], dict[int, int]]:
    star = {}
    for p in pairings:
        star.update(p.mapping)
    return sorted(star), star


def _check_distinct(*sets) -> None:
    seen = set()
    for s in sets:
        for x in s:
            if x in seen:
                raise AssertionError(f"partition overlap at {x}")
            seen.add(x)


def partition_five_n4(m: int, ell: int) -> OddPartition:
    """Pieces A, A*, B, X, Y of [1, 2m-1] minus {m} for the part-size-4 family."""
    if ell < 5 or ell % 2 == 0 or (m - 1) % ell:
        raise ValueError("need odd ell >= 5 and m = 1 (mod ell)")
    lam, eps = _lam_eps(ell)
    s = 2 * (m - 1) // ell
    P0 = star_pairing(interval(-s // 2, -1), [1], m, s // 2 + 1)
    P1 = star_pairing(interval(s // 2 + 1, s), [1], m, s // 2 + 2 * eps)
    A, star = _pieces([P0, P1])
    B = interval(lam + eps + 1, lam + eps + s)
    D = [x for x in range(1, 2 * m) if x != m]
    taken = set(A) | set(star.values()) | set(B)
    _check_distinct(A, star.values(), B)
    W = [x for x in D if x not in taken]
    pairs = consecutive_pairs(W)
    Y, X = pairs[:s], pairs[s:]
    if ell >= 7:
        assert all(y < m for p in Y for y in p)
    return OddPartition([(-1, A)], star, B, [x for p in X for x in p], {-1: Y})


def _zigzag_cycles(part: OddPartition, ell: int, v: int) -> tuple[tuple[int, ...], ...]:
    """C_a = P_a followed by the tail (t, -y_a) for each index a."""
    per = (ell - 5) // 2
    X_pairs = consecutive_pairs(part.X)
    cycles = []
    k = 0
    for tail, group in part.groups:
        ys = part.Y_pairs[tail]
        for a, (lo, hi) in zip(group, ys):
            xa = [x for p in X_pairs[k * per:(k + 1) * per] for x in p]
            k += 1
            path = zigzag_path(a, part.star[a], xa)
            cycles.append(normalize(path + (tail, -hi), v))
    return tuple(cycles)


_HARDCODED_24_4_5 = ((0, 11, 1, 10, 2), (0, 7, 2, 5, 1))


def df_4nu(m: int, ell: int, nu: int) -> DifferenceFamily:
    """(4m nu, 4 nu, C_ell)-DF for odd ell >= 5, m = 1 (mod ell), odd nu."""
    if nu < 1 or nu % 2 == 0:
        raise ValueError("nu must be odd")
    if (ell, m) == (5, 6):
        base = DifferenceFamily(6, 4, 5, _HARDCODED_24_4_5)
    else:
        part = partition_five_n4(m, ell)
        base = DifferenceFamily(m, 4, ell, _zigzag_cycles(part, ell, 4 * m))
    return base if nu == 1 else blow_up_df(base, nu)


def partition_five_n8(m: int, ell: int, nu: int) -> OddPartition:
    """Pieces of [1, 4 nu m] minus mZ for the family with n = 8 nu, m = 1 (mod 2 ell)."""
    if ell < 5 or ell % 2 == 0 or (m - 1) % (2 * ell) or nu < 1:
        raise ValueError("need odd ell >= 5, m = 1 (mod 2 ell), nu >= 1")
    lam, eps = _lam_eps(ell)
    s = 4 * (m - 1) // ell
    table = [
        (interval(1, s // 2), interval(2 * nu - 1, 3 * nu - 2), (nu - 1) * m + s // 2 + 2 * eps),
        (interval(-s // 2, -1), interval(2 * nu, 3 * nu - 2), nu * m + s // 2 + 1),
        (interval(-s // 2, -1), [4 * nu - 1], s // 2 + 1),
    ]
    A, star = _pieces(star_pairing(I, J, m, tau) for I, J, tau in table)
    B = sumset(interval(lam + eps + 1, lam + eps + s), interval(0, nu - 1), 2 * m)
    _check_distinct(A, star.values(), B)
    taken = set(A) | set(star.values()) | set(B)
    W = [x for x in range(1, 4 * nu * m + 1) if x % m and x not in taken]
    pairs = consecutive_pairs(W)
    Y, X = pairs[: nu * s], pairs[nu * s:]
    if ell >= 7:
        assert all(y < (2 * nu + 1) * m for p in Y for y in p)
    return OddPartition([(-1, A)], star, B, [x for p in X for x in p], {-1: Y})


def df_8nu_m1(m: int, ell: int, nu: int) -> DifferenceFamily:
    """(8 nu m, 8 nu, C_ell)-DF for odd ell >= 5 and m = 1 (mod 2 ell)."""
    part = partition_five_n8(m, ell, nu)
    return DifferenceFamily(m, 8 * nu, ell, _zigzag_cycles(part, ell, 8 * nu * m))


def partition_nine(m: int, ell: int, nu: int) -> OddPartition:
    """Pieces of [1, 4 nu m] minus mZ for n = 8 nu and m = ell + 1 (mod 2 ell)."""
    if ell < 5 or ell % 2 == 0 or (m - ell - 1) % (2 * ell) or nu < 1:
        raise ValueError("need odd ell >= 5, m = ell + 1 (mod 2 ell), nu >= 1")
    lam, eps = _lam_eps(ell)
    s = 4 * (m - 1) // ell
    P0 = star_pairing(interval(-s // 2, -1), interval(2 * nu + 1, 3 * nu), m, (nu - 1) * m + s // 2 + 1)
    P1 = star_pairing(interval(1, s // 2 - 1), interval(2 * nu, 3 * nu - 1), m, nu * m + s // 2)
    P2 = star_pairing([-1], interval(1, nu), m, nu * m)
    A0, star0 = _pieces([P0])
    A1, star1 = _pieces([P1, P2])
    star = {**star0, **star1}
    B0 = [x + lam for x in sumset(odds(3, s + 1), evens(0, 2 * nu - 2), m)]
    B1 = [x + lam for x in sumset(evens(0, s - 2), odds(1, 2 * nu - 1), m)]
    sign = 2 * eps - 1
    Y0 = sorted([b - sign for b in B0] + [b + sign for b in B1])
    B = sorted(B0 + B1)
    _check_distinct(A0, A1, star.values(), B, Y0)
    taken = set(A0) | set(A1) | set(star.values()) | set(B) | set(Y0)
    W = [x for x in range(1, 4 * nu * m + 1) if x % m and x not in taken]
    pairs = consecutive_pairs(W)
    Y1, X = pairs[: len(A1)], pairs[len(A1):]
    if ell >= 7:
        assert all(y < 2 * nu * m for p in Y1 for y in p)
    return OddPartition(
        [(-2, A0), (-1, A1)],
        star,
        B,
        [x for p in X for x in p],
        {-2: pair_at_distance(Y0, 2), -1: Y1},
    )


def _closed_form_ell_m1(m: int, nu: int) -> tuple[tuple[int, ...], ...]:
    cycles = []
    for i in range(1, 2 * nu + 1):
        x, y = 2 * nu + i, 2 * i - 1
        if m == 6:
            cycles.append((0, 6 * x - 1, 6 * y, -4, 6 * y - 2))
            cycles.append((0, 6 * x - 3, 6 * y, 5, 6 * y + 1))
        else:
            cycles.append((0, 8 * x - 7, 8 * y, 3, 8 * y - 1, 4, 8 * y - 2))
            cycles.append((0, 8 * x - 1, 8 * y, 16 * y + 6, 8 * y + 1, 16 * y + 5, 8 * y + 2))
    return cycles


def df_8nu_ellp1(m: int, ell: int, nu: int) -> DifferenceFamily:
    """(8 nu m, 8 nu, C_ell)-DF for odd ell >= 5 and m = ell + 1 (mod 2 ell)."""
    v = 8 * nu * m
    if ell == m - 1 and ell in (5, 7):
        cycles = tuple(normalize(c, v) for c in _closed_form_ell_m1(m, nu))
    else:
        cycles = _zigzag_cycles(partition_nine(m, ell, nu), ell, v)
    return DifferenceFamily(m, 8 * nu, ell, cycles)


def df_ell_divides_m1(m: int, n: int, ell: int) -> DifferenceFamily:
    """(mn, n, C_ell)-DF for odd ell >= 5, m = 1 (mod ell), 4 | n."""
    if ell < 5 or ell % 2 == 0 or (m - 1) % ell or n % 4:
        raise ValueError("need odd ell >= 5, m = 1 (mod ell), 4 | n")
    if n % 8 == 4:
        return df_4nu(m, ell, n // 4)
    nu = n // 8
    if m % 2:
        return df_8nu_m1(m, ell, nu)
    return df_8nu_ellp1(m, ell, nu)
