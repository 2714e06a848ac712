"""Difference families and cycle systems for even cycle length."""

from __future__ import annotations

from math import gcd

from .gadgets import cycle_from_balanced, interval, pair_at_distance
from .zmod import DifferenceFamily, normalize


def _family(m: int, n: int, ell: int, blocks: list[list[int]]) -> DifferenceFamily:
    v = m * n
    cycles = tuple(normalize(cycle_from_balanced(b), v) for b in blocks)
    return DifferenceFamily(m, n, ell, cycles)


def _slices(xs: list[int], size: int) -> list[list[int]]:
    return [xs[i:i + size] for i in range(0, len(xs), size)]


def blocks_ell_0_mod4(m: int, n: int, ell: int) -> list[list[int]]:
    """Balanced ell-sets partitioning [1, mn/2] minus the multiples of m."""
    if ell % 4 or ((m - 1) * n) % (2 * ell):
        raise ValueError("need ell = 0 (mod 4) and 2 ell | (m-1)n")
    if m % 2:
        D = [x for x in range(1, n * m // 2 + 1) if x % m]
        return _slices(D, ell)
    # m even forces 8 | n; mirror blocks of the lower half around 4tm
    t = n // 8
    A = [x for x in range(1, 2 * t * m) if x % m]
    return [b + [4 * t * m - x for x in b] for b in _slices(A, ell // 2)]


def df_ell_0_mod4(m: int, n: int, ell: int) -> DifferenceFamily:
    """(mn, n, C_ell)-DF for ell = 0 (mod 4) and 2 ell | (m-1)n."""
    return _family(m, n, ell, blocks_ell_0_mod4(m, n, ell))


def _pairs_of_run(lo: int, length: int) -> list[tuple[int, int]]:
    """Pairs {a, a+2} covering [lo, lo+length-1], length = 0 (mod 4), in order."""
    return pair_at_distance(range(lo, lo + length), 2)


def blocks_4m_4(m: int, ell: int) -> list[list[int]]:
    """Balanced blocks {a, a+2} + B_i for the (4m, 4, C_ell) family."""
    if ell < 6 or ell % 4 != 2 or (2 * (m - 1)) % ell:
        raise ValueError("need ell = 2 (mod 4), ell >= 6, ell | 2(m-1)")
    q = 2 * (m - 1) // ell
    if m % 2:
        pairs = _pairs_of_run(1, 2 * q)
        B = interval(2 * q + 1, m - 1) + interval(m + 1, 2 * m - 1)
    else:
        pairs = _pairs_of_run(1, 2 * q - 2) + [(m - 1, m + 1)]
        B = interval(2 * q - 1, m - 2) + interval(m + 2, 2 * m - 2) + [2 * m + 1]
    return [list(p) + b for p, b in zip(pairs, _slices(B, ell - 2))]


def df_4m_4(m: int, ell: int) -> DifferenceFamily:
    """(4m, 4, C_ell)-DF for ell = 2 (mod 4), ell >= 6, ell | 2(m-1)."""
    return _family(m, 4, ell, blocks_4m_4(m, ell))


def blocks_half_ell(m: int, ell: int) -> list[list[int]]:
    """Balanced blocks B_i + {a, a+2} for the (m ell/2, ell/2, C_ell) family."""
    if ell < 6 or ell % 4 != 2 or m % 4 != 1:
        raise ValueError("need ell = 2 (mod 4), ell >= 6, m = 1 (mod 4)")
    n = ell // 2
    q = (m - 1) // 4
    lo = (ell - 2) * m // 4 + 1
    if m % 8 == 1:
        pairs = _pairs_of_run(lo, 2 * q)
    else:
        pairs = _pairs_of_run(lo, 2 * q - 2)
        top = (ell * m + 2) // 4
        pairs.append((top - 2, top))
    B = [x for x in range(1, lo) if x % m]
    return [b + list(p) for p, b in zip(pairs, _slices(B, ell - 2))]


def df_half_ell(m: int, ell: int) -> DifferenceFamily:
    """(m ell/2, ell/2, C_ell)-DF for ell = 2 (mod 4) and m = 1 (mod 4)."""
    return _family(m, ell // 2, ell, blocks_half_ell(m, ell))


def blocks_2ell(m: int, ell: int) -> list[list[int]]:
    """D_i = {i + jm : j in [0, ell-2] + {ell}} for i in [1, m-1]."""
    if ell < 6 or ell % 4 != 2:
        raise ValueError("need ell = 2 (mod 4), ell >= 6")
    steps = interval(0, ell - 2) + [ell]
    return [[i + j * m for j in steps] for i in range(1, m)]


def df_2ell_m_even(m: int, ell: int) -> DifferenceFamily:
    """(2 ell m, 2 ell, C_ell)-DF for ell = 2 (mod 4), ell >= 6, any m >= 2."""
    return _family(m, 2 * ell, ell, blocks_2ell(m, ell))


def even_route(m: int, n: int, ell: int, base_case) -> tuple[DifferenceFamily, int, int]:
    """(F, s, u) such that blowing F up by s with u copies per cycle gives the system.

    `base_case(m, n, ell)` supplies the complete-graph families that are found
    by search.  The triple must be admissible.
    """
    if ell % 2 or ((m - 1) * n) % (2 * ell) or m < 3:
        raise ValueError("even_route needs even ell with 2 ell | (m-1)n")
    if ell % 4 == 0:
        return df_ell_0_mod4(m, n, ell), 1, 1
    lam_m = gcd(ell, m - 1)
    if lam_m >= 3:
        if m % 4 == 1:
            return base_case(m, 1, lam_m), n, ell // lam_m
        lam = lam_m if m % 4 == 3 else 2 * lam_m
        return df_4m_4(m, lam), n // 4, ell // lam
    if m % 4 == 1:
        return df_half_ell(m, ell), 2 * n // ell, 1
    return df_2ell_m_even(m, ell), n // (2 * ell), 1


def construct_even(m: int, n: int, ell: int, base_case=None):
    """Cyclic ell-cycle system of K_m[n] for even ell inside the regime.

    Raises Nonexistent for the excluded triples.
    """
    from .blowup import blow_up_system
    from .dispatch import Nonexistent, base_case_df
    from .admissibility import Clause, is_admissible_triple

    if ell % 2 or ((m - 1) * n) % (2 * ell) or m < 3:
        raise ValueError("construct_even needs even ell with 2 ell | (m-1)n")
    if not is_admissible_triple(m, n, ell):
        raise Nonexistent(Clause.C)
    return blow_up_system(*even_route(m, n, ell, base_case or base_case_df))
