"""Odd cycle length ell >= 5 with ell | n (part size 2 ell or 0 mod 4 ell).

Each base cycle C_a starts 0, a*, a* - a, climbs through a ladder of rungs
{w, w - m} and comes back through a 2-path (t, -y_a) spending a pair of Y.
"""

from __future__ import annotations

from .gadgets import consecutive_pairs, interval, pair_at_distance, star_pairing
from .odd_m1 import _check_distinct, _lam_eps, _pieces
from .zmod import DifferenceFamily, normalize


def ladder_cycle(a: int, a_star: int, rungs: list[int], tail: tuple[int, int], m: int) -> tuple[int, ...]:
    """(0, a*, k, k + w_1, k + m, k + w_2 + m, k + 2m, ..., t, -y) with k = a* - a.

    `rungs` are the tops w_1 > w_2 > ... of the rung pairs {w, w - m}.
    """
    k = a_star - a
    c = [0, a_star, k]
    for t, w in enumerate(rungs):
        c.append(k + w + t * m)
        c.append(k + (t + 1) * m)
    c.extend(tail)
    return tuple(c)


def _rows_rungs(rows: list[int], m: int) -> list[list[int]]:
    """Group the rung tops x + hi*m by consecutive row pairs (lo, hi), lowest first."""
    rows = sorted(rows)
    if len(rows) % 2:
        raise AssertionError("odd number of rung rows")
    return [[x + rows[i + 1] * m for x in range(1, m)] for i in range(0, len(rows), 2)]


def _deal(rungs: list[int], q: int) -> list[list[int]]:
    """Rung k goes to cycle k mod q; each cycle gets its rungs highest first."""
    out = [[] for _ in range(q)]
    for k, w in enumerate(sorted(rungs)):
        out[k % q].append(w)
    return [sorted(r, reverse=True) for r in out]


def _rung_rows(W: list[int], m: int) -> list[int]:
    rows = sorted({x // m for x in W})
    if sorted(W) != sorted(x + r * m for r in rows for x in range(1, m)):
        raise AssertionError("leftover differences are not full rows")
    return rows


def _columns_avoiding(residues: list[int], m: int, prefer) -> list[int]:
    """A permutation x of [1, m-1] with x[i] != residues[i], by augmenting paths."""
    n = len(residues)
    owner: dict[int, int] = {}

    def options(i):
        p = prefer(residues[i])
        return [p] + [x for x in range(1, m) if x != p]

    def augment(i, seen):
        for x in options(i):
            if x == residues[i] or x in seen:
                continue
            seen.add(x)
            if x not in owner or augment(owner[x], seen):
                owner[x] = i
                return True
        return False

    for i in range(n):
        if not augment(i, set()):
            raise ValueError("no column assignment avoids the residues")
    cols = [0] * n
    for x, i in owner.items():
        cols[i] = x
    return cols


def df_2ell(m: int, ell: int) -> DifferenceFamily:
    """(2 ell m, 2 ell, C_ell)-DF for odd ell >= 5 and m = 0, 1 (mod 4)."""
    if ell < 5 or ell % 2 == 0 or m % 4 not in (0, 1) or m < 4:
        raise ValueError("need odd ell >= 5 and m = 0, 1 (mod 4), m >= 4")
    lam, eps = _lam_eps(ell)
    v = 2 * ell * m
    low = lam - 2 + 2 * eps
    P1 = star_pairing(interval(1, (m - 1) // 2), [low], m, (m - 1) // 2)
    Pm = star_pairing(interval(m // 2 + 1, m - 1), [ell - 2], m, (m + 1) // 2)
    A1, star1 = _pieces([P1])
    Am, starm = _pieces([Pm])
    star = {**star1, **starm}
    A0: list[int] = []
    gap = eps * m - 3
    if m % 2 == 0:
        a0 = m - 1 + low * m
        A0 = [a0]
        star[a0] = a0 + (1 - eps) * m + 2
    B = interval(1, m - 1)
    B = [x + (lam - 1) * m for x in B]
    swap = m == 4 and eps == 0
    D = [x for x in range(1, ell * m + 1) if x % m]
    Dp = [x + r * m for r in (low, lam + eps, ell - 2, ell - 1) for x in range(1, m)]
    if swap:
        D = [ell * m + 1 if x == ell * m - 1 else x for x in D]
        Dp = [ell * m + 1 if x == ell * m - 1 else x for x in Dp]
    A = A1 + A0 + Am
    _check_distinct(A, star.values(), B)
    used = set(A) | set(star.values())
    Y = sorted(x for x in Dp if x not in used)
    W = sorted(x for x in D if x not in used and x not in set(Dp) and x not in set(B))
    if len(used) + len(Y) + len(W) + len(B) != len(D):
        raise AssertionError("pieces do not cover the difference set")

    special = None
    if A0:
        for i, y in enumerate(Y):
            if y + abs(gap) in Y:
                rest = [x for x in Y if x not in (y, y + abs(gap))]
                try:
                    pairs = consecutive_pairs(rest)
                except ValueError:
                    continue
                special = (y, y + abs(gap))
                break
        if special is None:
            raise AssertionError("no pair at the required distance")
    else:
        pairs = consecutive_pairs(Y)

    q = m - 1
    tails = {}
    for a, (lo, hi) in zip(sorted(A1 + Am), pairs):
        tails[a] = (-1, -hi) if a in star1 else (1, -hi + 1)
    if A0:
        y = special[1] if gap > 0 else special[0]
        tails[A0[0]] = (3 - eps * m, -y)

    rows = _rung_rows(W, m) if W else []
    blocks = _rows_rungs(rows, m)
    order = sorted(A)
    residues = [a % m for a in order]
    cols = _columns_avoiding(residues, m, lambda r: m - r if m - r != r else 1) if blocks else [0] * q
    cycles = []
    for a, x in zip(order, cols):
        rungs = sorted((blk[x - 1] for blk in blocks), reverse=True)
        cycles.append(normalize(ladder_cycle(a, star[a], rungs, tails[a], m), v))
    return DifferenceFamily(m, 2 * ell, ell, tuple(cycles))


def _finish(m, n, ell, groups, star, Y_pairs, W) -> DifferenceFamily:
    """Cycles for indices listed in `groups` = [(tail kind, sorted A_i), ...]."""
    v = m * n
    order = [a for _, g in groups for a in g]
    q = len(order)
    rungs = _deal([w for blk in _rows_rungs(_rung_rows(W, m), m) for w in blk], q) if W else [[]] * q
    cycles = []
    k = {key: 0 for key in Y_pairs}
    idx = 0
    for kind, g in groups:
        for a in g:
            lo, hi = Y_pairs[kind][k[kind]]
            k[kind] += 1
            if kind == 1:
                tail = (-1, -hi)
            elif kind == -1:
                tail = (1, -hi + 1)
            else:
                tail = (2, -hi + 2)
            cycles.append(normalize(ladder_cycle(a, star[a], rungs[idx], tail, m), v))
            idx += 1
    return DifferenceFamily(m, n, ell, tuple(cycles))


def partition_seven(m: int, ell: int, nu: int):
    """A_1, A_-1, star map, B, Y, W for odd m and n = 4 ell nu."""
    if ell < 5 or ell % 2 == 0 or m < 3 or m % 2 == 0 or nu < 1:
        raise ValueError("need odd ell >= 5, odd m >= 3, nu >= 1")
    lam, eps = _lam_eps(ell)
    h = (m - 1) // 2
    J0 = interval((2 * ell - 4) * nu, (2 * ell - 3) * nu - 1)
    J1 = interval((2 * ell - 2) * nu, (2 * ell - 1) * nu - 1)
    table = [
        (interval(1, h), J0, nu * m + (m - 3) // 2),
        (interval(1, h), J1, nu * m + h),
        (interval(h + 1, m - 2), J0, nu * m - h),
        ([m - 1], J0, nu * m),
        (interval(h + 1, m - 1), J1, nu * m - h),
    ]
    P = [star_pairing(I, J, m, tau) for I, J, tau in table]
    A1, s1 = _pieces(P[:2])
    Am, s2 = _pieces(P[2:])
    star = {**s1, **s2}
    B = [x + r * m for r in interval(lam - 1, lam - 2 + 2 * nu) for x in range(1, m)]
    yrows = interval(lam - 1 + 2 * nu, lam - 3 + 6 * nu) + [lam - 2 + 6 * nu * eps]
    Y = sorted(x + r * m for r in yrows for x in range(1, m))
    _check_distinct(A1, Am, star.values(), B, Y)
    taken = set(A1) | set(Am) | set(star.values()) | set(B) | set(Y)
    W = [x for x in range(1, 2 * ell * nu * m + 1) if x % m and x not in taken]
    rows = interval(0, lam - 3 + eps) + interval(lam - 2 + 6 * nu + eps, (2 * ell - 4) * nu - 1)
    if sorted(W) != sorted(x + r * m for r in rows for x in range(1, m)):
        raise AssertionError("leftover differences differ from the rung rows")
    return A1, Am, star, B, Y, W


def df_modd(m: int, ell: int, nu: int) -> DifferenceFamily:
    """(4 ell nu m, 4 ell nu, C_ell)-DF for odd ell >= 5 and odd m >= 3."""
    A1, Am, star, _, Y, W = partition_seven(m, ell, nu)
    pairs = consecutive_pairs(Y)
    Y_pairs = {1: pairs[: len(A1)], -1: pairs[len(A1):]}
    return _finish(m, 4 * ell * nu, ell, [(1, A1), (-1, Am)], star, Y_pairs, W)


def partition_ten(m: int, ell: int, nu: int):
    """A_1, A_-1, A_-2, star map, B, Y_1, Y_2, W for even m and n = 4 ell nu."""
    if ell < 5 or ell % 2 == 0 or m < 4 or m % 2 or nu < 1:
        raise ValueError("need odd ell >= 5, even m >= 4, nu >= 1")
    lam, eps = _lam_eps(ell)
    mu = (2 - eps) * m
    h = m // 2
    j0 = 2 ** eps * (ell - 2) * nu
    J = interval(j0, j0 + nu - 1)
    off = (2 * nu) ** eps * m
    base = mu * nu
    rows = {
        (-1, 1): (interval(h + 2, m - 1), -h - 1),
        (1, 1): (interval(1, h + 1), h - 2),
        (-1, 2): ([off + x for x in interval(h + 1, m - 2)], -h),
        (1, 2): ([off + x for x in interval(1, h - 1)], h - 1),
        (-2, 1): ([off + h], -1),
        (-2, 2): ([off + m - 1], 0),
    }
    P = {key: star_pairing(I, J, mu, base + tau) for key, (I, tau) in rows.items()}
    A1, s1 = _pieces([P[(1, 1)], P[(1, 2)]])
    Am, s2 = _pieces([P[(-1, 1)], P[(-1, 2)]])
    A2, s3 = _pieces([P[(-2, 1)], P[(-2, 2)]])
    star = {**s1, **s2, **s3}
    centers = [r * mu + (lam - 1) * m for r in range(1, 2 * nu + 1, 2)]
    spread = [x for x in range(-m + 1, m) if x]
    B = sorted(c + x for c in centers for x in spread)
    wide = [x for x in range(-m + 1, m) if abs(x) >= 2]
    c1 = [c + 2 * m * nu ** eps for c in centers]
    c2 = [r * m + (4 * nu + lam - eps) * m for r in range(1, 2 * nu + 1, 2)]
    Y1 = sorted(c + x for c in c1 + c2 for x in wide)
    Y2 = sorted(c + x for c in c1 + c2 for x in (-1, 1))
    _check_distinct(A1, Am, A2, star.values(), B, Y1, Y2)
    taken = set(A1) | set(Am) | set(A2) | set(star.values()) | set(B) | set(Y1) | set(Y2)
    W = [x for x in range(1, 2 * ell * nu * m + 1) if x % m and x not in taken]
    wrows = interval(0, lam - eps - 1) + interval(lam - eps + 6 * nu, (2 * ell - 4) * nu - 1)
    if sorted(W) != sorted(x + r * m for r in wrows for x in range(1, m)):
        raise AssertionError("leftover differences differ from the rung rows")
    return A1, Am, A2, star, B, Y1, Y2, W


def df_meven(m: int, ell: int, nu: int) -> DifferenceFamily:
    """(4 ell nu m, 4 ell nu, C_ell)-DF for odd ell >= 5 and even m >= 4."""
    A1, Am, A2, star, _, Y1, Y2, W = partition_ten(m, ell, nu)
    pairs = consecutive_pairs(Y1)
    Y_pairs = {1: pairs[: len(A1)], -1: pairs[len(A1):], -2: pair_at_distance(Y2, 2)}
    return _finish(m, 4 * ell * nu, ell, [(1, A1), (-1, Am), (-2, A2)], star, Y_pairs, W)


def df_ell_divides_n(m: int, n: int, ell: int) -> DifferenceFamily:
    """(mn, n, C_ell)-DF for odd ell >= 5 when n = 2 ell (m = 0, 1 mod 4) or 4 ell | n."""
    if ell < 5 or ell % 2 == 0:
        raise ValueError("need odd ell >= 5")
    if n == 2 * ell:
        return df_2ell(m, ell)
    if n % (4 * ell) == 0:
        nu = n // (4 * ell)
        return df_modd(m, ell, nu) if m % 2 else df_meven(m, ell, nu)
    raise ValueError("need n = 2 ell or 4 ell | n")
