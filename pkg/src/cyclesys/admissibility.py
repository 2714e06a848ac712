"""Which triples (m, n, ell) can carry a cyclic ell-cycle system of K_m[n]."""

from __future__ import annotations

from enum import Enum
from math import comb


class Clause(str, Enum):
    """Reason a triple is ruled out."""

    RANGE = "basic-length"            # ell outside [3, mn] or m, n too small
    PARITY = "basic-parity"           # (m-1)n odd: vertex degree is odd
    EDGE_COUNT = "basic-divisibility"  # ell does not divide the number of edges
    NOT_IN_REGIME = "not-in-regime"   # 2 ell does not divide (m-1)n
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    NO_TRIANGLE_DF = "no-triangle-df"  # m = 3, ell = 3: ruled out by exhaustive search


DESCRIPTIONS = {
    Clause.RANGE: "cycle length outside [3, mn]",
    Clause.PARITY: "(m-1)n is odd",
    Clause.EDGE_COUNT: "ell does not divide the number of edges",
    Clause.NOT_IN_REGIME: "2 ell does not divide (m-1)n",
    Clause.A: "m = 0 mod 4 and |ell|_2 = |m|_2 + 2|n|_2 - 1",
    Clause.B: "m = 1 mod 4 and |ell|_2 = |m-1|_2 + 2|n|_2 - 1",
    Clause.C: "m = 2,3 mod 4, n = 2 mod 4, ell != 0 mod 4",
    Clause.D: "m = 2,3 mod 4, n = 0 mod 4, |ell|_2 = 2|n|_2",
    Clause.NO_TRIANGLE_DF: "m = 3 and ell = 3: every triangle of Z_3n avoiding 3Z steps by the same residue mod 3, "
    "which makes the differences sum to the wrong value",
}


def two_adic(x: int) -> int:
    """Exponent of 2 in x >= 1."""
    if x <= 0:
        raise ValueError("two_adic needs a positive integer")
    return (x & -x).bit_length() - 1


def necessary_conditions(m: int, n: int, ell: int) -> Clause | None:
    """Counting conditions for any ell-cycle system of K_m[n]; None when they hold."""
    if m < 2 or n < 1 or ell < 3 or ell > m * n:
        return Clause.RANGE
    if ((m - 1) * n) % 2:
        return Clause.PARITY
    if (comb(m, 2) * n * n) % ell:
        return Clause.EDGE_COUNT
    return None


def cyclic_exclusions(m: int, n: int, ell: int) -> Clause | None:
    """Parity obstructions to cyclic systems when n is even.

    Returns the first clause that applies, or None.
    """
    if n % 2:
        return None
    a, b = two_adic(ell), two_adic(n)
    if m % 4 == 0 and a == two_adic(m) + 2 * b - 1:
        return Clause.A
    if m % 4 == 1 and a == two_adic(m - 1) + 2 * b - 1:
        return Clause.B
    if m % 4 in (2, 3):
        if n % 4 == 2 and ell % 4:
            return Clause.C
        if n % 4 == 0 and a == 2 * b:
            return Clause.D
    return None


def in_regime(m: int, n: int, ell: int) -> bool:
    """Triples with 2 ell | (m-1)n, where difference families are the natural tool."""
    return m >= 3 and n >= 1 and ell >= 3 and ((m - 1) * n) % (2 * ell) == 0


def is_admissible_triple(m: int, n: int, ell: int) -> bool:
    """Exact existence criterion for a cyclic ell-cycle system inside the regime."""
    if not in_regime(m, n, ell):
        return False
    if n % 4 == 2:
        if ell % 2 == 1 and m % 4 not in (0, 1):
            return False
        if ell % 4 == 2 and m % 4 == 3:
            return False
    return True
