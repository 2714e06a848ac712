"""Top-level construction of cyclic ell-cycle systems of K_m[n].

Every route ends in a difference family F on Z_{mw} together with a blow-up
(s, u): the system is blow_up_system(F, s, u).  Families that the explicit
constructions do not cover (complete graphs, part size 2 or ell with odd m,
triangles) come from the bounded search, memoised per process and optionally
cached on disk.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .admissibility import Clause, DESCRIPTIONS, in_regime, is_admissible_triple, cyclic_exclusions, two_adic
from .blowup import blow_up_df, blow_up_system
from .even import even_route
from .odd_m1 import df_ell_divides_m1
from .odd_n import df_ell_divides_n
from .search import Budget, DFCache, SearchBudgetExceeded, get_cache, search_df
from .zmod import CycleSystem, DifferenceFamily


class Nonexistent(Exception):
    """No cyclic system exists; `clause` names the obstruction."""

    def __init__(self, clause: Clause):
        super().__init__(f"{clause.value}: {DESCRIPTIONS[clause]}")
        self.clause = clause


class Unsupported(Exception):
    """The triple is outside the settled regime or a search ran out of budget."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class Route:
    """System = blow_up_system(family, s, u)."""

    family: DifferenceFamily
    s: int
    u: int


@dataclass
class SearchConfig:
    budget: Budget = Budget()
    seed: int = 0
    cache: DFCache | None = None


def base_case_df(m: int, n: int, ell: int, config: SearchConfig | None = None) -> DifferenceFamily:
    """An (mn, n, C_ell)-DF whose existence is known, found by search.

    Raises Unsupported when the search budget runs out.
    """
    config = config or SearchConfig()
    cache = config.cache if config.cache is not None else get_cache()
    try:
        df = search_df(m, n, ell, budget=config.budget, seed=config.seed, cache=cache)
    except SearchBudgetExceeded as exc:
        raise Unsupported(f"search-budget: {exc}") from exc
    if df is None:
        raise RuntimeError(f"search exhausted without an ({m * n}, {n}, C_{ell})-DF, which should exist")
    return df


def _triangle_route(m: int, n: int, base) -> Route:
    if m == 3:
        raise Nonexistent(Clause.NO_TRIANGLE_DF)
    a = two_adic(n)
    w = 2 ** a if ((m - 1) * 2 ** a) % 6 == 0 else 3 * 2 ** a
    return Route(base(m, w, 3), n // w, 1)


def _odd_route(m: int, n: int, ell: int, base) -> Route:
    lam_m = gcd(ell, m - 1)
    lam_n = ell // lam_m
    a = two_adic(n)
    n_odd = n // (2 ** a * lam_n)
    if lam_m >= 3:
        if a <= 1:
            df = base(m, 2 ** a, lam_m)
        elif lam_m >= 5:
            df = df_ell_divides_m1(m, 2 ** a, lam_m)
        else:
            df = base(m, 2 ** a, 3)
        return Route(df, lam_n * n_odd, lam_n)
    if a == 0:
        return Route(base(m, ell, ell), n_odd, 1)
    return Route(df_ell_divides_n(m, 2 ** a * ell, ell), n_odd, 1)


def route(m: int, n: int, ell: int, config: SearchConfig | None = None) -> Route:
    """Pick the construction for (m, n, ell).

    Raises Unsupported outside 2 ell | (m-1)n, Nonexistent for excluded triples.
    """
    if not in_regime(m, n, ell):
        raise Unsupported(Clause.NOT_IN_REGIME.value)
    if not is_admissible_triple(m, n, ell):
        raise Nonexistent(cyclic_exclusions(m, n, ell) or Clause.C)

    def base(mm, nn, ll):
        return base_case_df(mm, nn, ll, config)

    if ell % 2 == 0:
        return Route(*even_route(m, n, ell, base))
    if ell == 3:
        return _triangle_route(m, n, base)
    return _odd_route(m, n, ell, base)


def construct(m: int, n: int, ell: int, config: SearchConfig | None = None) -> CycleSystem:
    """A cyclic ell-cycle system of K_m[n]."""
    r = route(m, n, ell, config)
    return blow_up_system(r.family, r.s, r.u)


def construct_df(m: int, n: int, ell: int, config: SearchConfig | None = None) -> DifferenceFamily:
    """An (mn, n, C_ell)-DF, when the chosen route produces one (no short orbits)."""
    r = route(m, n, ell, config)
    if r.u != 1:
        raise Unsupported("short-orbits: the construction for this triple is not a difference family")
    return blow_up_df(r.family, r.s)
