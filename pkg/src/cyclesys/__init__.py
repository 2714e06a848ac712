"""Cyclic ell-cycle systems of the complete multipartite graph K_m[n].

Explicit difference-family constructions, an admissibility test, a bounded
search for the base cases, and an independent verifier.
"""

from .admissibility import Clause, is_admissible_triple, cyclic_exclusions, necessary_conditions, two_adic
from .blowup import blow_up_df, blow_up_system
from .dispatch import Nonexistent, SearchConfig, Unsupported, construct, construct_df
from .search import Budget, SearchBudgetExceeded, exhaustive_nonexistence, search_df
from .verify import Report, verify_cycle_system, verify_cyclic, verify_df
from .zmod import CycleSystem, DifferenceFamily, Orbit, Params, delta_cycle, develop, orbit, stabilizer_order, translate

__all__ = [
    "Budget",
    "Clause",
    "CycleSystem",
    "DifferenceFamily",
    "Nonexistent",
    "Orbit",
    "Params",
    "Report",
    "SearchBudgetExceeded",
    "SearchConfig",
    "Unsupported",
    "blow_up_df",
    "blow_up_system",
    "construct",
    "construct_df",
    "delta_cycle",
    "develop",
    "exhaustive_nonexistence",
    "is_admissible_triple",
    "cyclic_exclusions",
    "necessary_conditions",
    "orbit",
    "search_df",
    "stabilizer_order",
    "translate",
    "two_adic",
    "verify_cycle_system",
    "verify_cyclic",
    "verify_df",
]
