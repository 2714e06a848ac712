import pytest
from hypothesis import given, strategies as st

from cyclesys.gadgets import (
    alternating_pattern,
    consecutive_pairs,
    cycle_from_balanced,
    find_balance_tau,
    is_balanced,
    pair_at_distance,
    star_pairing,
    zigzag_path,
)
from gadget_samples import (
    abs_lengths,
    check_balanced_cycle,
    check_star,
    check_zigzag,
    random_balanced,
    random_star_input,
    random_zigzag_input,
)
from known_families import BALANCED_12, BALANCED_12_CYCLE


def test_pattern_and_tau():
    assert alternating_pattern(BALANCED_12) == (2, 2, 1, 2, 1, 2)
    assert find_balance_tau(alternating_pattern(BALANCED_12)) == 3
    assert find_balance_tau(alternating_pattern([1, 2])) is None
    assert find_balance_tau(alternating_pattern([1, 2, 3, 4])) == 1
    with pytest.raises(ValueError):
        alternating_pattern([1, 2, 3])


@pytest.mark.parametrize("ds,cycle", [
    (BALANCED_12, BALANCED_12_CYCLE),
    ([1, 2, 3, 4], (0, -1, 1, -3)),
    ([1, 2, 3, 5, 6, 9], (0, -1, 1, -2, 3, -6)),
])
def test_cycle_from_balanced(ds, cycle):
    c = cycle_from_balanced(ds)
    assert c == cycle
    assert abs_lengths(c, True) == sorted(ds)


def test_cycle_from_unbalanced_rejected():
    with pytest.raises(ValueError):
        cycle_from_balanced([1, 2, 3, 5])
    assert not is_balanced([1, 2, 3, 5])


@given(st.randoms(use_true_random=False))
def test_random_balanced_sets(rng):
    check_balanced_cycle(random_balanced(rng))


def test_zigzag_examples():
    assert zigzag_path(9, 11, [7, 8, 13, 14]) == (0, -9, 2, 16, 3, 11, 4)
    assert zigzag_path(1, 3, []) == (0, -1, 2)
    p = zigzag_path(1, 3, [5, 6])
    assert p == (0, -1, 2, 8, 3)
    assert abs_lengths(p, False) == [1, 3, 5, 6]


def test_zigzag_rejects_bad_input():
    with pytest.raises(ValueError):
        zigzag_path(1, 3, [5, 7])
    with pytest.raises(ValueError):
        zigzag_path(3, 1, [])


@given(st.randoms(use_true_random=False))
def test_random_zigzags(rng):
    check_zigzag(*random_zigzag_input(rng))


def test_star_pairing_examples():
    p = star_pairing([-1], [1], 10, 2)
    assert p[9] == 11
    p = star_pairing([1], [0], 7, 0)
    assert p[1] == 1
    p = star_pairing([1, 2, 3, 4], [0], 10, 0)
    assert {a: p[a] for a in p.domain} == {1: 4, 2: 3, 3: 2, 4: 1}
    assert sorted(p[a] - a for a in p.domain) == [-3, -1, 1, 3]


def test_star_pairing_needs_short_i():
    with pytest.raises(ValueError):
        star_pairing([1, 2, 3], [0, 1], 3, 0)


@given(st.randoms(use_true_random=False))
def test_random_star_pairings(rng):
    check_star(*random_star_input(rng))


def test_pairing_helpers():
    assert consecutive_pairs([4, 1, 2, 3]) == [(1, 2), (3, 4)]
    assert pair_at_distance([19, 21, 27, 29], 2) == [(19, 21), (27, 29)]
    with pytest.raises(ValueError):
        consecutive_pairs([1, 3])
