import math

from hypothesis import given
from hypothesis import strategies as st

from pickychar.partitions import partitions_of, size
from pickychar.towers import (
    build_tower,
    degree_2_part_via_tower,
    is_p_prime_degree,
    nu_p,
    nu_p_degree,
    p_adic_digits,
    splice_towers,
    tower_from_json,
    tower_to_json,
    tower_to_partition,
)

partitions = st.lists(st.integers(1, 5), max_size=7).map(
    lambda parts: tuple(sorted(parts, reverse=True))
)


def test_p_adic_digits():
    assert p_adic_digits(11, 2) == (1, 1, 0, 1)
    assert p_adic_digits(12, 3) == (0, 1, 1)
    assert p_adic_digits(0, 5) == ()


def test_nu_p():
    assert nu_p(48, 2) == 4
    assert nu_p(45, 3) == 2
    assert nu_p(7, 5) == 0


@given(partitions, st.sampled_from([2, 3]))
def test_tower_round_trip(lam, p):
    tower = build_tower(lam, p)
    assert tower.weight() == size(lam)
    assert tower_to_partition(tower) == lam
    assert tower_from_json(tower_to_json(tower)) == tower


def _nu_factorial(n, p):
    return sum(n // p**i for i in range(1, n.bit_length() * 2 + 2) if p**i <= n)


def test_nu_p_degree_against_factorials():
    from pickychar.characters import degree

    for n in range(1, 9):
        for lam in partitions_of(n):
            for p in (2, 3):
                assert nu_p_degree(lam, p) == nu_p(degree(lam), p)
                assert is_p_prime_degree(lam, p) == (nu_p(degree(lam), p) == 0)
    assert math.factorial(8) % 2 ** _nu_factorial(8, 2) == 0


def test_degree_2_part_via_tower():
    from pickychar.characters import degree

    for lam in partitions_of(8):
        assert degree_2_part_via_tower(lam) == 2 ** nu_p(degree(lam), 2)


def test_p_prime_iff_row_weights_are_digits():
    for n in (6, 9, 12):
        for p in (2, 3):
            digits = p_adic_digits(n, p)
            for lam in partitions_of(n):
                tower = build_tower(lam, p)
                weights = tower.row_weights()
                padded = weights + (0,) * (len(digits) - len(weights))
                assert is_p_prime_degree(lam, p) == (padded == digits)


def test_splice_towers_reassembles_split_rows():
    # split the tower of a partition of 12 at row 3: low rows give a
    # partition of (12 mod 8), high rows one of 8
    for lam in partitions_of(12):
        tower = build_tower(lam, 2)
        weights = tower.row_weights()
        low_weight = sum(b * 2**i for i, b in enumerate(weights[:3]))
        if low_weight != 4:
            continue
        low = tower_to_partition(
            type(tower)(p=2, rows=tuple(
                row if i < 3 else ((),) * 2**i for i, row in enumerate(tower.rows)
            ))
        )
        high = tower_to_partition(
            type(tower)(p=2, rows=tuple(
                row if i >= 3 else ((),) * 2**i for i, row in enumerate(tower.rows)
            ))
        )
        assert splice_towers(low, high, 3) == lam
