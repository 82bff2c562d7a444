import pytest
from hypothesis import given
from hypothesis import strategies as st

from pickychar.partitions import (
    as_partition,
    beta_set,
    cells,
    conjugate,
    double_hook_shape,
    format_partition,
    from_core_and_quotient,
    hook_length,
    hook_product,
    hook_shape,
    list_q_hooks,
    parse_partition,
    partition_from_beta,
    partitions_of,
    q_core,
    q_hook_additions,
    q_hook_removals,
    q_quotient,
    remove_hook,
    size,
)

partitions = st.lists(st.integers(1, 6), max_size=8).map(
    lambda parts: tuple(sorted(parts, reverse=True))
)


def test_as_partition_validates():
    assert as_partition([3, 2, 2, 0, 0]) == (3, 2, 2)
    with pytest.raises(ValueError):
        as_partition([2, 3])
    with pytest.raises(ValueError):
        as_partition([3, -1])


def test_partitions_of_counts():
    # partition numbers p(0..10)
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, count in enumerate(expected):
        assert len(partitions_of(n)) == count
        assert all(size(lam) == n for lam in partitions_of(n))


@given(partitions)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert size(conjugate(lam)) == size(lam)


def test_hook_lengths_by_hand():
    # standard example: hooks of (4,3,1)
    lam = (4, 3, 1)
    grid = {(i, j): hook_length(lam, (i, j)) for (i, j) in cells(lam)}
    assert grid == {
        (1, 1): 6, (1, 2): 4, (1, 3): 3, (1, 4): 1,
        (2, 1): 4, (2, 2): 2, (2, 3): 1,
        (3, 1): 1,
    }
    assert hook_product(lam) == 6 * 4 * 3 * 4 * 2


@given(partitions, st.integers(0, 4))
def test_beta_round_trip(lam, pad):
    m = len(lam) + pad if lam else pad + 1
    assert partition_from_beta(beta_set(lam, m)) == lam


@given(partitions, st.integers(1, 5))
def test_removal_then_addition_round_trip(lam, q):
    for mu, height in q_hook_removals(lam, q):
        assert (lam, height) in q_hook_additions(mu, q)
    for nu, height in q_hook_additions(lam, q):
        assert size(nu) == size(lam) + q
        assert (lam, height) in q_hook_removals(nu, q)


@given(partitions, st.integers(1, 5))
def test_listed_hooks_match_beta_removals(lam, q):
    hooks = list_q_hooks(lam, q)
    removals = q_hook_removals(lam, q)
    assert len(hooks) == len(removals)
    for hook in hooks:
        assert hook.length == q
        mu = remove_hook(lam, hook)
        assert (mu, hook.height) in removals


def test_core_matches_iterated_removal():
    def slow_core(lam, q):
        while True:
            removals = q_hook_removals(lam, q)
            if not removals:
                return lam
            lam = removals[0][0]

    for lam in partitions_of(7):
        for q in (2, 3, 4):
            assert q_core(lam, q) == slow_core(lam, q)


@given(partitions, st.integers(2, 4))
def test_core_quotient_round_trip(lam, q):
    core = q_core(lam, q)
    quot = q_quotient(lam, q)
    assert size(core) + q * sum(size(c) for c in quot) == size(lam)
    assert from_core_and_quotient(core, quot, q) == lam


def test_hook_shapes():
    assert hook_shape(0, 3) == (8,)
    assert hook_shape(3, 3) == (5, 1, 1, 1)
    assert hook_shape(7, 3) == (1,) * 8
    with pytest.raises(ValueError):
        hook_shape(8, 3)


def test_double_hook_shapes_are_the_two_hook_partitions():
    for k in (2, 3, 4):
        n, half = 2**k, 2 ** (k - 1)
        shapes = {
            double_hook_shape(a, b, k)
            for a in range(half)
            for b in range(a + 1, half)
        }
        assert len(shapes) == half * (half - 1) // 2
        two_hook = {
            lam for lam in partitions_of(n) if len(q_hook_removals(lam, half)) == 2
        }
        assert shapes == two_hook


def test_parse_format_round_trip():
    assert parse_partition("4,3,1") == (4, 3, 1)
    assert parse_partition("[4, 3, 1]") == (4, 3, 1)
    assert parse_partition("") == ()
    assert format_partition((4, 3, 1)) == "4,3,1"
    assert format_partition(()) == "-"
    with pytest.raises(ValueError):
        parse_partition("4,x")
    with pytest.raises(ValueError):
        parse_partition("1,3")
