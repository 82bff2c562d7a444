import math

from pickychar.characters import (
    centralizer_order,
    char_column,
    degree,
    irr_p_prime,
    irr_x,
    mn_value,
)
from pickychar.partitions import conjugate, partitions_of


def test_degree_values():
    assert degree((4, 3, 1)) == 70
    assert degree(()) == 1
    assert degree((5,)) == 1
    assert degree((1, 1, 1, 1)) == 1
    assert degree((2, 1)) == 2
    assert degree((3, 2)) == 5


def test_degree_squares_sum_to_group_order():
    for n in range(1, 8):
        assert sum(degree(lam) ** 2 for lam in partitions_of(n)) == math.factorial(n)


def test_s4_character_table():
    # full table of S_4, classes in the order 1^4, 2 1^2, 2^2, 3 1, 4
    classes = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    table = {
        (4,): [1, 1, 1, 1, 1],
        (3, 1): [3, 1, -1, 0, -1],
        (2, 2): [2, 0, 2, -1, 0],
        (2, 1, 1): [3, -1, -1, 0, 1],
        (1, 1, 1, 1): [1, -1, 1, 1, -1],
    }
    for lam, row in table.items():
        assert [mn_value(lam, c) for c in classes] == row


def test_sign_twist_and_order_independence():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for ctype in partitions_of(n):
                v = mn_value(lam, ctype)
                assert mn_value(lam, ctype, largest_first=False) == v
                sign = (-1) ** (n - len(ctype))
                assert mn_value(conjugate(lam), ctype) == sign * v


def test_centralizer_order():
    assert centralizer_order((1, 1, 1, 1)) == 24
    assert centralizer_order((2, 1, 1)) == 4
    assert centralizer_order((4, 2, 1, 1)) == 16
    assert centralizer_order((3, 3)) == 18


def test_column_orthogonality_small():
    for n in range(1, 8):
        for ctype in partitions_of(n):
            col = char_column(n, ctype)
            assert sum(v * v for v in col.values()) == centralizer_order(ctype)


def test_two_distinct_columns_are_orthogonal():
    for a, b in [((2, 1, 1), (4,)), ((2, 2), (3, 1)), ((1, 1, 1, 1), (2, 2))]:
        ca, cb = char_column(4, a), char_column(4, b)
        assert sum(ca[lam] * cb[lam] for lam in ca) == 0


def test_irr_x_and_odd_degree_sets():
    assert set(irr_x(4, (1, 1, 1, 1))) == set(partitions_of(4))
    assert set(irr_p_prime(4, 2)) == {(4,), (3, 1), (2, 1, 1), (1, 1, 1, 1)}
    # |Irr_{2'}(S_n)| = product of 2^i over the set binary digits of n
    for n in range(1, 13):
        expected = 1
        for i, d in enumerate(bin(n)[:1:-1]):
            if d == "1":
                expected *= 2**i
        assert len(irr_p_prime(n, 2)) == expected


def test_char_column_cache(tmp_path):
    col = char_column(6, (4, 2), cache_dir=str(tmp_path))
    again = char_column(6, (4, 2), cache_dir=str(tmp_path))
    assert col == again
    assert any(tmp_path.iterdir())
