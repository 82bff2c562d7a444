import itertools

import pytest

from pickychar.localchars import (
    BaseChar,
    CyclotomicInt,
    ExtChar,
    PairChar,
    canonical_two_adic_perm,
    canonical_two_fixed_perm,
    eval_local,
    full_cycle_on,
    irr_local,
    irr_x_local,
    linear_count,
    parse_label,
    phi_value_general,
    phi_value_small,
)
from pickychar.perms import PermGroup, Permutation, closure


def test_cyclotomic_integer_arithmetic():
    one = CyclotomicInt.integer(1, 3, 1)
    z = CyclotomicInt.root(3, 1)
    # 1 + z + z^2 = 0 for a primitive cube root
    assert (one + z + z * z).is_integer()
    assert (one + z + z * z).as_int() == 0
    assert (z * z * z).as_int() == 1
    # norm of 1 - z in Z[zeta_3] is 3
    w = one - z
    assert (w * w.conjugate()).as_int() == 3
    i = CyclotomicInt.root(2, 2)  # fourth root of unity
    assert (i * i).as_int() == -1
    assert not i.is_integer()
    assert CyclotomicInt.integer(5).as_int() == 5


def test_character_counts_and_completeness():
    expected_counts = [1, 2, 5, 20, 230]
    for k, count in enumerate(expected_counts):
        chars = irr_local(k)
        assert len(chars) == count
        assert len({c.label for c in chars}) == count
        assert sum(c.degree**2 for c in chars) == 2 ** (2**k - 1)
        assert linear_count(chars) == 2**k


def test_degree_sets():
    # largest degree is 2^(2^(k-2) + 2^(k-3) - 1); all 2-powers below occur
    for k in (3, 4):
        degrees = sorted({c.degree for c in irr_local(k)})
        assert degrees == [2**j for j in range(2 ** (k - 2) + 2 ** (k - 3))]


def test_full_tower_group_orthogonality_k3():
    chars = irr_local(3)
    points = tuple(range(1, 9))
    gens = [
        Permutation.from_cycles([(1, 2)], 8),
        Permutation.from_cycles([(1, 3), (2, 4)], 8),
        Permutation.from_cycles([(1, 5), (2, 6), (3, 7), (4, 8)], 8),
    ]
    group = sorted(closure(gens, 8), key=lambda g: g.images)
    assert len(group) == 128
    for a, b in itertools.combinations_with_replacement(chars, 2):
        total = sum(a.value_on(g, points) * b.value_on(g, points) for g in group)
        assert total == (128 if a is b else 0)


def test_extension_and_pair_values():
    # the two extensions differ exactly on the swapping coset
    phi = ExtChar(BaseChar(), 1)
    plus = ExtChar(phi, 1)
    minus = ExtChar(phi, -1)
    pair = PairChar(ExtChar(BaseChar(), 1), ExtChar(BaseChar(), -1))
    points = (1, 2, 3, 4)
    swap = Permutation.from_cycles([(1, 3), (2, 4)], 4)
    stay = Permutation.from_cycles([(1, 2)], 4)
    assert plus.value_on(swap, points) == -minus.value_on(swap, points)
    assert plus.value_on(stay, points) == minus.value_on(stay, points)
    assert pair.value_on(swap, points) == 0
    assert pair.degree == 2


def test_parse_label_round_trip_and_aliases():
    for c in irr_local(3):
        assert parse_label(c.label).label == c.label
    # the alias grammar: b1 is the sign character of a 2-point block
    char = parse_label("(ext (pair b0 b1) -1)")
    assert char.degree == 4
    g = Permutation.from_cycles([(1, 5), (2, 6), (3, 7), (4, 8)], 8)
    assert eval_local(char, g).as_int() == -2
    with pytest.raises(ValueError):
        parse_label("(ext b0")
    with pytest.raises(ValueError):
        parse_label("(frob b0 b0)")


def test_canonical_elements_lie_in_the_tower_group():
    assert canonical_two_adic_perm(8).images == (5, 6, 7, 8, 3, 4, 2, 1)
    x = canonical_two_adic_perm(8)
    assert x.cycle_type() == (8,)
    y = canonical_two_fixed_perm(3)
    assert y.cycle_type() == (4, 2, 1, 1)
    gens = [
        Permutation.from_cycles([(1, 2)], 8),
        Permutation.from_cycles([(1, 3), (2, 4)], 8),
        Permutation.from_cycles([(1, 5), (2, 6), (3, 7), (4, 8)], 8),
    ]
    tower = PermGroup(gens, 8)
    assert x in tower
    assert y in tower
    mapping = full_cycle_on((1, 2, 3, 4))
    assert Permutation.from_mapping(mapping, 4).cycle_type() == (4,)


def test_nonvanishing_labels_at_canonical_elements():
    # full cycle: exactly the 2^k linear labels, all +-1
    x = canonical_two_adic_perm(8)
    vals = {c.value_on(x) for c in irr_x_local(8, x)}
    assert len(irr_x_local(8, x)) == 8
    assert vals <= {1, -1}
    # two-fixed element of S_8: 8 linear labels plus two of degree 2, +-2
    y = canonical_two_fixed_perm(3)
    chars = irr_x_local(8, y)
    assert len(chars) == 10
    assert sorted(abs(c.value_on(y)) for c in chars) == [1] * 8 + [2, 2]
    # identity: every label
    assert len(irr_x_local(8, Permutation.identity(8))) == 20


def test_phi_values():
    from pickychar.characters import mn_value
    from pickychar.sylow import p_adic_type
    from pickychar.towers import build_tower
    from pickychar.characters import irr_p_prime

    assert phi_value_small(3, 2, 0, [(2,)]) == 1
    assert phi_value_small(3, 2, 1, [(1,), (1,), ()]) == 2
    for n, p in [(7, 3), (8, 3), (6, 5), (9, 5)]:
        ctype = p_adic_type(n, p)
        for lam in irr_p_prime(n, p):
            mag = phi_value_general(p, n, build_tower(lam, p))
            assert mag == abs(mn_value(lam, ctype))
    with pytest.raises(ValueError):
        phi_value_general(3, 6, build_tower((4, 2), 3))
