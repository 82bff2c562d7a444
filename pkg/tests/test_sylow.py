import math
import random

from pickychar.characters import irr_p_prime
from pickychar.perms import PermGroup, Permutation, closure
from pickychar.sylow import (
    PickyType,
    all_block_structures,
    all_sylow_subgroups,
    canonical_block_structure,
    canonical_element_of_type,
    classify_picky,
    count_block_structures,
    invariant_block_structures,
    irr_pprime_count_normalizer,
    is_picky_oracle,
    no_fixed_point_witness,
    normalizer_shape,
    p_adic_type,
    p_element_types,
    sylow_generators,
    three_fixed_type,
    two_fixed_type,
)
from pickychar.towers import nu_p


def test_candidate_types():
    assert p_adic_type(11, 2) == (8, 2, 1)
    assert p_adic_type(12, 3) == (9, 3)
    assert two_fixed_type(12) == (8, 2, 1, 1)
    assert three_fixed_type(12) == (9, 1, 1, 1)
    assert three_fixed_type(6) == (3, 1, 1, 1)


def test_classify_picky():
    assert classify_picky((8, 2, 1), 2) == PickyType.P_ADIC
    assert classify_picky((8, 2, 1, 1), 2) == PickyType.TWO_FIXED
    assert classify_picky((2, 1, 1), 2) == PickyType.TWO_FIXED
    assert classify_picky((8, 4), 2) == PickyType.P_ADIC
    assert classify_picky((4, 4), 2) == PickyType.NOT_PICKY
    assert classify_picky((9, 3), 3) == PickyType.P_ADIC
    assert classify_picky((9, 1, 1, 1), 3) == PickyType.THREE_FIXED
    # three fixed points only occur for n = +-3 mod 9
    assert classify_picky((3, 3, 1, 1, 1), 3) == PickyType.NOT_PICKY
    assert classify_picky((5, 1, 1), 5) == PickyType.P_ADIC


def test_block_structure_count_is_sylow_count():
    # for p = 2 nested block structures biject with Sylow 2-subgroups
    for n in range(2, 9):
        expected = math.factorial(n) // 2 ** sum(
            n // 2**i for i in range(1, n.bit_length() + 1)
        )
        assert count_block_structures(n, 2) == expected
        assert len(list(all_block_structures(n, 2))) == expected


def test_sylow_generators_generate_a_sylow():
    for n, p in [(4, 2), (6, 2), (8, 2), (6, 3), (9, 3)]:
        structure = canonical_block_structure(n, p)
        gens = sylow_generators(structure, n, p)
        order = PermGroup(gens, n).order()
        assert order == p ** nu_p(math.factorial(n), p)


def test_all_sylow_subgroups_count():
    for n, p in [(4, 2), (5, 2), (6, 3), (7, 3)]:
        sylows = all_sylow_subgroups(n, p)
        structure = canonical_block_structure(n, p)
        order = PermGroup(sylow_generators(structure, n, p), n).order()
        # the number of Sylow subgroups divides the index and is = 1 mod p
        assert len(sylows) % p == 1
        assert (math.factorial(n) // order) % len(sylows) == 0


def test_picky_iff_unique_invariant_structure():
    for n in range(1, 8):
        for p in (2, 3, 5):
            for ctype in p_element_types(n, p):
                x = canonical_element_of_type(ctype, degree=n)
                claimed = classify_picky(ctype, p) != PickyType.NOT_PICKY
                assert is_picky_oracle(x, p) == claimed


def test_pickiness_is_a_class_property():
    rng = random.Random(7)
    for ctype, p in [((4, 2, 1, 1), 2), ((4, 2, 1), 2), ((3, 3), 3), ((4, 4), 2)]:
        n = sum(ctype)
        x = canonical_element_of_type(ctype, degree=n)
        base = is_picky_oracle(x, 2 if p == 2 else p)
        for _ in range(3):
            g = Permutation(rng.sample(range(1, n + 1), n))
            assert is_picky_oracle(g * x * g.inverse(), p) == base


def test_invariant_structures_for_two_fixed_element():
    x = canonical_element_of_type((4, 2, 1, 1), degree=8)
    assert len(invariant_block_structures(x, 2)) == 1
    y = canonical_element_of_type((4, 4), degree=8)
    assert len(invariant_block_structures(y, 2)) > 1


def test_no_fixed_point_witness():
    # every fixed-point-free 2-element of a 2-power degree admits an invariant
    # structure whose top halves it swaps
    for ctype in [(8,), (4, 4), (4, 2, 2), (2, 2, 2, 2)]:
        x = canonical_element_of_type(ctype, degree=8)
        structure, half1, half2 = no_fixed_point_witness(x)
        assert {x(pt) for pt in half1} == set(half2)
    rng = random.Random(3)
    types16 = [t for t in p_element_types(16, 2) if 1 not in t]
    for ctype in rng.sample(types16, 3):
        x = canonical_element_of_type(ctype, degree=16)
        structure, half1, half2 = no_fixed_point_witness(x)
        assert {x(pt) for pt in half1} == set(half2)


def test_normalizer_shape_orders():
    # |N_{S_n}(P)| for p = 2 equals |P|; for odd p check against brute force
    for n in (4, 6, 8):
        assert normalizer_shape(n, 2).order() == 2 ** nu_p(math.factorial(n), 2)
    for n, p in [(3, 3), (5, 5), (6, 3), (5, 3)]:
        structure = canonical_block_structure(n, p)
        sylow = closure(sylow_generators(structure, n, p), n)
        normalizer = [
            g
            for g in closure(
                [Permutation.from_cycles([(i, i + 1)], n) for i in range(1, n)], n
            )
            if {g * s * g.inverse() for s in sylow} == sylow
        ]
        assert normalizer_shape(n, p).order() == len(normalizer)


def test_normalizer_odd_degree_count_matches_global():
    # the local count formula agrees with |Irr_{p'}(S_n)|
    for n in range(1, 11):
        for p in (2, 3, 5):
            assert irr_pprime_count_normalizer(n, p) == len(irr_p_prime(n, p))
