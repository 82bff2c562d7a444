import math
import random

import pytest

from pickychar.perms import Permutation
from pickychar.subnorm import (
    FullSym,
    Product,
    Syl2Tower,
    WreathS2,
    sub_bruteforce,
    sub_product_lower_bound_check,
    sub_shape_2,
)
from pickychar.sylow import (
    PickyType,
    canonical_element_of_type,
    classify_picky,
    p_element_types,
)
from pickychar.towers import nu_p


def test_shape_examples():
    # identity: the whole symmetric group
    assert isinstance(sub_shape_2(Permutation.identity(5)), FullSym)
    assert sub_shape_2(Permutation.identity(5)).order() == 120
    # full 2-power cycle: the iterated wreath tower
    x8 = Permutation.from_cycles([tuple(range(1, 9))], 8)
    shape = sub_shape_2(x8)
    assert isinstance(shape, Syl2Tower)
    assert shape.order() == 128
    # two-fixed-point picky element of S_8: wreath shape of the same order
    y = canonical_element_of_type((4, 2, 1, 1), degree=8)
    wshape = sub_shape_2(y)
    assert isinstance(wshape, WreathS2)
    assert wshape.order() == 128
    # 2-adic element of S_6 = (4,2): product of two towers
    z = canonical_element_of_type((4, 2), degree=6)
    pshape = sub_shape_2(z)
    assert isinstance(pshape, Product)
    assert pshape.order() == 8 * 2


def test_support_partitions_the_points():
    for ctype in [(8,), (4, 2, 1, 1), (4, 4), (2, 2, 1, 1, 1, 1), (4, 2, 2)]:
        n = sum(ctype)
        x = canonical_element_of_type(ctype, degree=n)
        shape = sub_shape_2(x)
        assert sorted(shape.support()) == list(range(1, n + 1))


def test_split_policy_independence():
    for ctype in [(4, 2), (8, 2, 1), (4, 2, 1, 1), (8, 4, 2)]:
        n = sum(ctype)
        x = canonical_element_of_type(ctype, degree=n)
        assert sub_shape_2(x, "min").order() == sub_shape_2(x, "max").order()


def test_shape_matches_bruteforce_sampled():
    rng = random.Random(11)
    for n in range(4, 8):
        for ctype in p_element_types(n, 2):
            g = Permutation(rng.sample(range(1, n + 1), n))
            x = g * canonical_element_of_type(ctype, degree=n) * g.inverse()
            assert sub_shape_2(x).order() == sub_bruteforce(x, 2).order()


def test_picky_iff_subnormalizer_is_a_sylow():
    for n in range(1, 11):
        sylow_order = 2 ** nu_p(math.factorial(n), 2)
        for ctype in p_element_types(n, 2):
            x = canonical_element_of_type(ctype, degree=n)
            picky = classify_picky(ctype, 2) != PickyType.NOT_PICKY
            assert (sub_shape_2(x).order() == sylow_order) == picky


def test_product_lower_bound():
    # disjoint 2-cycle and 4-cycle in S_6
    x = Permutation.from_cycles([(1, 2)], 6)
    y = Permutation.from_cycles([(3, 4, 5, 6)], 6)
    assert sub_product_lower_bound_check(x, y)


def test_odd_p_bruteforce_matches_normalizer_for_p_adic():
    # for a p-adic element the subnormalizer is the Sylow normalizer
    from pickychar.sylow import normalizer_shape, p_adic_type

    for n, p in [(3, 3), (4, 3), (5, 5), (6, 3)]:
        x = canonical_element_of_type(p_adic_type(n, p), degree=n)
        assert sub_bruteforce(x, p).order() == normalizer_shape(n, p).order()


def test_bruteforce_bounds():
    with pytest.raises(ValueError):
        sub_bruteforce(Permutation.identity(11), 2)
    with pytest.raises(ValueError):
        sub_bruteforce(Permutation.identity(8), 3)
