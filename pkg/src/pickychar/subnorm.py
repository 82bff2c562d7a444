"""Subnormalizers of 2-elements of S_n: structural shapes and a brute-force oracle.

The subnormalizer Sub_G(x) is the subgroup generated by the normalizers of all
Sylow subgroups containing x. For 2-elements of symmetric groups it decomposes
into direct products of symmetric groups, Sylow 2-towers and wreath squares.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .perms import PermGroup, Permutation
from .sylow import (
    all_sylow_subgroups,
    is_invariant,
    structures_with_generators,
)


# --- shapes -------------------------------------------------------------------


class SubShape:
    """Symbolic subnormalizer: atoms carry the point tuples they act on."""

    def order(self):
        raise NotImplementedError

    def support(self):
        raise NotImplementedError

    def atoms(self):
        return [self]


class FullSym(SubShape):
    def __init__(self, points):
        self.points = tuple(points)

    def order(self):
        return math.factorial(len(self.points))

    def support(self):
        return self.points

    def __repr__(self):
        return f"FullSym({len(self.points)})"


class Syl2Tower(SubShape):
    """Sylow 2-subgroup of the symmetric group on a 2-power point tuple,
    realized as the stabilizer of the nested interval halving of the tuple."""

    def __init__(self, points):
        points = tuple(points)
        if len(points) & (len(points) - 1):
            raise ValueError("point count must be a power of two")
        self.points = points

    def order(self):
        return 2 ** (len(self.points) - 1)

    def support(self):
        return self.points

    def __repr__(self):
        return f"Syl2Tower({len(self.points)})"


class WreathS2(SubShape):
    """inner wr S_2: two aligned copies of the inner group plus the swap.

    The mirror points carry the transported copy; positionally aligned with
    the inner support.
    """

    def __init__(self, inner, mirror):
        mirror = tuple(mirror)
        if len(mirror) != len(inner.support()):
            raise ValueError("mirror size must match the inner support")
        self.inner = inner
        self.mirror = mirror

    def order(self):
        return 2 * self.inner.order() ** 2

    def support(self):
        return self.mirror + self.inner.support()

    def atoms(self):
        return [self]

    def __repr__(self):
        return f"WreathS2({self.inner!r})"


class Product(SubShape):
    def __init__(self, factors):
        flat = []
        for f in factors:
            if isinstance(f, Product):
                flat.extend(f.factors)
            else:
                flat.append(f)
        self.factors = tuple(flat)

    def order(self):
        result = 1
        for f in self.factors:
            result *= f.order()
        return result

    def support(self):
        return tuple(pt for f in self.factors for pt in f.support())

    def atoms(self):
        return [a for f in self.factors for a in f.atoms()]

    def __repr__(self):
        return "Product(" + ", ".join(map(repr, self.factors)) + ")"


def _bit_reversed(points):
    """Reorder a 2-power tuple so congruence blocks become interval blocks."""
    m = len(points)
    k = m.bit_length() - 1
    out = [None] * m
    for i in range(m):
        rev = int(format(i, f"0{k}b")[::-1], 2) if k else 0
        out[i] = points[rev]
    return tuple(out)


def tower_points_for_cycle(x, pts):
    """Point order making the interval halving invariant under the cycle x."""
    pts = tuple(pts)
    start = min(pts)
    cyc = [start]
    pt = x(start)
    while pt != start:
        cyc.append(pt)
        pt = x(pt)
    if len(cyc) != len(pts) or set(cyc) != set(pts):
        raise ValueError("x is not a single cycle on the given points")
    return _bit_reversed(tuple(cyc))


def _cycles_within(x, pts):
    seen = set()
    cycles = []
    for start in sorted(pts):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        pt = x(start)
        while pt != start:
            cyc.append(pt)
            seen.add(pt)
            pt = x(pt)
        cycles.append(tuple(cyc))
    return cycles


@lru_cache(maxsize=None)
def _small_power_order(ctype):
    """Brute-force subnormalizer order for 2-elements of S_n, n in {1,2,4}.

    The structural recursion starts at n = 8; these base cases are generated,
    never hand-entered.
    """
    n = sum(ctype)
    from .sylow import canonical_element_of_type

    return sub_bruteforce(canonical_element_of_type(ctype), 2).order()


def sub_shape_2(x, split_policy="min"):
    """Structural subnormalizer of a 2-element of S_n.

    split_policy chooses which valid product split is applied first ("min" or
    "max"); the resulting order and atom multiset do not depend on it (tested).
    """
    if x.order() & (x.order() - 1):
        raise ValueError("x must be a 2-element")
    return _shape(x, tuple(range(1, x.degree + 1)), split_policy)


def _shape(x, pts, policy):
    n = len(pts)
    cycles = _cycles_within(x, pts)
    if n == 1:
        return FullSym(pts)
    if n & (n - 1) == 0:
        k = n.bit_length() - 1
        longest = max(len(c) for c in cycles)
        fix = sum(1 for c in cycles if len(c) == 1)
        if longest == n:
            return Syl2Tower(tower_points_for_cycle(x, pts))
        if n <= 4:
            # base cases: trust the generated brute-force order, then shape it
            ctype = tuple(sorted((len(c) for c in cycles), reverse=True))
            brute = _small_power_order(ctype)
            if brute == math.factorial(n):
                return FullSym(tuple(sorted(pts)))
            shape = _wreath_shape(x, pts, policy)
            if shape.order() != brute:
                raise AssertionError("base-case shape disagrees with brute force")
            return shape
        if k >= 2 and longest == n // 2 and fix > 0:
            return _wreath_shape(x, pts, policy)
        return FullSym(tuple(sorted(pts)))
    # product splits on non-2-power supports
    split = _valid_splits(cycles)
    if not split:
        return FullSym(tuple(sorted(pts)))
    t = split[0] if policy == "min" else split[-1]
    lengths = sorted({len(c) for c in cycles})
    long_cycles = [c for c in cycles if len(c) >= lengths[t]]
    short_cycles = [c for c in cycles if len(c) < lengths[t]]
    long_pts = tuple(sorted(pt for c in long_cycles for pt in c))
    short_pts = tuple(sorted(pt for c in short_cycles for pt in c))
    return Product(
        [_shape(x, long_pts, policy), _shape(x, short_pts, policy)]
    )


def _wreath_shape(x, pts, policy):
    """Case: one cycle of length n/2 plus shorter cycles on a 2-power block."""
    cycles = _cycles_within(x, pts)
    n = len(pts)
    long = [c for c in cycles if len(c) == n // 2]
    if len(long) != 1:
        raise AssertionError("expected a unique cycle of half length")
    mirror = tower_points_for_cycle(x, long[0]) if len(long[0]) > 1 else tuple(long[0])
    rest = tuple(sorted(pt for c in cycles if len(c) < n // 2 for pt in c))
    inner = _shape(x, rest, policy)
    return WreathS2(inner, mirror)


def _valid_splits(cycles):
    """Indices t with 2^{m_t} greater than the total size of all shorter cycles."""
    lengths = sorted({len(c) for c in cycles})
    counts = {m: sum(1 for c in cycles if len(c) == m) for m in lengths}
    valid = []
    for t in range(1, len(lengths)):
        below = sum(m * counts[m] for m in lengths[:t])
        if lengths[t] > below:
            valid.append(t)
    return valid


# --- brute force --------------------------------------------------------------


def sub_bruteforce(x, p):
    """Subgroup generated by the normalizers of all Sylow p-subgroups containing x.

    p = 2 (n <= 10): N(P) = P, so the generators are the Sylow generators of
    every x-invariant block structure. Odd p (n <= 7): Sylows are enumerated
    explicitly and their normalizers found by scanning S_n.
    """
    n = x.degree
    if p == 2:
        if n > 10:
            raise ValueError("brute-force bound is n <= 10 for p = 2")
        gens = []
        for structure, block_gens in structures_with_generators(n, 2):
            if is_invariant(x, structure):
                gens.extend(block_gens)
        if not gens and n > 1:
            # identity-like edge: every structure is invariant, handled above;
            # n = 1 or no blocks means the trivial group
            pass
        return PermGroup(gens, n)
    if n > 7:
        raise ValueError("brute-force bound is n <= 7 for odd p")
    sylows = [syl for syl in all_sylow_subgroups(n, p) if x.images in syl]
    gens = []
    for syl in sylows:
        gens.extend(_normalizer_elements(syl, n))
    return PermGroup(gens, n)


@lru_cache(maxsize=None)
def _normalizer_scan_cache(n):
    return list(itertools.permutations(range(1, n + 1)))


def _normalizer_elements(sylow, n):
    """All g in S_n with g P g^{-1} = P, for P given as a frozenset of images."""
    members = [Permutation(img) for img in sylow]
    out = []
    for images in _normalizer_scan_cache(n):
        g = Permutation(images)
        ginv = g.inverse()
        if all((g * q * ginv).images in sylow for q in members):
            out.append(g)
    return out


def group_order(group):
    return group.order()


def contains(group, g):
    return g in group


def sub_product_lower_bound_check(x, y):
    """Sub(x) x Sub(y) (computed on the two supports) embeds in Sub(xy)."""
    n = x.degree
    if y.degree != n:
        raise ValueError("x and y must live in the same symmetric group")
    if x.support() & y.support():
        raise ValueError("supports must be disjoint")
    pts_x = sorted(x.support()) or [1]
    pts_y = sorted(set(range(1, n + 1)) - set(pts_x))
    big = sub_bruteforce(x * y, 2)
    for pts, elem in ((pts_x, x), (pts_y, y)):
        gens = _sub_on_points(elem, pts)
        for g in gens:
            if g not in big:
                return False
    return True


def _sub_on_points(x, pts):
    """Generators of the subnormalizer of x inside Sym(pts), mapped back to S_n."""
    relabel = {pt: i for i, pt in enumerate(sorted(pts), start=1)}
    back = {i: pt for pt, i in relabel.items()}
    small = Permutation(
        [relabel[x(back[i])] for i in range(1, len(pts) + 1)]
    )
    group = sub_bruteforce(small, 2)
    out = []
    for g in group.generators:
        mapping = {back[i]: back[g(i)] for i in range(1, len(pts) + 1)}
        out.append(Permutation.from_mapping(mapping, x.degree))
    return out
