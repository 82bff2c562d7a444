"""Sylow p-subgroups of symmetric groups as nested block structures.

A block structure on a set of points is the system of blocks stabilized by a
Sylow p-subgroup: for each p-power block of the partition of n into p-adic
digit blocks, a full nested tree of sub-blocks of sizes p, p^2, ..., including
the digit block itself. Structures are frozensets of frozensets of points.
"""

from __future__ import annotations

import enum
import math
from functools import lru_cache

from .partitions import partitions_of
from .perms import Permutation
from .towers import nu_p, p_adic_digits


class PickyType(enum.Enum):
    P_ADIC = "p-adic"
    TWO_FIXED = "p-adic plus two fixed points"
    THREE_FIXED = "p-adic plus three fixed points"
    NOT_PICKY = "not picky"


# --- canonical cycle types of candidate picky elements -----------------------


def p_adic_type(n, p):
    """Cycle type with a_i cycles of length p^i, n = sum a_i p^i."""
    digits = p_adic_digits(n, p)
    parts = []
    for i in range(len(digits) - 1, -1, -1):
        parts.extend([p**i] * digits[i])
    return tuple(parts)


def two_fixed_type(n):
    """p = 2 only: 2-adic type of n - 2 followed by two fixed points."""
    if n < 2 or n % 2:
        raise ValueError("defined for even n >= 2")
    return p_adic_type(n - 2, 2) + (1, 1)


def three_fixed_type(n):
    """p = 3 only: 3-adic type of n - 3 followed by three fixed points."""
    if n < 3 or n % 9 not in (3, 6):
        raise ValueError("defined for n = 3 or 6 mod 9")
    return p_adic_type(n - 3, 3) + (1, 1, 1)


def classify_picky(ctype, p):
    """Which picky family (if any) the cycle type belongs to.

    Every part must be a power of p; raises otherwise.
    """
    n = sum(ctype)
    ctype = tuple(sorted(ctype, reverse=True))
    for c in ctype:
        reduced = c
        while reduced % p == 0:
            reduced //= p
        if reduced != 1:
            raise ValueError(f"cycle length {c} is not a power of {p}")
    if ctype == p_adic_type(n, p):
        return PickyType.P_ADIC
    if p == 2 and n >= 2 and n % 2 == 0 and ctype == two_fixed_type(n):
        return PickyType.TWO_FIXED
    if p == 3 and n % 9 in (3, 6) and ctype == three_fixed_type(n):
        return PickyType.THREE_FIXED
    return PickyType.NOT_PICKY


def canonical_element_of_type(ctype, degree=None):
    """Permutation with the given cycle type, cycles on consecutive points."""
    degree = degree if degree is not None else sum(ctype)
    if sum(ctype) > degree:
        raise ValueError("cycle type does not fit in the degree")
    cycles = []
    next_pt = 1
    for length in ctype:
        cycles.append(range(next_pt, next_pt + length))
        next_pt += length
    return Permutation.from_cycles(cycles, degree)


# --- block structures --------------------------------------------------------


def digit_blocks(n, p, points=None):
    """The partition of the points into p-adic digit blocks, largest first."""
    points = tuple(points) if points is not None else tuple(range(1, n + 1))
    if len(points) != n:
        raise ValueError("need exactly n points")
    digits = p_adic_digits(n, p)
    out = []
    pos = 0
    for i in range(len(digits) - 1, -1, -1):
        for _ in range(digits[i]):
            out.append((i, points[pos : pos + p**i]))
            pos += p**i
    return out


def _nested_trees(points, p):
    """All full nested p-block systems on a p-power point tuple.

    Yields frozensets of blocks of sizes p, p^2, ..., len(points).
    """
    points = tuple(points)
    n = len(points)
    if n == 1:
        yield frozenset()
        return
    whole = frozenset(points)
    first = points[0]
    rest = points[1:]
    m = n // p
    # choose the p top-level sub-blocks (unordered; pin the first point)
    for combo in _combinations(rest, m - 1):
        block0 = (first,) + combo
        remaining = tuple(x for x in rest if x not in set(combo))
        for split in _split_into_blocks(remaining, m, p - 1):
            for trees in _tree_product([block0] + split, p):
                yield frozenset({whole}) | trees


def _combinations(points, k):
    from itertools import combinations

    return combinations(points, k)


def _split_into_blocks(points, m, count):
    """Unordered partitions of `points` into `count` blocks of size m."""
    if count == 0:
        yield []
        return
    first = points[0]
    rest = points[1:]
    for combo in _combinations(rest, m - 1):
        block = (first,) + combo
        remaining = tuple(x for x in rest if x not in set(combo))
        for more in _split_into_blocks(remaining, m, count - 1):
            yield [block] + more


def _tree_product(blocks, p):
    if not blocks:
        yield frozenset()
        return
    head, tail = blocks[0], blocks[1:]
    for tree in _nested_trees(head, p):
        for rest in _tree_product(tail, p):
            yield tree | rest


def all_block_structures(n, p, points=None):
    """Every block structure on n points; for p = 2, one per Sylow 2-subgroup."""
    points = tuple(points) if points is not None else tuple(range(1, n + 1))
    digits = p_adic_digits(n, p)
    classes = [
        (p**i, digits[i]) for i in range(len(digits) - 1, 0, -1) if digits[i]
    ]

    def assign(pool, remaining_classes):
        if not remaining_classes:
            yield []
            return
        (m, count), *rest = remaining_classes
        for chosen in _combinations(pool, m * count):
            leftover = tuple(pt for pt in pool if pt not in set(chosen))
            for split in _split_into_blocks(tuple(chosen), m, count):
                for more in assign(leftover, rest):
                    yield split + more

    for arrangement in assign(tuple(sorted(points)), classes):
        for trees in _tree_product(arrangement, p):
            yield trees


def count_block_structures(n, p):
    """Number of Sylow p-subgroups of S_n, i.e. n! / |N(P)|."""
    return math.factorial(n) // normalizer_shape(n, p).order()


@lru_cache(maxsize=None)
def structures_with_generators(n, p=2):
    """All p=2 block structures of S_n with generators of their Sylow stabilizers.

    Returns a tuple of (structure, generators) pairs; cached since criterion
    sweeps revisit the same n many times. For p = 2 the map structure -> Sylow
    is a bijection; for odd p it is not (the Sylow carries extra alignment
    data), so odd p goes through all_sylow_subgroups instead.
    """
    if p != 2:
        raise ValueError("structure enumeration is the Sylow oracle only for p=2")
    out = []
    for structure in all_block_structures(n, p):
        out.append((structure, tuple(sylow_generators(structure, n, p))))
    return tuple(out)


@lru_cache(maxsize=None)
def all_sylow_subgroups(n, p):
    """Every Sylow p-subgroup of S_n as a frozenset of permutation image tuples.

    Enumerated as the conjugation closure of the canonical Sylow under the
    transpositions (i, i+1); intended for small n (bounded by |Syl| * |P|).
    """
    from .perms import closure

    gens = sylow_generators(canonical_block_structure(n, p), n, p)
    base = closure(gens, n) if gens else {Permutation.identity(n)}
    expected = p ** nu_p(math.factorial(n), p) if math.factorial(n) % p == 0 else 1
    if len(base) != expected:
        raise AssertionError("canonical generators do not close to a full Sylow")
    canonical = frozenset(g.images for g in base)
    transpositions = [
        tuple(Permutation.from_cycles([(i, i + 1)], n).images) for i in range(1, n)
    ]
    seen = {canonical}
    frontier = [canonical]
    while frontier:
        nxt = []
        for syl in frontier:
            for t in transpositions:
                # transpositions are involutions: conj = t o q o t
                conj = frozenset(
                    tuple(t[q[t[i] - 1] - 1] for i in range(n)) for q in syl
                )
                if conj not in seen:
                    seen.add(conj)
                    nxt.append(conj)
        frontier = nxt
    if len(seen) != count_block_structures(n, p):
        raise AssertionError("Sylow enumeration does not match the index formula")
    return tuple(sorted(seen, key=sorted))


def is_invariant(x, structure):
    return all(frozenset(x(pt) for pt in block) in structure for block in structure)


def invariant_block_structures(x, p, structures=None):
    """Structures fixed by x: for p = 2 the nested block structures with
    x(B) = B; for odd p the Sylow p-subgroups containing x (each standing in
    for its oriented block structure). Either way, count == 1 iff x is picky.
    """
    n = x.degree
    if p == 2:
        if structures is None:
            structures = [s for s, _ in structures_with_generators(n, p)]
        return [s for s in structures if is_invariant(x, s)]
    return [syl for syl in all_sylow_subgroups(n, p) if x.images in syl]


def is_picky_oracle(x, p):
    """True when x lies in exactly one Sylow p-subgroup."""
    n = x.degree
    found = 0
    if p == 2:
        candidates = (s for s, _ in structures_with_generators(n, p))
        test = lambda s: is_invariant(x, s)
    else:
        candidates = all_sylow_subgroups(n, p)
        test = lambda syl: x.images in syl
    for cand in candidates:
        if test(cand):
            found += 1
            if found > 1:
                return False
    if found == 0:
        raise AssertionError("a p-element must lie in at least one Sylow subgroup")
    return True


def canonical_block_structure(n, p, points=None):
    """Interval-based structure: nested halving (p-secting) of each digit block."""
    blocks = set()

    def nest(pts):
        if len(pts) <= 1:
            return
        blocks.add(frozenset(pts))
        m = len(pts) // p
        for i in range(p):
            nest(pts[i * m : (i + 1) * m])

    for _, pts in digit_blocks(n, p, points):
        nest(pts)
    return frozenset(blocks)


def sylow_generators(structure, n, p):
    """Generators of the Sylow p-subgroup stabilizing a block structure.

    For each block, one permutation cycling its p children (sub-blocks or
    points) positionally, children ordered by their minimum point.
    """
    all_blocks = sorted(structure, key=lambda b: (len(b), min(b)))
    children_of = {}
    for block in all_blocks:
        subs = [b for b in all_blocks if b < block and len(b) == len(block) // p]
        children_of[block] = subs

    def ordered(block):
        if len(block) == p:
            return sorted(block)
        subs = sorted(children_of[block], key=min)
        out = []
        for sub in subs:
            out.extend(ordered(sub))
        return out

    gens = []
    for block in all_blocks:
        if len(block) == p:
            children = [[pt] for pt in sorted(block)]
        else:
            children = [ordered(sub) for sub in sorted(children_of[block], key=min)]
        mapping = {}
        for i in range(p):
            src, dst = children[i], children[(i + 1) % p]
            for a, b in zip(src, dst):
                mapping[a] = b
        gens.append(Permutation.from_mapping(mapping, n))
    return gens


# --- no-fixed-point witnesses ------------------------------------------------


def no_fixed_point_witness(x, points=None):
    """For a fixed-point-free 2-element on a 2-power point set, a structure
    B with x(B) = B whose two half-size blocks are swapped by x.

    Returns (structure, half1, half2) with x(half1) = half2.
    """
    points = (
        tuple(points) if points is not None else tuple(range(1, x.degree + 1))
    )
    n = len(points)
    if n & (n - 1) or n < 2:
        raise ValueError("point count must be a power of two, at least 2")
    if any(x(pt) == pt or x(pt) not in set(points) for pt in points):
        raise ValueError("x must be fixed-point-free on an invariant point set")

    def build(pts):
        # returns (blocks including the whole point set, half1, half2)
        m = len(pts)
        cycles = _cycles_within(x, pts)
        if len(cycles) == 1:
            cyc = cycles[0]
            blocks = set()
            for j in range(0, _log2(m)):
                width = 2**j  # blocks of size m / width... residues mod width
                if width == 1:
                    blocks.add(frozenset(cyc))
                    continue
                for r in range(width):
                    blocks.add(frozenset(cyc[r::width]))
            half1 = frozenset(cyc[0::2])
            half2 = frozenset(cyc[1::2])
            return blocks, half1, half2
        # split the cycles into two groups of total size m/2 (greedy on 2-powers)
        target = m // 2
        acc = 0
        group1 = []
        for cyc in sorted(cycles, key=len, reverse=True):
            if acc + len(cyc) <= target:
                group1.append(cyc)
                acc += len(cyc)
            if acc == target:
                break
        if acc != target:
            raise AssertionError("2-power cycle lengths always admit an even split")
        chosen = {id(c) for c in group1}
        group2 = [c for c in cycles if id(c) not in chosen]
        pts1 = tuple(pt for c in group1 for pt in c)
        pts2 = tuple(pt for c in group2 for pt in c)
        if len(pts1) == 1:
            raise AssertionError("unreachable: fixed points were excluded")
        if len(pts1) == 2:
            b1, h11, h12 = {frozenset(pts1)}, frozenset({pts1[0]}), frozenset({pts1[1]})
        else:
            b1, h11, h12 = build(pts1)
        if len(pts2) == 2:
            b2, h21, h22 = {frozenset(pts2)}, frozenset({pts2[0]}), frozenset({pts2[1]})
        else:
            b2, h21, h22 = build(pts2)
        blocks = set(b1) | set(b2)
        half1 = h11 | h21
        half2 = h12 | h22
        blocks |= {half1, half2, frozenset(pts)}
        return blocks, half1, half2

    blocks, half1, half2 = build(points)
    structure = frozenset(b for b in blocks if len(b) > 1)
    return structure, half1, half2


def _cycles_within(x, pts):
    seen = set()
    cycles = []
    for start in pts:
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


def _log2(m):
    return m.bit_length() - 1


# --- normalizer shapes and character counts ----------------------------------


class GroupShape:
    """Symbolic description of a finite group, enough to compute its order."""

    def order(self):
        raise NotImplementedError


class SymShape(GroupShape):
    def __init__(self, m):
        self.m = m

    def order(self):
        return math.factorial(self.m)

    def __repr__(self):
        return f"Sym({self.m})"


class IterWreathShape(GroupShape):
    """k-fold iterated wreath product of cyclic p: a Sylow p-subgroup of S_{p^k}."""

    def __init__(self, p, k):
        self.p, self.k = p, k

    def order(self):
        return self.p ** ((self.p**self.k - 1) // (self.p - 1))

    def __repr__(self):
        return f"IterWreath({self.p},{self.k})"


class CyclicShape(GroupShape):
    def __init__(self, m):
        self.m = m

    def order(self):
        return self.m

    def __repr__(self):
        return f"Cyclic({self.m})"


class DirectProductShape(GroupShape):
    def __init__(self, factors):
        self.factors = tuple(factors)

    def order(self):
        result = 1
        for f in self.factors:
            result *= f.order()
        return result

    def __repr__(self):
        return " x ".join(map(repr, self.factors)) or "Trivial"


class WreathBySymShape(GroupShape):
    """base ≀ S_a for `a` interchangeable copies of the base group."""

    def __init__(self, base, a):
        self.base, self.a = base, a

    def order(self):
        return self.base.order() ** self.a * math.factorial(self.a)

    def __repr__(self):
        return f"({self.base!r}) wr Sym({self.a})"


class SemidirectTorusShape(GroupShape):
    """base extended by a torus (C_{p-1})^k acting on an iterated wreath base."""

    def __init__(self, base, p, k):
        self.base, self.p, self.k = base, p, k

    def order(self):
        return self.base.order() * (self.p - 1) ** self.k

    def __repr__(self):
        return f"({self.base!r}) : Cyclic({self.p - 1})^{self.k}"


def normalizer_shape(n, p):
    """Shape of N_{S_n}(P) for P Sylow p: product over digit blocks of
    normalizers of iterated wreath groups, wreathed by Sym(digit)."""
    digits = p_adic_digits(n, p)
    factors = []
    for i in range(len(digits) - 1, -1, -1):
        a = digits[i]
        if a == 0:
            continue
        if i == 0:
            factors.append(SymShape(a))
            continue
        block = IterWreathShape(p, i)
        base = (
            block if p == 2 else SemidirectTorusShape(block, p, i)
        )
        factors.append(base if a == 1 else WreathBySymShape(base, a))
    return DirectProductShape(factors)


def _tuple_partition_count(slots, total):
    """Number of `slots`-tuples of partitions with sizes summing to `total`."""
    counts = {0: 1}
    for _ in range(slots):
        new = {}
        for have, ways in counts.items():
            for extra in range(total - have + 1):
                new[have + extra] = new.get(have + extra, 0) + ways * len(
                    partitions_of(extra)
                )
        counts = new
    return counts.get(total, 0)


def irr_pprime_count_normalizer(n, p):
    """Number of p'-degree irreducible characters of N_{S_n}(P).

    Product over p-adic digits a_i of the number of p^i-tuples of partitions
    with total size a_i.
    """
    digits = p_adic_digits(n, p)
    result = 1
    for i, a in enumerate(digits):
        if a:
            result *= _tuple_partition_count(p**i, a)
    return result


def p_element_types(n, p):
    """Cycle types of p-elements of S_n: partitions of n into p-power parts."""
    powers = []
    q = 1
    while q <= n:
        powers.append(q)
        q *= p
    out = []

    def rec(remaining, idx, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if idx < 0:
            return
        q = powers[idx]
        for count in range(remaining // q, -1, -1):
            rec(remaining - count * q, idx - 1, acc + [q] * count)

    rec(n, len(powers) - 1, [])
    return out
