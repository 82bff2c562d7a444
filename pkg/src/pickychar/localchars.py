"""Irreducible characters of iterated wreath 2-groups, with exact evaluation.

P_{2^k} = C_2 wr ... wr C_2 (k factors). Its characters carry recursive labels:
the trivial base, Pair(phi, psi) induced from phi x psi with phi != psi, and
Ext(phi, s) the two extensions of phi x phi. Evaluation is position-relative:
a character value at a permutation is computed against an ordered point tuple
whose nested halves realize the wreath structure.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .partitions import as_partition, size
from .characters import degree as char_degree
from .perms import Permutation
from .towers import p_adic_digits


# --- exact cyclotomic integers ------------------------------------------------


def _phi_degree(p, m):
    return (p - 1) * p ** (m - 1) if m else 1


class CyclotomicInt:
    """Integer combination of powers of a primitive root of unity of order p^m.

    Coordinates over the power basis 1, z, ..., z^(d-1) with d = (p-1)p^(m-1),
    reduced by the cyclotomic relation z^d = -(1 + z^(p^(m-1)) + ...).
    """

    __slots__ = ("p", "m", "coords")

    def __init__(self, p, m, coords):
        d = _phi_degree(p, m)
        coords = tuple(coords)
        if len(coords) != d:
            raise ValueError("coordinate length must match the basis size")
        self.p = p
        self.m = m
        self.coords = coords

    @staticmethod
    def integer(c, p=2, m=0):
        d = _phi_degree(p, m)
        return CyclotomicInt(p, m, (int(c),) + (0,) * (d - 1))

    @staticmethod
    def root(p, m, exp=1):
        """z^exp for z a primitive root of unity of order p^m."""
        order = p**m
        vec = [0] * order
        vec[exp % order] += 1
        return CyclotomicInt(p, m, _reduce(vec, p, m))

    def _promote(self, m):
        if m < self.m:
            raise ValueError("cannot demote")
        if m == self.m:
            return self
        # z_{p^m}^(p^(m-self.m)) is a primitive p^self.m-th root
        step = self.p ** (m - self.m)
        vec = [0] * self.p**m
        for e, c in enumerate(self.coords):
            vec[e * step] += c
        return CyclotomicInt(self.p, m, _reduce(vec, self.p, m))

    def _pair(self, other):
        if not isinstance(other, CyclotomicInt):
            other = CyclotomicInt.integer(int(other), self.p, 0)
        if self.m and other.m and self.p != other.p:
            raise ValueError("mixed root orders are not supported")
        p = self.p if self.m else other.p
        m = max(self.m, other.m)
        a = CyclotomicInt(p, self.m, self.coords) if self.m else CyclotomicInt.integer(self.coords[0], p, 0)
        b = CyclotomicInt(p, other.m, other.coords) if other.m else CyclotomicInt.integer(other.coords[0], p, 0)
        return a._promote(m), b._promote(m)

    def __add__(self, other):
        a, b = self._pair(other)
        return CyclotomicInt(a.p, a.m, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.p, self.m, tuple(-x for x in self.coords))

    def __sub__(self, other):
        a, b = self._pair(other)
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._pair(other)
        return b + (-a)

    def __mul__(self, other):
        a, b = self._pair(other)
        order = a.p**a.m
        vec = [0] * max(order, 2 * len(a.coords))
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for j, y in enumerate(b.coords):
                if y:
                    vec[(i + j) % order if a.m else i + j] += x * y
        return CyclotomicInt(a.p, a.m, _reduce(vec[:order] if a.m else vec[:1], a.p, a.m))

    __rmul__ = __mul__

    def conjugate(self):
        """Image under z -> z^-1."""
        order = self.p**self.m
        vec = [0] * max(order, 1)
        for e, c in enumerate(self.coords):
            vec[(-e) % order if self.m else 0] += c
        return CyclotomicInt(self.p, self.m, _reduce(vec[: max(order, 1)], self.p, self.m))

    def is_integer(self):
        return all(c == 0 for c in self.coords[1:])

    def as_int(self):
        if not self.is_integer():
            raise ValueError(f"not a rational integer: {self!r}")
        return self.coords[0]

    def __eq__(self, other):
        try:
            a, b = self._pair(other)
        except (ValueError, TypeError):
            return NotImplemented
        return a.coords == b.coords

    def __hash__(self):
        return hash((self.p, self.m, self.coords))

    def __repr__(self):
        return f"CyclotomicInt(p={self.p}, m={self.m}, coords={self.coords})"


def _reduce(vec, p, m):
    """Reduce a coefficient vector over z^0..z^(p^m-1) to the power basis."""
    if m == 0:
        return (vec[0],)
    d = _phi_degree(p, m)
    step = p ** (m - 1)
    vec = list(vec) + [0] * (p**m - len(vec))
    for e in range(p**m - 1, d - 1, -1):
        c = vec[e]
        if c:
            vec[e] = 0
            for j in range(p - 1):
                vec[e - d + j * step] -= c
    return tuple(vec[:d])


# --- wreath coordinates -------------------------------------------------------


class WreathElement:
    """Element of the iterated wreath 2-group in coordinates (left, right; swap)."""

    __slots__ = ("left", "right", "swap")

    def __init__(self, left=None, right=None, swap=False):
        self.left = left
        self.right = right
        self.swap = bool(swap)

    @property
    def is_leaf(self):
        return self.left is None

    @staticmethod
    def leaf():
        return WreathElement()

    @staticmethod
    def from_permutation(g, points):
        """Wreath coordinates of g on an ordered 2-power point tuple.

        Raises if g does not preserve the nested interval halving.
        """
        points = tuple(points)
        if len(points) == 1:
            if g(points[0]) != points[0]:
                raise ValueError("leaf point must be fixed")
            return WreathElement.leaf()
        half = len(points) // 2
        a, b = points[:half], points[half:]
        if all(g(pt) in set(a) for pt in a):
            return WreathElement(
                WreathElement.from_permutation(g, a),
                WreathElement.from_permutation(g, b),
                swap=False,
            )
        if all(g(pt) in set(b) for pt in a) and all(g(pt) in set(a) for pt in b):
            # g maps a[i] -> b[l(i)], b[i] -> a[r(i)]; each index map must itself
            # respect the halving, read positionally on the canonical interval
            idx_b = {pt: i for i, pt in enumerate(b)}
            idx_a = {pt: i for i, pt in enumerate(a)}
            canon = tuple(range(1, half + 1))
            lperm = Permutation(idx_b[g(a[i])] + 1 for i in range(half))
            rperm = Permutation(idx_a[g(b[i])] + 1 for i in range(half))
            return WreathElement(
                WreathElement.from_permutation(lperm, canon),
                WreathElement.from_permutation(rperm, canon),
                swap=True,
            )
        raise ValueError("permutation does not preserve the interval halving")

    def to_permutation(self, points):
        points = tuple(points)
        if len(points) == 1:
            return Permutation.identity(max(points))
        half = len(points) // 2
        a, b = points[:half], points[half:]
        canon = tuple(range(1, half + 1))
        lperm = self.left.to_permutation(canon)
        rperm = self.right.to_permutation(canon)
        degree = max(points)
        mapping = {}
        for i in range(half):
            if self.swap:
                mapping[a[i]] = b[lperm(i + 1) - 1]
                mapping[b[i]] = a[rperm(i + 1) - 1]
            else:
                mapping[a[i]] = a[lperm(i + 1) - 1]
                mapping[b[i]] = b[rperm(i + 1) - 1]
        return Permutation.from_mapping(mapping, degree)

    def __mul__(self, other):
        depth = self.depth
        if depth != other.depth:
            raise ValueError("depth mismatch")
        points = tuple(range(1, 2**depth + 1))
        prod = self.to_permutation(points) * other.to_permutation(points)
        return WreathElement.from_permutation(prod, points)

    @property
    def depth(self):
        d = 0
        node = self
        while not node.is_leaf:
            d += 1
            node = node.left
        return d

    def __eq__(self, other):
        if not isinstance(other, WreathElement):
            return NotImplemented
        if self.is_leaf or other.is_leaf:
            return self.is_leaf and other.is_leaf
        return (
            self.swap == other.swap
            and self.left == other.left
            and self.right == other.right
        )

    def __repr__(self):
        if self.is_leaf:
            return "e"
        tag = "s" if self.swap else "."
        return f"({self.left!r},{self.right!r};{tag})"


# --- character labels ---------------------------------------------------------


class LocalChar:
    """A character with position-relative exact evaluation on point tuples."""

    @property
    def degree(self):
        raise NotImplementedError

    @property
    def label(self):
        raise NotImplementedError

    def value_on(self, g, points):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, LocalChar) and self.label == other.label

    def __hash__(self):
        return hash(self.label)

    def __repr__(self):
        return self.label


class BaseChar(LocalChar):
    """Trivial character of the trivial group on a single point."""

    @property
    def degree(self):
        return 1

    @property
    def label(self):
        return "b0"

    def value_on(self, g, points):
        points = tuple(points)
        if len(points) != 1:
            raise ValueError("base character lives on a single point")
        if g(points[0]) != points[0]:
            raise ValueError("element moves the base point")
        return 1


def _halves(g, points):
    """Split an ordered 2-power tuple; report whether g swaps the halves."""
    points = tuple(points)
    half = len(points) // 2
    a, b = points[:half], points[half:]
    seta = set(a)
    if all(g(pt) in seta for pt in a):
        return a, b, False
    setb = set(b)
    if all(g(pt) in setb for pt in a) and all(g(pt) in seta for pt in b):
        return a, b, True
    raise ValueError("element does not preserve the interval halving")


class ExtChar(LocalChar):
    """One of the two extensions of inner x inner to the wreath square.

    The + extension evaluates at a half-swapping element g to inner(g^2 on the
    first half); the - extension multiplies that by the swap sign.
    """

    __slots__ = ("inner", "sign", "_label")

    def __init__(self, inner, sign):
        if sign not in (1, -1):
            raise ValueError("sign must be +-1")
        self.inner = inner
        self.sign = sign
        self._label = f"(ext {inner.label} {sign})"

    @property
    def degree(self):
        return self.inner.degree ** 2

    @property
    def label(self):
        return self._label

    def value_on(self, g, points):
        a, b, swapped = _halves(g, points)
        if swapped:
            return self.sign * self.inner.value_on(g * g, a)
        return self.inner.value_on(g, a) * self.inner.value_on(g, b)


class PairChar(LocalChar):
    """Character induced from left x right with left != right; 0 off the base coset."""

    __slots__ = ("parts", "_label")

    def __init__(self, phi, psi):
        if phi.label == psi.label:
            raise ValueError("pair components must differ")
        self.parts = tuple(sorted((phi, psi), key=lambda c: (c.degree, c.label)))
        self._label = f"(pair {self.parts[0].label} {self.parts[1].label})"

    @property
    def degree(self):
        return 2 * self.parts[0].degree * self.parts[1].degree

    @property
    def label(self):
        return self._label

    def value_on(self, g, points):
        a, b, swapped = _halves(g, points)
        if swapped:
            return 0
        phi, psi = self.parts
        return phi.value_on(g, a) * psi.value_on(g, b) + phi.value_on(g, b) * psi.value_on(g, a)


class BlockProductChar(LocalChar):
    """Product character over a tuple of (character, point-tuple) blocks."""

    __slots__ = ("blocks", "_label")

    def __init__(self, blocks):
        self.blocks = tuple(blocks)
        self._label = "(prod " + " ".join(c.label for c, _ in self.blocks) + ")"

    @property
    def degree(self):
        result = 1
        for c, _ in self.blocks:
            result *= c.degree
        return result

    @property
    def label(self):
        return self._label

    def value_on(self, g, points=None):
        result = 1
        for c, pts in self.blocks:
            result *= c.value_on(g, pts)
            if result == 0:
                return 0
        return result


@lru_cache(maxsize=None)
def irr_local(k):
    """All irreducible character labels of the k-fold wreath 2-group.

    Sorted by (degree, label); complete and duplicate-free with
    sum of squared degrees = 2^(2^k - 1).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > 5:
        raise ValueError("bound is k <= 5")
    if k == 0:
        return (BaseChar(),)
    inner = irr_local(k - 1)
    out = []
    for phi in inner:
        out.append(ExtChar(phi, 1))
        out.append(ExtChar(phi, -1))
    for phi, psi in itertools.combinations(inner, 2):
        out.append(PairChar(phi, psi))
    out = tuple(sorted(out, key=lambda c: (c.degree, c.label)))
    assert sum(c.degree**2 for c in out) == 2 ** (2**k - 1)
    return out


def linear_count(chars):
    return sum(1 for c in chars if c.degree == 1)


def parse_label(text):
    """Parse a nested s-expression label: b0, b1, (ext X s), (pair X Y).

    b0 is the single-point trivial character. b1 abbreviates the sign
    character of a two-point block, (ext b0 -1); when b0 is paired with a
    two-point character it is promoted to the trivial one, (ext b0 1), so
    that e.g. (pair b0 b1) names the degree-2 character of the 4-point group.
    """
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def promote(node, other):
        if isinstance(node, BaseChar) and not isinstance(other, BaseChar):
            return ExtChar(BaseChar(), 1)
        return node

    def parse():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of label")
        tok = tokens[pos]
        pos += 1
        if tok == "b0":
            return BaseChar()
        if tok == "b1":
            return ExtChar(BaseChar(), -1)
        if tok != "(":
            raise ValueError(f"unexpected token {tok!r}")
        head = tokens[pos]
        pos += 1
        if head == "ext":
            inner = parse()
            sign = int(tokens[pos])
            pos += 1
            node = ExtChar(inner, sign)
        elif head == "pair":
            left, right = parse(), parse()
            node = PairChar(promote(left, right), promote(right, left))
        else:
            raise ValueError(f"unknown label head {head!r}")
        if tokens[pos] != ")":
            raise ValueError("expected )")
        pos += 1
        return node

    try:
        node = parse()
    except IndexError as exc:
        raise ValueError(f"truncated label {text!r}") from exc
    if pos != len(tokens):
        raise ValueError("trailing tokens in label")
    return node


def eval_local(char, g, points=None):
    """Exact value of a character label at an element, as a CyclotomicInt.

    g may be a Permutation or a WreathElement; points default to the canonical
    interval 1..2^depth.
    """
    if isinstance(g, WreathElement):
        depth = g.depth
        points = tuple(range(1, 2**depth + 1))
        g = g.to_permutation(points)
    elif points is None:
        points = tuple(range(1, g.degree + 1))
    return CyclotomicInt.integer(char.value_on(g, points))


# --- the canonical Sylow embedding --------------------------------------------


def canonical_blocks(n):
    """Consecutive intervals of 2-power sizes, larger blocks on smaller points."""
    digits = p_adic_digits(n, 2)
    sizes = [2**i for i in range(len(digits) - 1, -1, -1) if digits[i]]
    blocks = []
    start = 1
    for s in sizes:
        blocks.append(tuple(range(start, start + s)))
        start += s
    return blocks


def full_cycle_on(points):
    """A single cycle on a 2-power point tuple lying in the interval-halving group."""
    points = tuple(points)
    if len(points) == 1:
        return {}
    half = len(points) // 2
    a, b = points[:half], points[half:]
    inner = full_cycle_on(a)
    mapping = {}
    for i in range(half):
        mapping[a[i]] = b[i]
        mapping[b[i]] = inner.get(a[i], a[i])
    return mapping


def canonical_two_adic_perm(n):
    """Product of one full cycle per canonical 2-power block."""
    mapping = {}
    for block in canonical_blocks(n):
        mapping.update(full_cycle_on(block))
    return Permutation.from_mapping(mapping, n)


def canonical_two_fixed_perm(k):
    """Element of type (2^(k-1), 2^(k-2), ..., 2, 1, 1) inside the canonical group."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = 2**k
    mapping = {}
    start = 1
    for j in range(k - 1, 0, -1):
        block = tuple(range(start, start + 2**j))
        mapping.update(full_cycle_on(block))
        start += 2**j
    return Permutation.from_mapping(mapping, n)


def irr_x_local(n, x):
    """Labels of the canonical Sylow 2-subgroup of S_n with nonzero value at x."""
    blocks = canonical_blocks(n)
    per_block = []
    for block in blocks:
        k = len(block).bit_length() - 1
        per_block.append([(c, block) for c in irr_local(k)])
    out = set()
    for combo in itertools.product(*per_block):
        char = BlockProductChar(combo)
        if char.value_on(x) != 0:
            out.add(char)
    return out


# --- odd-p normalizer character values ----------------------------------------


def phi_value_small(p, a, k, rowdata):
    """|value| at a p-adic element of the normalizer character built from one
    tower row: a!/(prod |lam_i|!) times the product of the degrees."""
    rowdata = [as_partition(mu) for mu in rowdata]
    if len(rowdata) != p**k:
        raise ValueError("rowdata must hold p^k partitions")
    if sum(size(mu) for mu in rowdata) != a:
        raise ValueError("row sizes must sum to a")
    result = math.factorial(a)
    for mu in rowdata:
        result //= math.factorial(size(mu))
        result *= char_degree(mu)
    return result


def phi_value_general(p, n, tower):
    """|value| at a p-adic element for the tower of a p'-degree partition."""
    weights = tower.row_weights()
    digits = p_adic_digits(n, p)
    if weights != digits + (0,) * (len(weights) - len(digits)):
        raise ValueError("tower does not have p'-degree row weights")
    result = 1
    for t, row in enumerate(tower.rows):
        result *= phi_value_small(p, weights[t], t, row)
    return result
