"""Degree- and value-preserving bijections Irr^x(S_n) -> Irr^x(Sub(x)).

For 2-elements the local side is built recursively over the subnormalizer
shape: identity pairings on full symmetric factors, linear tower labels on
Sylow tower factors, and induced pairs / extensions on wreath factors. For
odd primes the local side consists of normalizer characters represented by
their closed-form absolute values at p-adic elements.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .characters import centralizer_order, degree as char_degree
from .localchars import full_cycle_on, irr_local
from .partitions import (
    as_partition,
    double_hook_shape,
    format_partition,
    hook_shape,
    partitions_of,
    q_hook_additions,
    size,
)
from .perms import Permutation
from .subnorm import FullSym, Product, Syl2Tower, WreathS2, sub_shape_2
from .sylow import canonical_element_of_type, p_adic_type, two_fixed_type
from .towers import CoreTower, build_tower, nu_p, p_adic_digits, tower_to_partition


# --- local-side characters ----------------------------------------------------


class LocalSide:
    """A character of the local group, evaluated exactly at permutations."""

    signed = True

    @property
    def degree(self):
        raise NotImplementedError

    @property
    def label(self):
        raise NotImplementedError

    def value_at(self, g):
        raise NotImplementedError

    def p_part(self, p):
        return p ** nu_p(self.degree, p)

    def __repr__(self):
        return self.label


class SymLocal(LocalSide):
    """Restriction-free copy of a symmetric group character on a point set."""

    def __init__(self, lam, points):
        self.lam = as_partition(lam)
        self.points = tuple(points)
        if size(self.lam) != len(self.points):
            raise ValueError("partition size must match the point count")

    @property
    def degree(self):
        return char_degree(self.lam)

    @property
    def label(self):
        return f"(sym {format_partition(self.lam)} @{self.points[0]}+{len(self.points)})"

    def value_at(self, g):
        from .characters import mn_value

        return mn_value(self.lam, g.restrict_type(self.points))


class TowerLinear(LocalSide):
    """A linear tower-group label carried on an ordered 2-power point tuple."""

    def __init__(self, char, points):
        if char.degree != 1:
            raise ValueError("tower atoms carry linear labels only")
        self.char = char
        self.points = tuple(points)

    @property
    def degree(self):
        return 1

    @property
    def label(self):
        return f"({self.char.label} @{self.points[0]}+{len(self.points)})"

    def value_at(self, g):
        return self.char.value_on(g, self.points)


def _transport(g, src, dst, degree):
    """The permutation acting on dst positionally as g acts on src."""
    idx = {pt: i for i, pt in enumerate(src)}
    mapping = {dst[i]: dst[idx[g(src[i])]] for i in range(len(src))}
    return Permutation.from_mapping(mapping, degree)


def _sides(g, left, right):
    """Whether g preserves or swaps the two point sets."""
    setl = set(left)
    if all(g(pt) in setl for pt in left):
        return False
    setr = set(right)
    if all(g(pt) in setr for pt in left) and all(g(pt) in setl for pt in right):
        return True
    raise ValueError("element neither preserves nor swaps the two halves")


class WPairLocal(LocalSide):
    """Character induced from phi x psi on aligned halves; 0 off the base coset."""

    def __init__(self, phi, psi, left, right):
        self.phi = phi
        self.psi = psi
        self.left = tuple(left)
        self.right = tuple(right)

    @property
    def degree(self):
        return 2 * self.phi.degree * self.psi.degree

    @property
    def label(self):
        return f"(wpair {self.phi.label} {self.psi.label})"

    def value_at(self, g):
        if _sides(g, self.left, self.right):
            return 0
        n = g.degree
        h1 = _transport(g, self.left, self.right, n)
        return self.phi.value_at(h1) * self.psi.value_at(g) + self.phi.value_at(
            g
        ) * self.psi.value_at(h1)


class WExtLocal(LocalSide):
    """Extension of phi x phi to the wreath square, with a swap-coset sign."""

    def __init__(self, phi, sign, left, right):
        if sign not in (1, -1):
            raise ValueError("sign must be +-1")
        self.phi = phi
        self.sign = sign
        self.left = tuple(left)
        self.right = tuple(right)

    @property
    def degree(self):
        return self.phi.degree ** 2

    @property
    def label(self):
        return f"(wext {self.phi.label} {self.sign})"

    def value_at(self, g):
        n = g.degree
        if _sides(g, self.left, self.right):
            square = g * g
            return self.sign * self.phi.value_at(
                _transport(square, self.left, self.right, n)
            )
        return self.phi.value_at(_transport(g, self.left, self.right, n)) * self.phi.value_at(g)


class ProductLocal(LocalSide):
    def __init__(self, factors):
        flat = []
        for f in factors:
            if isinstance(f, ProductLocal):
                flat.extend(f.factors)
            else:
                flat.append(f)
        self.factors = tuple(flat)

    @property
    def signed(self):
        return all(f.signed for f in self.factors)

    @property
    def degree(self):
        result = 1
        for f in self.factors:
            result *= f.degree
        return result

    def p_part(self, p):
        result = 1
        for f in self.factors:
            result *= f.p_part(p)
        return result

    @property
    def label(self):
        return "(lprod " + " ".join(f.label for f in self.factors) + ")"

    def value_at(self, g):
        result = 1
        for f in self.factors:
            result *= f.value_at(g)
            if result == 0:
                return 0
        return result


class PhiLocal(LocalSide):
    """Odd-p normalizer character known through |value| at the p-adic class."""

    signed = False

    def __init__(self, p, lam, points):
        from .localchars import phi_value_general

        self.p = p
        self.lam = as_partition(lam)
        self.points = tuple(points)
        self.tower = build_tower(self.lam, p)
        self.magnitude = phi_value_general(p, len(self.points), self.tower)
        self.expected = p_adic_type(len(self.points), p)

    @property
    def degree(self):
        return self.magnitude

    def p_part(self, p):
        # p'-degree by construction
        return 1

    @property
    def label(self):
        return f"(phi{self.p} {format_partition(self.lam)} @{self.points[0]}+{len(self.points)})"

    def value_at(self, g):
        if g.restrict_type(self.points) != self.expected:
            raise ValueError("magnitude is only defined at the p-adic class")
        return self.magnitude


# --- pairings -----------------------------------------------------------------


@dataclass(frozen=True)
class Triple:
    glob: tuple
    local: LocalSide
    eps: int


@dataclass
class Pairing:
    points: tuple
    x: Permutation
    p: int
    triples: tuple
    cycle: Permutation | None = None
    signed: bool = True
    kind: str = ""

    @property
    def n(self):
        return len(self.points)

    def by_partition(self):
        return {t.glob: t for t in self.triples}

    def global_value(self, lam, g):
        from .characters import mn_value

        return mn_value(lam, g.restrict_type(self.points))


@dataclass
class Report:
    context: str
    counts: dict
    checks: list = field(default_factory=list)
    millis: int = 0

    @property
    def ok(self):
        return all(passed for _, passed, _ in self.checks)

    def add(self, name, passed, witness=None):
        self.checks.append((name, passed, witness if not passed else None))


# --- the 2-element engine -----------------------------------------------------


def element_pairing(x, split_policy="min"):
    """Bijection Irr^x(S_n) -> Irr^x(Sub(x)) for a 2-element x of S_n."""
    shape = sub_shape_2(x, split_policy)
    return _build(x, shape)


def _build(x, shape):
    if isinstance(shape, FullSym):
        return _identity_build(x, shape.points)
    if isinstance(shape, Syl2Tower):
        return _tower_build(x, shape.points)
    if isinstance(shape, WreathS2):
        return _wreath_build(x, shape)
    if isinstance(shape, Product):
        return _product_build(x, shape)
    raise TypeError(f"unknown shape {shape!r}")


def _domain(x, points):
    from .characters import mn_value

    ctype = x.restrict_type(points)
    return {
        lam
        for lam in partitions_of(len(points))
        if mn_value(lam, ctype) != 0
    }


def _identity_build(x, points):
    points = tuple(sorted(points))
    triples = tuple(
        Triple(lam, SymLocal(lam, points), 1)
        for lam in sorted(_domain(x, points))
    )
    # identity pairings are sign-trivial, so any 2-adic element of the factor
    # serves as the shared-sign witness
    mapping = {}
    rest = list(points)
    size_left = len(points)
    while rest:
        block = 1 << (size_left.bit_length() - 1)
        mapping.update(full_cycle_on(tuple(rest[:block])))
        rest = rest[block:]
        size_left -= block
    cycle = Permutation.from_mapping(mapping, x.degree)
    return Pairing(points, x, 2, triples, cycle=cycle, kind="identity")


def _tower_build(x, points):
    """x is a full 2-power cycle; hooks pair with linear tower labels."""
    from .characters import mn_value

    points = tuple(points)
    m = len(points)
    k = m.bit_length() - 1
    ctype = x.restrict_type(points)
    if ctype != (m,):
        raise ValueError("tower context expects a single full cycle")
    globs = []
    for j in range(m):
        lam = hook_shape(j, k) if k else (1,)
        val = mn_value(lam, ctype)
        assert val in (1, -1)
        globs.append((val, lam))
    locs = []
    for c in irr_local(k):
        if c.degree != 1:
            continue
        loc = TowerLinear(c, points)
        val = loc.value_at(x)
        assert val in (1, -1)
        locs.append((val, loc))
    globs.sort(key=lambda t: (t[0], t[1]))
    locs.sort(key=lambda t: (t[0], t[1].label))
    assert len(globs) == len(locs)
    triples = []
    for (gv, lam), (lv, loc) in zip(globs, locs):
        triples.append(Triple(lam, loc, lv * gv))
    return Pairing(points, x, 2, tuple(triples), cycle=_restrict(x, points), kind="tower")


def _restrict(x, points):
    """x as a permutation supported only on the given points."""
    mapping = {pt: x(pt) for pt in points}
    return Permutation.from_mapping(mapping, x.degree)


def _norm_pair(pair):
    return max(pair, tuple(-v for v in pair))


def _wreath_build(x, shape):
    from .characters import mn_value

    mirror = tuple(shape.mirror)
    inner_pts = tuple(shape.inner.support())
    points = mirror + inner_pts
    m = len(points)
    k = m.bit_length() - 1
    half = m // 2
    ctype = x.restrict_type(points)
    omega = _build(x, shape.inner)
    lookup = omega.by_partition()
    g_ctx = Permutation.from_mapping(full_cycle_on(points), x.degree)
    gtype = g_ctx.restrict_type(points)
    assert gtype == (m,)
    triples = []
    covered = set()

    def hook_local(t):
        trip = lookup.get(hook_shape(t, k - 1) if k > 1 else (1,))
        if trip is None:
            raise ValueError("inner pairing lacks a needed hook character")
        return trip.local

    # odd-degree hooks: match within each orbit by the value pair at (g, x)
    for m0 in range(max(2 ** (k - 2), 1)):
        ts = sorted({m0, half - 1 - m0})
        globs = []
        for t in ts:
            for i in (1, -1):
                lam = hook_shape(t, k) if i == 1 else hook_shape(half + t, k)
                vx = mn_value(lam, ctype)
                if vx == 0:
                    continue
                globs.append((lam, mn_value(lam, gtype), vx))
        locs = []
        for t in ts:
            phi = hook_local(t)
            for j in (1, -1):
                loc = WExtLocal(phi, j, mirror, inner_pts)
                lx = loc.value_at(x)
                if lx == 0:
                    continue
                locs.append((loc, loc.value_at(g_ctx), lx))
        assert len(globs) == len(locs)
        gpairs = sorted(_norm_pair((gv, xv)) for _, gv, xv in globs)
        lpairs = sorted(_norm_pair((gv, xv)) for _, gv, xv in locs)
        assert gpairs == lpairs, "hook value pairs do not agree up to sign"
        pool = list(locs)
        for lam, gv, xv in sorted(globs, key=lambda t: t[0]):
            pick = None
            for cand in pool:
                if (cand[1], cand[2]) == (gv, xv):
                    pick, eps = cand, 1
                    break
            if pick is None:
                for cand in pool:
                    if (cand[1], cand[2]) == (-gv, -xv):
                        pick, eps = cand, -1
                        break
            assert pick is not None
            pool.remove(pick)
            triples.append(Triple(lam, pick[0], eps))
            covered.add(lam)

    # unique-hook partitions over an inner non-hook
    for trip in omega.triples:
        mu = trip.glob
        if len(mu) <= 1 or all(part == 1 for part in mu[1:]):
            continue  # hooks handled above
        for lam, height in q_hook_additions(mu, half):
            vx = mn_value(lam, ctype)
            assert vx != 0
            loc = WPairLocal(hook_local(height), trip.local, mirror, inner_pts)
            lx = loc.value_at(x)
            assert abs(lx) == abs(vx)
            triples.append(Triple(lam, loc, lx // vx))
            covered.add(lam)

    # partitions with two removable half-size hooks
    for a in range(half):
        for b in range(a + 1, half):
            lam = double_hook_shape(a, b, k)
            vx = mn_value(lam, ctype)
            if vx == 0:
                continue
            loc = WPairLocal(hook_local(a), hook_local(b), mirror, inner_pts)
            lx = loc.value_at(x)
            assert abs(lx) == abs(vx)
            triples.append(Triple(lam, loc, lx // vx))
            covered.add(lam)

    assert covered == _domain(x, points), "wreath cases do not exhaust the domain"
    assert len(triples) == len(covered)
    return Pairing(points, x, 2, tuple(triples), cycle=g_ctx, kind="wreath")


def _tower_slice(lam, rows, p=2):
    """Partition realizing only the given tower rows of lam; None on mismatch."""
    tower = build_tower(lam, p)
    kept = []
    for i, row in enumerate(tower.rows):
        kept.append(row if i in rows else ((),) * p**i)
    sliced = CoreTower(p=p, rows=tuple(kept))
    return tower_to_partition(sliced), sliced.weight()


def _product_build(x, shape):
    from .characters import mn_value

    factors = sorted(
        shape.factors, key=lambda f: -min(len(c) for c in _factor_cycles(x, f))
    )
    subs = [_build(x, f) for f in factors]
    # tower rows owned by each factor, split at the factor size boundaries
    sizes = [len(f.support()) for f in factors]
    boundaries = []
    low = 0
    for s in reversed(sizes):
        digits = p_adic_digits(s, 2)
        hi = len(digits)
        boundaries.append(set(range(low, hi)))
        low = hi
    boundaries.reverse()
    points = tuple(pt for f in factors for pt in f.support())
    all_points = tuple(sorted(points))
    triples = []
    for lam in sorted(_domain(x, all_points)):
        parts = []
        ok = True
        for f, rows, s in zip(factors, boundaries, sizes):
            piece, weight = _tower_slice(lam, rows)
            if weight != s:
                ok = False
                break
            parts.append(piece)
        assert ok, "nonvanishing character with a non-splitting tower"
        locs = []
        for sub, piece in zip(subs, parts):
            trip = sub.by_partition().get(piece)
            assert trip is not None, "factor pairing misses a sliced partition"
            locs.append(trip.local)
        local = ProductLocal(locs)
        # the splice of the factor characters carries a fixed per-partition
        # sign, so the pair sign is read off at x rather than multiplied out
        gv = mn_value(lam, x.restrict_type(all_points))
        lv = local.value_at(x)
        assert abs(lv) == abs(gv) != 0
        triples.append(Triple(lam, local, lv // gv))
    cycle = None
    if all(sub.cycle is not None for sub in subs):
        merged = {}
        for sub in subs:
            for pt in sub.points:
                merged[pt] = sub.cycle(pt)
        cycle = Permutation.from_mapping(merged, x.degree)
    return Pairing(all_points, x, 2, tuple(triples), cycle=cycle, kind="product")


def _factor_cycles(x, f):
    from .sylow import _cycles_within

    return _cycles_within(x, f.support())


# --- odd-p pairings -----------------------------------------------------------


def odd_adic_pairing(n, p):
    """Irr_{p'}(S_n) paired with normalizer characters by absolute value."""
    from .characters import irr_p_prime

    points = tuple(range(1, n + 1))
    x = canonical_element_of_type(p_adic_type(n, p), degree=n)
    triples = tuple(
        Triple(lam, PhiLocal(p, lam, points), 1)
        for lam in sorted(irr_p_prime(n, p))
    )
    return Pairing(points, x, p, triples, signed=False, kind="odd-adic")


def cycle_pairing(p, k):
    """The p^k-cycle context: tower pairing for p = 2, normalizer values otherwise."""
    n = p**k
    if p == 2:
        x = canonical_element_of_type((n,), degree=n)
        return element_pairing(x)
    return odd_adic_pairing(n, p)


def linear_pairing(n):
    """The 2-adic context on S_n."""
    x = canonical_element_of_type(p_adic_type(n, 2), degree=n)
    return element_pairing(x)


def power_pairing(x):
    """Any 2-element context inside a symmetric group of 2-power degree."""
    n = x.degree
    if n & (n - 1):
        raise ValueError("context degree must be a power of two")
    return element_pairing(x)


def eight_divides_pairing(n):
    """The two-fixed-point context for n divisible by 8."""
    if n % 8:
        raise ValueError("n must be divisible by 8")
    x = canonical_element_of_type(two_fixed_type(n), degree=n)
    return element_pairing(x)


def _sym3_local_chars(offset, degree):
    """Irr of Sym(3) wr Sym(2) on points offset+1..offset+6, as local characters."""
    left = tuple(range(offset + 1, offset + 4))
    right = tuple(range(offset + 4, offset + 7))
    inner = [SymLocal(lam, right) for lam in partitions_of(3)]
    out = []
    for phi in inner:
        out.append(WExtLocal(phi, 1, left, right))
        out.append(WExtLocal(phi, -1, left, right))
    for i in range(len(inner)):
        for j in range(i + 1, len(inner)):
            out.append(WPairLocal(inner[i], inner[j], left, right))
    return out


def _three_fixed_base(k, offset, degree):
    """Base bijections for the three-fixed context on a block of size k in {3, 6}.

    Returns (triples keyed by partitions of k, x1, z1) where x1 is 3-adic and
    z1 has three extra fixed points, both supported on offset+1..offset+k.
    """
    from .characters import irr_p_prime, mn_value

    pts = tuple(range(offset + 1, offset + k + 1))
    if k == 3:
        x1 = Permutation.from_cycles([pts], degree)
        z1 = Permutation.identity(degree)
        triples = {
            lam: Triple(lam, SymLocal(lam, pts), 1)
            for lam in irr_p_prime(3, 3)
        }
        return triples, x1, z1
    if k != 6:
        raise ValueError("base block size must be 3 or 6")
    x1 = Permutation.from_cycles([pts[:3], pts[3:]], degree)
    z1 = Permutation.from_cycles([pts[:3]], degree)
    globs = []
    for lam in sorted(irr_p_prime(6, 3)):
        vec = (abs(mn_value(lam, (3, 3))), abs(mn_value(lam, (3, 1, 1, 1))))
        globs.append((vec, lam))
    locs = []
    for loc in _sym3_local_chars(offset, degree):
        vec = (abs(loc.value_at(x1)), abs(loc.value_at(z1)))
        locs.append((vec, loc))
    globs.sort(key=lambda t: (t[0], t[1]))
    locs.sort(key=lambda t: (t[0], t[1].label))
    assert [v for v, _ in globs] == [v for v, _ in locs], (
        "base value vectors do not agree"
    )
    triples = {lam: Triple(lam, loc, 1) for (_, lam), (_, loc) in zip(globs, locs)}
    return triples, x1, z1


def three_fixed_pairing(n):
    """The p = 3 context where the picky element fixes three points.

    Applies for n congruent to +-3 mod 9; splits off the weight-one tower row
    onto a base block of size 3 or 6 and composes with the p-adic pairing.
    """
    from .characters import irr_p_prime

    if n % 9 not in (3, 6):
        raise ValueError("n must be congruent to +-3 mod 9")
    digits = p_adic_digits(n, 3)
    k = 3 * digits[1]
    m = n - k
    base, x1, z1 = _three_fixed_base(k, m, n)
    if m == 0:
        triples = tuple(base[lam] for lam in sorted(base))
        pairing = Pairing(tuple(range(1, n + 1)), x1, 3, triples, signed=False, kind="three-fixed")
        pairing.z = z1
        return pairing
    y = canonical_element_of_type(p_adic_type(m, 3), degree=n)
    omega_lookup = odd_adic_pairing(m, 3).by_partition()
    triples = []
    for lam in sorted(irr_p_prime(n, 3)):
        mu, wmu = _tower_slice(lam, {0, 1}, p=3)
        gamma, wg = _tower_slice(
            lam, set(range(2, build_tower(lam, 3).depth + 1)), p=3
        )
        assert wmu == k and wg == m
        t_mu = base[mu]
        t_gamma = omega_lookup[gamma]
        triples.append(
            Triple(lam, ProductLocal([t_gamma.local, t_mu.local]), 1)
        )
    x = _merge(y, x1, n)
    z = _merge(y, z1, n)
    pairing = Pairing(tuple(range(1, n + 1)), x, 3, tuple(triples), signed=False, kind="three-fixed")
    pairing.z = z
    return pairing


def _merge(a, b, degree):
    mapping = {}
    for pt in a.support() | b.support():
        img = a(pt) if pt in a.support() else b(pt)
        mapping[pt] = img
    return Permutation.from_mapping(mapping, degree)


# --- verification -------------------------------------------------------------


def verify(pairing, elements=None, centralizer_checks=None):
    """Check bijectivity, degree p-parts, value matching, and completeness.

    elements: list of (name, Permutation) at which |local| = |global| is
    required. centralizer_checks: subset of those names at which the squared
    local values must sum to the centralizer order (completeness of the local
    image at a picky class).
    """
    start = time.monotonic()
    p = pairing.p
    if elements is None:
        elements = [("x", pairing.x)]
    report = Report(
        context=f"n={pairing.n} p={p} kind={pairing.kind} "
        f"type={pairing.x.restrict_type(pairing.points)}",
        counts={"pairs": len(pairing.triples)},
    )
    globs = [t.glob for t in pairing.triples]
    labels = [t.local.label for t in pairing.triples]
    report.add("global-injective", len(set(globs)) == len(globs))
    report.add("local-injective", len(set(labels)) == len(labels))
    dom = _domain(pairing.x, pairing.points)
    report.add(
        "domain-exhausts",
        set(globs) == dom,
        sorted(dom.symmetric_difference(globs))[:3],
    )
    bad = [
        t.glob
        for t in pairing.triples
        if p ** nu_p(char_degree(t.glob), p) != t.local.p_part(p)
    ]
    report.add("degree-p-part", not bad, bad[:3])
    for name, elem in elements:
        bad = []
        for t in pairing.triples:
            gv = pairing.global_value(t.glob, elem)
            lv = t.local.value_at(elem)
            if abs(lv) != abs(gv):
                bad.append((t.glob, gv, lv))
        report.add(f"value-match[{name}]", not bad, bad[:3])
    if pairing.signed:
        bad = []
        for t in pairing.triples:
            gv = pairing.global_value(t.glob, pairing.x)
            lv = t.local.value_at(pairing.x)
            if lv != t.eps * gv:
                bad.append((t.glob, gv, lv, t.eps))
        report.add("sign-consistent", not bad, bad[:3])
    if pairing.signed and pairing.cycle is not None:
        bad = []
        for t in pairing.triples:
            if nu_p(char_degree(t.glob), p) != 0:
                continue
            gx = pairing.global_value(t.glob, pairing.x)
            lx = t.local.value_at(pairing.x)
            gc = pairing.global_value(t.glob, pairing.cycle)
            lc = t.local.value_at(pairing.cycle)
            if (gc * lc > 0) != (gx * lx > 0):
                bad.append((t.glob, (gc, gx), (lc, lx)))
        report.add("shared-sign-at-cycle", not bad, bad[:3])
    for name, elem in centralizer_checks or []:
        expected = centralizer_order(elem.cycle_type())
        total_local = 0
        mismatch = False
        for t in pairing.triples:
            lv = t.local.value_at(elem)
            gv = pairing.global_value(t.glob, elem)
            if (lv == 0) != (gv == 0):
                mismatch = True
            total_local += lv * lv
        report.add(f"support-match[{name}]", not mismatch)
        report.add(
            f"orthogonality[{name}]",
            total_local == expected,
            (total_local, expected),
        )
    report.millis = int((time.monotonic() - start) * 1000)
    return report


# --- theorem-level assembly ---------------------------------------------------


def picky_bijection(n, p):
    """One pairing serving every picky p-element class of S_n.

    Returns (pairing, elements) where elements lists (class-name, permutation)
    for each picky class tracked by the pairing.
    """
    if p == 2:
        if n % 2:
            x = canonical_element_of_type(p_adic_type(n, 2), degree=n)
            pairing = element_pairing(x)
            return pairing, [("two-adic", x)]
        y = canonical_element_of_type(two_fixed_type(n), degree=n)
        pairing = element_pairing(y)
        if pairing.cycle is None:
            raise AssertionError("picky context must carry a 2-adic witness")
        return pairing, [("two-adic", pairing.cycle), ("two-fixed", y)]
    if p == 3 and n % 9 in (3, 6):
        pairing = three_fixed_pairing(n)
        return pairing, [("p-adic", pairing.x), ("three-fixed", pairing.z)]
    pairing = odd_adic_pairing(n, p)
    return pairing, [("p-adic", pairing.x)]


def verify_picky(n, p):
    pairing, elements = picky_bijection(n, p)
    return verify(pairing, elements=elements, centralizer_checks=elements)
