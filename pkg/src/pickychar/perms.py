"""Permutations of {1..n} and a small stabilizer-chain permutation group engine."""

from __future__ import annotations

import math


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images!r}")
        self.images = images

    @staticmethod
    def identity(degree):
        return Permutation(range(1, degree + 1))

    @staticmethod
    def from_cycles(cycles, degree):
        """Build from disjoint cycles given as iterables of points."""
        images = list(range(1, degree + 1))
        seen = set()
        for cyc in cycles:
            cyc = list(cyc)
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated across cycles")
                seen.add(pt)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return Permutation(images)

    @staticmethod
    def from_mapping(mapping, degree):
        """Build from a partial dict point -> image; unspecified points are fixed."""
        images = list(range(1, degree + 1))
        for a, b in mapping.items():
            images[a - 1] = b
        return Permutation(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point - 1]

    def __mul__(self, other):
        """(a*b)(i) = a(b(i))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        imgs = self.images
        return Permutation(imgs[j - 1] for j in other.images)

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def __pow__(self, exp):
        if exp < 0:
            return self.inverse() ** (-exp)
        result = Permutation.identity(self.degree)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def is_identity(self):
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self, include_fixed=False):
        """Disjoint cycles, each starting at its smallest point, sorted by that point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            pt = self(start)
            while pt != start:
                cyc.append(pt)
                seen.add(pt)
                pt = self(pt)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self, degree=None):
        """Cycle lengths including fixed points, weakly decreasing."""
        degree = degree if degree is not None else self.degree
        lengths = sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True)
        return tuple(lengths)

    def support(self):
        return frozenset(i for i in range(1, self.degree + 1) if self(i) != i)

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def extend(self, degree):
        """The same permutation viewed in a larger symmetric group."""
        if degree < self.degree:
            raise ValueError("cannot shrink degree")
        return Permutation(self.images + tuple(range(self.degree + 1, degree + 1)))

    def restrict_type(self, points):
        """Cycle type of the restriction to an invariant set of points."""
        pts = set(points)
        if any(self(i) not in pts for i in pts):
            raise ValueError("point set is not invariant")
        seen = set()
        lengths = []
        for start in pts:
            if start in seen:
                continue
            length = 0
            pt = start
            while True:
                seen.add(pt)
                length += 1
                pt = self(pt)
                if pt == start:
                    break
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "Permutation.identity(%d)" % self.degree
        body = "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)
        return f"<{body} deg={self.degree}>"


def closure(generators, degree, limit=10**6):
    """Full element set generated by the given permutations (breadth first).

    Only meant as a small-scale oracle; raises if the group exceeds `limit`.
    """
    gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
    ident = Permutation.identity(degree)
    elements = {ident.images: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                prod = g * h
                if prod.images not in elements:
                    elements[prod.images] = prod
                    nxt.append(prod)
                    if len(elements) > limit:
                        raise RuntimeError("closure limit exceeded")
        frontier = nxt
    return set(elements.values())


class PermGroup:
    """Permutation group with a deterministic Schreier-Sims stabilizer chain.

    Levels are verified bottom-up: a level is accepted only once every one of
    its Schreier generators sifts to the identity through the deeper levels.
    """

    def __init__(self, generators, degree):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree < degree:
                g = g.extend(degree)
            elif g.degree > degree:
                raise ValueError("generator degree exceeds group degree")
            if not g.is_identity() and g.images not in seen:
                seen.add(g.images)
                gens.append(g)
        self.degree = degree
        self.generators = gens
        self._bases = None
        self._gen_levels = None
        self._transversals = None

    def _orbit_transversal(self, i):
        base = self._bases[i]
        trans = {base: Permutation.identity(self.degree)}
        frontier = [base]
        while frontier:
            new = []
            for pt in sorted(frontier):
                rep = trans[pt]
                for g in self._gen_levels[i]:
                    img = g(pt)
                    if img not in trans:
                        trans[img] = g * rep
                        new.append(img)
            frontier = new
        self._transversals[i] = trans

    def _strip(self, g, start=0):
        h = g
        for level in range(start, len(self._bases)):
            img = h(self._bases[level])
            rep = self._transversals[level].get(img)
            if rep is None:
                return h, level
            h = rep.inverse() * h
        return h, len(self._bases)

    def _build(self):
        if self._bases is not None:
            return
        bases = []
        for g in self.generators:
            if all(g(b) == b for b in bases):
                bases.append(min(p for p in range(1, self.degree + 1) if g(p) != p))
        self._bases = bases
        self._gen_levels = [
            [g for g in self.generators if all(g(b) == b for b in bases[:i])]
            for i in range(len(bases))
        ]
        self._transversals = [None] * len(bases)
        for i in range(len(bases)):
            self._orbit_transversal(i)
        i = len(bases) - 1
        while i >= 0:
            trouble = None
            for pt in sorted(self._transversals[i]):
                rep = self._transversals[i][pt]
                for s in self._gen_levels[i]:
                    schreier = self._transversals[i][s(pt)].inverse() * (s * rep)
                    if schreier.is_identity():
                        continue
                    h, j = self._strip(schreier, i + 1)
                    if not h.is_identity():
                        trouble = (h, j)
                        break
                if trouble:
                    break
            if trouble is None:
                i -= 1
                continue
            h, j = trouble
            if j == len(bases):
                bases.append(min(p for p in range(1, self.degree + 1) if h(p) != p))
                self._gen_levels.append([])
                self._transversals.append(None)
            for level in range(i + 1, j + 1):
                self._gen_levels[level].append(h)
                self._orbit_transversal(level)
            i = j

    def order(self):
        self._build()
        result = 1
        for trans in self._transversals:
            result *= len(trans)
        return result

    def __contains__(self, g):
        if not isinstance(g, Permutation):
            g = Permutation(g)
        if g.degree < self.degree:
            g = g.extend(self.degree)
        elif g.degree > self.degree:
            return False
        self._build()
        h, j = self._strip(g)
        return h.is_identity() and j == len(self._bases)

    def contains(self, g):
        return g in self

    def __repr__(self):
        return f"PermGroup(order={self.order()}, degree={self.degree})"
