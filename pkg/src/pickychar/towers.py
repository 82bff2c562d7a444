"""p-core towers of partitions and the p-adic combinatorics of character degrees."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .partitions import (
    as_partition,
    format_partition,
    from_core_and_quotient,
    list_q_hooks,
    parse_partition,
    q_core,
    q_quotient,
    size,
)


def p_adic_digits(n, p):
    """Digits (a_0, a_1, ...) with n = sum a_i p^i; empty tuple for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if p < 2:
        raise ValueError("p must be at least 2")
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return tuple(digits)


def nu_p(n, p):
    """Exponent of p in the integer n (n nonzero)."""
    if n == 0:
        raise ValueError("nu_p undefined at 0")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@dataclass(frozen=True)
class CoreTower:
    """Rows of p-cores: row i holds p^i partitions, the iterated quotient cores."""

    p: int
    rows: tuple

    @property
    def depth(self):
        return len(self.rows) - 1

    def row_weights(self):
        """b_i = total number of boxes in row i."""
        return tuple(sum(size(mu) for mu in row) for row in self.rows)

    def weight(self):
        return sum(b * self.p**i for i, b in enumerate(self.row_weights()))


def tower_depth(n, p):
    return max(int(math.log(n, p)), 0) if n else 0


def build_tower(lam, p):
    """Iterated p-core/p-quotient tower of a partition of n, depth floor(log_p n)."""
    lam = as_partition(lam)
    n = size(lam)
    depth = tower_depth(n, p)
    rows = []
    level = [lam]
    for _ in range(depth + 1):
        rows.append(tuple(q_core(mu, p) for mu in level))
        level = [comp for mu in level for comp in q_quotient(mu, p)]
    if any(mu != () for mu in level):
        raise AssertionError("tower deeper than floor(log_p n)")
    tower = CoreTower(p=p, rows=tuple(rows))
    if tower.weight() != n:
        raise AssertionError("tower weight does not match the partition size")
    return tower


def tower_to_partition(tower):
    """Inverse of build_tower; validates that every entry is a p-core."""
    p = tower.p
    for row in tower.rows:
        for mu in row:
            if list_q_hooks(mu, p):
                raise ValueError(f"tower entry {mu} is not a {p}-core")
    for i, row in enumerate(tower.rows):
        if len(row) != p**i:
            raise ValueError("row lengths must be 1, p, p^2, ...")
    level = list(tower.rows[-1])
    for i in range(len(tower.rows) - 2, -1, -1):
        level = [
            from_core_and_quotient(
                tower.rows[i][j], level[j * p : (j + 1) * p], p
            )
            for j in range(p**i)
        ]
    return level[0]


def nu_p_degree(lam, p):
    """Exponent of p in the degree of the character labelled by lam.

    Equals (sum of tower row weights - sum of p-adic digits of n) / (p - 1).
    """
    lam = as_partition(lam)
    n = size(lam)
    if n == 0:
        return 0
    tower = build_tower(lam, p)
    total_b = sum(tower.row_weights())
    total_a = sum(p_adic_digits(n, p))
    diff = total_b - total_a
    if diff % (p - 1):
        raise AssertionError("tower weight defect not divisible by p-1")
    return diff // (p - 1)


def is_p_prime_degree(lam, p):
    """True when p does not divide the character degree of lam."""
    lam = as_partition(lam)
    n = size(lam)
    if n == 0:
        return True
    return build_tower(lam, p).row_weights() == p_adic_digits(n, p) + (0,) * (
        tower_depth(n, p) + 1 - len(p_adic_digits(n, p))
    )


def splice_towers(low, high, row, p=2):
    """Partition whose p-core tower has rows < `row` from `low`, rows >= `row` from `high`.

    `low` must have empty tower rows >= `row` and `high` empty rows < `row`.
    """
    low_t = build_tower(as_partition(low), p)
    high_t = build_tower(as_partition(high), p)
    depth = max(low_t.depth, high_t.depth, row)
    rows = []
    for i in range(depth + 1):
        low_row = low_t.rows[i] if i <= low_t.depth else ((),) * p**i
        high_row = high_t.rows[i] if i <= high_t.depth else ((),) * p**i
        if i < row:
            if any(mu != () for mu in high_row):
                raise ValueError("high part occupies tower rows below the splice row")
            rows.append(low_row)
        else:
            if any(mu != () for mu in low_row):
                raise ValueError("low part occupies tower rows at or above the splice row")
            rows.append(high_row)
    return tower_to_partition(CoreTower(p=p, rows=tuple(rows)))


def tower_to_json(tower):
    return {
        "p": tower.p,
        "rows": [[format_partition(mu) for mu in row] for row in tower.rows],
    }


def tower_from_json(obj):
    return CoreTower(
        p=int(obj["p"]),
        rows=tuple(
            tuple(parse_partition(s) if s != "-" else () for s in row)
            for row in obj["rows"]
        ),
    )


def degree_2_part_via_tower(lam):
    """2-part of the character degree, as an integer."""
    return 2 ** nu_p_degree(lam, 2)
