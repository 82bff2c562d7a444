"""Integer partitions: hooks, rim hooks, q-cores, q-quotients and hook shapes.

Partitions are tuples of weakly decreasing positive integers; () is the empty
partition. Cells are 1-based (row, column) pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def as_partition(parts):
    """Validate and normalise a partition (drops trailing zeros)."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {parts!r}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts!r}")
    return parts


def size(lam):
    return sum(lam)


@lru_cache(maxsize=None)
def _partitions_of(n, largest):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n):
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _partitions_of(n, n if n else 1)


def conjugate(lam):
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def cells(lam):
    lam = as_partition(lam)
    return [(i, j) for i, p in enumerate(lam, start=1) for j in range(1, p + 1)]


def contains_cell(lam, cell):
    i, j = cell
    return 1 <= i <= len(lam) and 1 <= j <= lam[i - 1]


def arm(lam, cell):
    i, j = cell
    return lam[i - 1] - j


def leg(lam, cell):
    i, j = cell
    return sum(1 for p in lam[i:] if p >= j)


def hook_length(lam, cell):
    lam = as_partition(lam)
    if not contains_cell(lam, cell):
        raise ValueError(f"cell {cell} not in partition {lam}")
    return arm(lam, cell) + leg(lam, cell) + 1


def hook_product(lam):
    lam = as_partition(lam)
    result = 1
    for cell in cells(lam):
        result *= hook_length(lam, cell)
    return result


def beta_set(lam, m):
    """First-column hook lengths padded to m entries: lam_i + m - i, i = 1..m."""
    lam = as_partition(lam)
    if m < len(lam):
        raise ValueError("padding shorter than the partition")
    padded = lam + (0,) * (m - len(lam))
    return tuple(p + m - i for i, p in enumerate(padded, start=1))


def partition_from_beta(beta):
    """Inverse of beta_set for a strictly decreasing tuple of beta numbers."""
    beta = tuple(beta)
    if any(a <= b for a, b in zip(beta, beta[1:])) or any(b < 0 for b in beta):
        raise ValueError("beta numbers must be strictly decreasing and nonnegative")
    m = len(beta)
    return as_partition(b - m + i for i, b in enumerate(beta, start=1))


@dataclass(frozen=True)
class RimHook:
    """A removable rim hook: its cells (sorted), with derived length and height."""

    cells: tuple

    @property
    def length(self):
        return len(self.cells)

    @property
    def height(self):
        return len({i for i, _ in self.cells}) - 1

    @property
    def corner(self):
        return (min(i for i, _ in self.cells), min(j for _, j in self.cells))

    @property
    def sign(self):
        return (-1) ** self.height


def q_hook_removals(lam, q):
    """Pairs (mu, height) for each removable q-rim-hook, via beta numbers."""
    lam = as_partition(lam)
    if q <= 0:
        raise ValueError("hook length must be positive")
    m = max(len(lam), 1)
    beta = set(beta_set(lam, m))
    out = []
    for b in sorted(beta, reverse=True):
        if b >= q and (b - q) not in beta:
            new = sorted((beta - {b}) | {b - q}, reverse=True)
            mu = partition_from_beta(new)
            height = sum(1 for c in beta if b - q < c < b)
            out.append((mu, height))
    return out


def q_hook_additions(mu, q):
    """Pairs (lam, height) for each partition obtained by adding a q-rim-hook."""
    mu = as_partition(mu)
    if q <= 0:
        raise ValueError("hook length must be positive")
    m = max(len(mu), 1) + q
    beta = set(beta_set(mu, m))
    out = []
    for b in sorted(beta, reverse=True):
        if (b + q) not in beta:
            new = sorted((beta - {b}) | {b + q}, reverse=True)
            lam = partition_from_beta(new)
            height = sum(1 for c in beta if b < c < b + q)
            out.append((lam, height))
    return out


def list_q_hooks(lam, q):
    """All removable rim hooks of length q, sorted by (top row, leftmost column)."""
    lam = as_partition(lam)
    lam_cells = set(cells(lam))
    hooks = []
    for mu, height in q_hook_removals(lam, q):
        removed = tuple(sorted(lam_cells - set(cells(mu))))
        hook = RimHook(cells=removed)
        if hook.height != height:
            raise AssertionError("beta-number height disagrees with cell walk")
        hooks.append(hook)
    hooks.sort(key=lambda h: h.corner)
    return hooks


def remove_hook(lam, hook):
    """Partition left after deleting the cells of a rim hook; validates the result."""
    lam = as_partition(lam)
    lam_cells = set(cells(lam))
    hook_cells = set(hook.cells)
    if not hook_cells <= lam_cells:
        raise ValueError("hook cells not contained in the diagram")
    remaining = lam_cells - hook_cells
    rows = {}
    for i, j in remaining:
        rows[i] = rows.get(i, 0) + 1
    parts = [rows.get(i, 0) for i in range(1, (max(rows) if rows else 0) + 1)]
    mu = tuple(parts)
    if set(cells(as_partition(p for p in mu if p > 0))) != remaining or any(
        a < b for a, b in zip(mu, mu[1:])
    ):
        raise ValueError("removing these cells does not leave a partition")
    return as_partition(p for p in mu if p > 0)


def _padding(lam, q):
    lam = as_partition(lam)
    m = len(lam) + 1
    return q * ((m + q - 1) // q)


def q_quotient(lam, q):
    """The q-quotient (lambda^0, ..., lambda^(q-1)) via beta-number runners."""
    lam = as_partition(lam)
    if q <= 0:
        raise ValueError("q must be positive")
    m = _padding(lam, q)
    beta = beta_set(lam, m)
    out = []
    for r in range(q):
        vals = sorted((b // q for b in beta if b % q == r), reverse=True)
        mr = len(vals)
        comp = [v - mr + i for i, v in enumerate(vals, start=1)]
        out.append(as_partition(p for p in comp if p > 0))
    return tuple(out)


def q_core(lam, q):
    """Partition left after removing q-rim-hooks until none remain."""
    lam = as_partition(lam)
    if q <= 0:
        raise ValueError("q must be positive")
    m = _padding(lam, q)
    beta = beta_set(lam, m)
    counts = [sum(1 for b in beta if b % q == r) for r in range(q)]
    packed = sorted(
        (q * s + r for r in range(q) for s in range(counts[r])), reverse=True
    )
    return as_partition(
        p for p in (b - m + i for i, b in enumerate(packed, start=1)) if p > 0
    )


def from_core_and_quotient(core, quotient, q):
    """Unique partition with the given q-core and q-quotient."""
    core = as_partition(core)
    quotient = tuple(as_partition(comp) for comp in quotient)
    if len(quotient) != q:
        raise ValueError(f"quotient must have exactly {q} components")
    if list_q_hooks(core, q):
        raise ValueError(f"{core} is not a {q}-core")
    total = sum(size(comp) for comp in quotient)
    longest = max((len(comp) for comp in quotient), default=0)
    m = q * (len(core) + total + longest + 2)
    counts = [0] * q
    for b in beta_set(core, m):
        counts[b % q] += 1
    new_beta = []
    for r in range(q):
        mr = counts[r]
        comp = quotient[r]
        if len(comp) > mr:
            raise ValueError("padding too small for quotient component")
        padded = comp + (0,) * (mr - len(comp))
        for i, p in enumerate(padded, start=1):
            new_beta.append(q * (p + mr - i) + r)
    return partition_from_beta(sorted(new_beta, reverse=True))


def hook_shape(a, k):
    """The hook partition of 2^k with a boxes below the first row: (2^k - a, 1^a)."""
    n = 2**k
    if not 0 <= a <= n - 1:
        raise ValueError(f"need 0 <= a <= {n - 1}")
    return as_partition((n - a,) + (1,) * a)


def double_hook_shape(a, b, k):
    """The partition (2^(k-1)-a, 2^(k-1)-b+1, 2^a, 1^(b-a-1)) with zero parts dropped.

    Defined for 0 <= a < b <= 2^(k-1) - 1; these are exactly the partitions of
    2^k carrying two distinct removable 2^(k-1)-rim-hooks.
    """
    half = 2 ** (k - 1)
    if not 0 <= a < b <= half - 1:
        raise ValueError(f"need 0 <= a < b <= {half - 1}")
    parts = (half - a, half - b + 1) + (2,) * a + (1,) * (b - a - 1)
    return as_partition(p for p in parts if p > 0)


def parse_partition(text):
    """Parse '4,3,1' (or '[4, 3, 1]' / '4 3 1') into a partition tuple."""
    cleaned = text.strip().strip("[]()").replace(",", " ")
    if not cleaned.split():
        return ()
    try:
        parts = [int(tok) for tok in cleaned.split()]
    except ValueError as exc:
        raise ValueError(f"cannot parse partition from {text!r}") from exc
    return as_partition(parts)


def format_partition(lam):
    return ",".join(map(str, lam)) if lam else "-"
