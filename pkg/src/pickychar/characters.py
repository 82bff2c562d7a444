"""Irreducible character values of symmetric groups via rim-hook recursion."""

from __future__ import annotations

import json
import math
import os
from collections import Counter

from .partitions import (
    as_partition,
    format_partition,
    hook_product,
    parse_partition,
    partitions_of,
    q_hook_removals,
    size,
)
from .towers import is_p_prime_degree


def as_cycle_type(ctype, n=None):
    """Validate a cycle type: weakly decreasing positive parts, summing to n if given."""
    ctype = tuple(sorted((int(c) for c in ctype), reverse=True))
    if any(c <= 0 for c in ctype):
        raise ValueError("cycle lengths must be positive")
    if n is not None and sum(ctype) != n:
        raise ValueError(f"cycle type {ctype} does not sum to {n}")
    return ctype


def degree(lam):
    """Character degree n! / (product of hook lengths)."""
    lam = as_partition(lam)
    return math.factorial(size(lam)) // hook_product(lam)


def centralizer_order(ctype):
    """prod over cycle lengths l of l^m * m! where m is the multiplicity of l."""
    ctype = as_cycle_type(ctype)
    result = 1
    for length, mult in Counter(ctype).items():
        result *= length**mult * math.factorial(mult)
    return result


def _mn(lam, remaining, cache):
    if not remaining:
        return 1 if not lam else 0
    key = (lam, remaining)
    hit = cache.get(key)
    if hit is not None:
        return hit
    q = remaining[0]
    rest = remaining[1:]
    total = 0
    for mu, height in q_hook_removals(lam, q):
        total += (-1) ** height * _mn(mu, rest, cache)
    cache[key] = total
    return total


def mn_value(lam, ctype, cache=None, largest_first=True):
    """Character value chi^lam at the class of cycle type ctype.

    The recursion strips one cycle at a time over every removable rim hook of
    that length. Cycles are consumed largest first by default; the result is
    independent of the order (tested), but the shared cache assumes a fixed
    order, so a cache must not be reused across orders.
    """
    lam = as_partition(lam)
    ctype = as_cycle_type(ctype, size(lam))
    remaining = tuple(sorted(ctype, reverse=largest_first))
    if cache is None:
        cache = {}
    return _mn(lam, remaining, cache)


def char_column(n, ctype, cache_dir=None):
    """Values of every irreducible character of S_n at one class, as a dict.

    If cache_dir (or $PICKYCHAR_CACHE_DIR) is set, the column is persisted as
    JSON and reloaded on later calls.
    """
    ctype = as_cycle_type(ctype, n)
    cache_dir = cache_dir or os.environ.get("PICKYCHAR_CACHE_DIR")
    path = None
    if cache_dir:
        name = "mncol_%d_%s.json" % (n, "_".join(map(str, ctype)))
        path = os.path.join(cache_dir, name)
        if os.path.exists(path):
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
            return {parse_partition(k): int(v) for k, v in data.items()}
    cache = {}
    column = {lam: mn_value(lam, ctype, cache=cache) for lam in partitions_of(n)}
    if path:
        os.makedirs(cache_dir, exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(
                {format_partition(k): str(v) for k, v in column.items()},
                fh,
                sort_keys=True,
            )
        os.replace(tmp, path)
    return column


def irr_x(n, ctype):
    """Partitions whose characters do not vanish at the class of ctype."""
    return {lam for lam, v in char_column(n, ctype).items() if v != 0}


def irr_p_prime(n, p):
    """Partitions of n whose character degree is coprime to p."""
    return {lam for lam in partitions_of(n) if is_p_prime_degree(lam, p)}
