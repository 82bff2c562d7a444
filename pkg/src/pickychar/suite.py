"""Acceptance suite: twelve exact checks, JSON/CSV report emission."""

from __future__ import annotations

import csv
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .characters import (
    centralizer_order,
    char_column,
    degree,
    irr_p_prime,
    mn_value,
)
from .localchars import (
    canonical_two_fixed_perm,
    irr_local,
    linear_count,
    phi_value_general,
)
from .partitions import (
    double_hook_shape,
    format_partition,
    hook_shape,
    partitions_of,
    q_hook_removals,
)
from .perms import Permutation
from .subnorm import sub_bruteforce, sub_shape_2
from .sylow import (
    PickyType,
    canonical_element_of_type,
    classify_picky,
    is_picky_oracle,
    p_adic_type,
    p_element_types,
)
from .towers import build_tower, nu_p, p_adic_digits


SCHEMA = "picky-char/1"

# spec'd exhaustive bounds per check family; a global cap can only lower them
DEFAULT_BOUNDS = {
    "counting": 14,
    "hooks": 4,
    "orthogonality": 9,
    "picky": 9,
    "sub_exhaustive": 8,
    "sub_random": 10,
    "local": 5,
    "theorem_b": 10,
    "theorem_a": 12,
    "phi": 10,
    "good_behaviour": 4,
}


@dataclass
class SuiteConfig:
    out_dir: str = "reports"
    primes: tuple = (2, 3, 5, 7)
    seed: int = 0
    jobs: int = 1
    max_n: int | None = None
    bounds: dict = field(default_factory=dict)

    def bound(self, family):
        limit = self.bounds.get(family, DEFAULT_BOUNDS[family])
        if self.max_n is not None:
            limit = min(limit, self.max_n)
        return limit


def _jsonable(obj):
    """Canonical JSON form: big integers become decimal strings."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > 2**53 else obj
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    return obj


def criterion_01(cfg):
    """Degree of the (4,3,1) character."""
    value = degree((4, 3, 1))
    return {"pass": value == 70, "degree": value, "expected": 70}


def criterion_02(cfg):
    """Odd-degree character count is 2^(digit sum of n in base 2)."""
    rows = []
    ok = True
    for n in range(1, cfg.bound("counting") + 1):
        count = len(irr_p_prime(n, 2))
        digits = p_adic_digits(n, 2)
        expected = 2 ** sum(i for i, d in enumerate(digits) if d)
        ok &= count == expected
        rows.append({"n": n, "count": count, "expected": expected})
    return {"pass": ok, "rows": rows}


def criterion_03(cfg):
    """Odd-degree characters of S_{2^k} are the hooks; double hooks have 2-part 2."""
    ok = True
    details = []
    kmax = cfg.bound("hooks")
    for k in range(1, kmax + 1):
        n = 2**k
        hooks = {hook_shape(a, k) for a in range(n)}
        ok &= set(irr_p_prime(n, 2)) == hooks
        details.append({"k": k, "hooks": sorted(map(format_partition, hooks))})
    for k in range(2, kmax + 1):
        n = 2**k
        half = n // 2
        shapes = {
            double_hook_shape(a, b, k)
            for a in range(half)
            for b in range(a + 1, half)
        }
        found = {
            lam
            for lam in partitions_of(n)
            if len(q_hook_removals(lam, half)) >= 2
        }
        ok &= shapes == found
        ok &= all(nu_p(degree(lam), 2) == 1 for lam in shapes)
    return {"pass": ok, "hook_sets": details}


def criterion_04(cfg):
    """Nonvanishing set and values at the (4,2,1,1) class of S_8."""
    ctype = (4, 2, 1, 1)
    col = char_column(8, ctype)
    nonzero = {lam: v for lam, v in col.items() if v}
    hooks = set(irr_p_prime(8, 2))
    expected = hooks | {(4, 2, 1, 1), (3, 3, 2)}
    ok = set(nonzero) == expected
    ok &= nonzero.get((4, 2, 1, 1)) == 2 and nonzero.get((3, 3, 2)) == -2
    ok &= all(nonzero[lam] in (1, -1) for lam in hooks)
    return {
        "pass": ok,
        "values": {format_partition(lam): v for lam, v in sorted(nonzero.items())},
    }


def criterion_05(cfg):
    """Column orthogonality: sum of squared values equals the centralizer order."""
    ok = True
    checked = 0
    for n in range(1, cfg.bound("orthogonality") + 1):
        for ctype in partitions_of(n):
            total = sum(v * v for v in char_column(n, ctype).values())
            ok &= total == centralizer_order(ctype)
            checked += 1
    return {"pass": ok, "columns": checked}


def criterion_06(cfg):
    """classify_picky agrees with the invariant-Sylow-count oracle."""
    rng = random.Random(cfg.seed)
    ok = True
    rows = []
    for p in cfg.primes:
        for n in range(1, cfg.bound("picky") + 1):
            for ctype in p_element_types(n, p):
                x = canonical_element_of_type(ctype, degree=n)
                claimed = classify_picky(ctype, p) != PickyType.NOT_PICKY
                actual = is_picky_oracle(x, p)
                agree = claimed == actual
                for _ in range(3):
                    g = Permutation(rng.sample(range(1, n + 1), n))
                    conj = g * x * g.inverse()
                    agree &= is_picky_oracle(conj, p) == actual
                ok &= agree
                rows.append(
                    {"n": n, "p": p, "type": list(ctype), "picky": actual, "agree": agree}
                )
    return {"pass": ok, "classes": len(rows), "rows": rows}


def criterion_07(cfg):
    """Subnormalizer shape order equals the stabilizer-chain brute force."""
    import itertools

    rng = random.Random(cfg.seed)
    ok = True
    checked = 0
    for n in range(4, cfg.bound("sub_exhaustive") + 1):
        base = {}
        for ctype in p_element_types(n, 2):
            x = canonical_element_of_type(ctype, degree=n)
            base[ctype] = sub_bruteforce(x, 2).order()
        for images in itertools.permutations(range(1, n + 1)):
            x = Permutation(images)
            expected = base.get(x.cycle_type())
            if expected is None:
                continue
            ok &= sub_shape_2(x).order() == expected
            checked += 1
    for n in range(9, cfg.bound("sub_random") + 1):
        types = p_element_types(n, 2)
        for _ in range(50):
            ctype = types[rng.randrange(len(types))]
            g = Permutation(rng.sample(range(1, n + 1), n))
            x = g * canonical_element_of_type(ctype, degree=n) * g.inverse()
            ok &= sub_shape_2(x).order() == sub_bruteforce(x, 2).order()
            checked += 1
    return {"pass": ok, "elements": checked}


def criterion_08(cfg):
    """Tower character completeness, linear counts, and degree sets."""
    ok = True
    rows = []
    for k in range(0, min(cfg.bound("local"), 4) + 1):
        chars = irr_local(k)
        total = sum(c.degree**2 for c in chars)
        ok &= total == 2 ** (2**k - 1)
        ok &= linear_count(chars) == 2**k
        rows.append({"k": k, "count": len(chars), "sum_deg_sq": total})
    for k in (3, 4, 5):
        if k > cfg.bound("local"):
            continue
        degrees = sorted({c.degree for c in irr_local(k)})
        expected = [2**j for j in range(2 ** (k - 2) + 2 ** (k - 3))]
        ok &= degrees == expected
        rows.append({"k": k, "degree_set": degrees})
    return {"pass": ok, "rows": rows}


def criterion_09(cfg):
    """Every 2-element class admits a verified degree/value-preserving pairing."""
    from .bijections import element_pairing, verify

    ok = True
    rows = []
    for n in range(1, cfg.bound("theorem_b") + 1):
        for ctype in p_element_types(n, 2):
            x = canonical_element_of_type(ctype, degree=n)
            rep = verify(element_pairing(x))
            ok &= rep.ok
            rows.append(
                {"n": n, "type": list(ctype), "pairs": rep.counts["pairs"], "ok": rep.ok}
            )
    return {"pass": ok, "classes": len(rows), "rows": rows}


def criterion_10(cfg):
    """Full picky-class pairings for every n and prime in range."""
    from .bijections import verify_picky

    ok = True
    rows = []
    for n in range(1, cfg.bound("theorem_a") + 1):
        for p in cfg.primes:
            rep = verify_picky(n, p)
            ok &= rep.ok
            rows.append(
                {
                    "n": n,
                    "p": p,
                    "ok": rep.ok,
                    "failed": [name for name, passed, _ in rep.checks if not passed],
                }
            )
    return {"pass": ok, "cases": len(rows), "rows": rows}


def criterion_11(cfg):
    """Closed-form local magnitudes match the character values at p-adic classes."""
    ok = True
    checked = 0
    for p in (3, 5):
        for n in range(1, cfg.bound("phi") + 1):
            ctype = p_adic_type(n, p)
            for lam in irr_p_prime(n, p):
                mag = phi_value_general(p, n, build_tower(lam, p))
                ok &= mag == abs(mn_value(lam, ctype))
                checked += 1
    return {"pass": ok, "values": checked}


def criterion_12(cfg):
    """Degree 2-parts and sign statistics at the two-fixed-point 2-power classes.

    The count of characters at the maximal 2-part follows the recursion
    count(k) = 2^(k-1) * count(k-1) with count(3) = 2 (= 2^(k-2) at k = 3).
    """
    ok = True
    rows = []
    expected_top = {3: 2, 4: 16}
    for k in (3, 4):
        if k > cfg.bound("good_behaviour"):
            continue
        n = 2**k
        y = canonical_two_fixed_perm(k)
        ytype = y.restrict_type(range(1, n + 1))
        dom = [lam for lam in partitions_of(n) if mn_value(lam, ytype) != 0]
        parts = sorted({2 ** nu_p(degree(lam), 2) for lam in dom})
        ok &= parts == [2**j for j in range(k - 1)]
        top = sum(1 for lam in dom if nu_p(degree(lam), 2) == k - 2)
        ok &= top == expected_top[k]
        pair_counts = {}
        for lam in partitions_of(n):
            if nu_p(degree(lam), 2):
                continue
            key = (mn_value(lam, (n,)), mn_value(lam, ytype))
            pair_counts[key] = pair_counts.get(key, 0) + 1
        ok &= sorted(pair_counts) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
        ok &= all(v == 2 ** (k - 2) for v in pair_counts.values())
        rows.append(
            {
                "k": k,
                "two_part_set": parts,
                "top_count": top,
                "sign_pairs": {f"{a},{b}": v for (a, b), v in sorted(pair_counts.items())},
            }
        )
    return {"pass": ok, "rows": rows}


def fault_injection_selftest():
    """Flipping one pair sign must produce a failing report."""
    from .bijections import Triple, power_pairing, verify

    pairing = power_pairing(canonical_two_fixed_perm(3))
    broken = list(pairing.triples)
    t = broken[0]
    broken[0] = Triple(t.glob, t.local, -t.eps)
    pairing.triples = tuple(broken)
    rep = verify(pairing)
    detected = not rep.ok and any(
        name == "sign-consistent" and not passed for name, passed, _ in rep.checks
    )
    return {"pass": detected, "detected_fault": detected}


CRITERIA = [
    (1, "degree_example", criterion_01),
    (2, "odd_degree_count", criterion_02),
    (3, "hook_classification", criterion_03),
    (4, "s8_two_fixed_values", criterion_04),
    (5, "orthogonality", criterion_05),
    (6, "picky_oracle", criterion_06),
    (7, "subnormalizer_order", criterion_07),
    (8, "local_completeness", criterion_08),
    (9, "two_element_pairings", criterion_09),
    (10, "picky_pairings", criterion_10),
    (11, "odd_local_values", criterion_11),
    (12, "two_part_statistics", criterion_12),
]


def run_criterion(number, name, func, cfg):
    start = time.monotonic()
    try:
        result = func(cfg)
    except Exception as exc:  # a crashed criterion is a failed criterion
        result = {"pass": False, "error": f"{type(exc).__name__}: {exc}"}
    result = {"schema": SCHEMA, "criterion": number, "name": name, **result}
    return result, time.monotonic() - start


def run_suite(cfg, stream=None):
    """Run all criteria, write one JSON per criterion plus summary.csv.

    Returns 0 if every criterion passed, 1 otherwise.
    """
    stream = stream if stream is not None else sys.stderr
    os.makedirs(cfg.out_dir, exist_ok=True)
    jobs = max(cfg.jobs, 1)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(run_criterion, number, name, func, cfg)
            for number, name, func in CRITERIA
        ]
        results = [f.result() for f in futures]
    summary = []
    all_ok = True
    for (number, name, _), (result, elapsed) in zip(CRITERIA, results):
        passed = bool(result.get("pass"))
        all_ok &= passed
        path = os.path.join(cfg.out_dir, f"c{number:02d}_{name}.json")
        with open(path, "w") as fh:
            json.dump(_jsonable(result), fh, indent=2, sort_keys=True)
            fh.write("\n")
        summary.append((number, name, "PASS" if passed else "FAIL"))
        print(
            f"CRITERION {number}: {'PASS' if passed else 'FAIL'} ({name}, {elapsed:.1f}s)",
            file=stream,
        )
    with open(os.path.join(cfg.out_dir, "summary.csv"), "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["criterion", "name", "status"])
        writer.writerows(summary)
    return 0 if all_ok else 1
