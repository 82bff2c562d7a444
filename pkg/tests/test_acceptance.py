"""Acceptance gate: the twelve exact criteria, one pass/fail line each."""

import sys

import pytest

from pickychar.suite import CRITERIA, SuiteConfig, fault_injection_selftest


CFG = SuiteConfig()


@pytest.mark.parametrize(
    "number,name,func", CRITERIA, ids=[f"{n:02d}_{name}" for n, name, _ in CRITERIA]
)
def test_criterion(number, name, func, capfd):
    try:
        result = func(CFG)
    except Exception as exc:
        result = {"pass": False, "error": repr(exc)}
    passed = bool(result.get("pass"))
    with capfd.disabled():
        print(f"CRITERION {number}: {'PASS' if passed else 'FAIL'}", file=sys.stderr)
    assert passed, result.get("error") or {
        k: v for k, v in result.items() if k != "rows"
    }


def test_verifier_detects_injected_fault():
    assert fault_injection_selftest()["pass"]
