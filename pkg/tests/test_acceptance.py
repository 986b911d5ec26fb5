"""Acceptance gate: every packaged self-test criterion must pass.

Each criterion prints one PASS/FAIL line; run with -s to see them. A
criterion that trips the enumeration budget guard is reported as a skip,
not a pass.
"""

import pytest

from dccodes.selftest import CRITERIA, run_criterion


@pytest.mark.parametrize("name", list(CRITERIA))
def test_acceptance_criterion(name):
    result = run_criterion(name)
    print(
        f"SELFTEST {result.name} {result.status} "
        f"{result.seconds:.2f}s {result.detail}"
    )
    if result.status == "SKIP":
        pytest.skip(result.detail)
    assert result.status == "PASS", result.detail
