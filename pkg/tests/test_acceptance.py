"""One test per acceptance criterion, with an explicit PASS/FAIL line each.

The expensive shared objects (fixture codes, neighborhoods, random walks)
are built once in a module-scoped context and reused across criteria.
"""

import pytest

from sdcodes.verification import CHECKS, VerificationContext


@pytest.fixture(scope="module")
def ctx():
    return VerificationContext()


@pytest.mark.parametrize(
    "criterion,name,fn",
    CHECKS,
    ids=[f"{num:02d}_{name}" for num, name, _ in CHECKS],
)
def test_acceptance(criterion, name, fn, ctx, capsys):
    passed, details = fn(ctx)
    with capsys.disabled():
        print(f"\nACCEPTANCE {criterion:02d} {name}: {'PASS' if passed else 'FAIL'}")
    assert passed, f"acceptance criterion {criterion} ({name}) failed: {details}"
