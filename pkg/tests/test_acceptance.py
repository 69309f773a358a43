"""Release gate: one test per acceptance criterion, each printing a pass/fail line.

All checks are exact; each criterion also enforces its wall-clock budget.
Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines, or via
the CLI as ``springerfiber selftest``.
"""

import pytest

from springerfiber import acceptance


@pytest.mark.parametrize(
    "spec", acceptance.CRITERIA, ids=[f"criterion-{c.number}" for c in acceptance.CRITERIA]
)
def test_criterion(spec):
    result = acceptance.run_criterion(spec)
    print(result.line())
    assert result.passed, result.detail
