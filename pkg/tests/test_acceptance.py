"""Runs the eight acceptance criteria at their stated limits; one PASS/FAIL
line per criterion appears in the terminal summary."""
import pytest

from jumploci.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"criterion_{c.number}")
def test_criterion(criterion, corpus, acceptance_log):
    result = run_criterion(criterion, corpus)
    acceptance_log.append(result.line())
    assert result.passed, result.checks
    assert result.within_limit, result.line()
