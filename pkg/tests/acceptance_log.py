"""PASS/FAIL lines recorded by test_acceptance.py, printed by conftest.py."""

LINES: dict[str, str] = {}
