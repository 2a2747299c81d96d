#!/usr/bin/env python3
"""Run only the acceptance criteria, printing one PASS/FAIL line per criterion."""

import sys
from pathlib import Path

import pytest

if __name__ == "__main__":
    tests = Path(__file__).resolve().parents[1] / "tests" / "test_acceptance.py"
    sys.exit(pytest.main([str(tests), "-q", "-s", *sys.argv[1:]]))
