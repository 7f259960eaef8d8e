#!/usr/bin/env python3
"""Run the nine acceptance criteria and print one PASS/FAIL line each."""

import os
import subprocess
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

if __name__ == "__main__":
    cmd = [sys.executable, "-m", "pytest", os.path.join(ROOT, "tests", "test_acceptance.py"), "-q", *sys.argv[1:]]
    sys.exit(subprocess.call(cmd, cwd=ROOT))
