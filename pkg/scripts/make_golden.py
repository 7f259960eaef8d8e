#!/usr/bin/env python3
"""Regenerate tests/golden/*.out from tests/golden/cases.txt.

Review the diff before committing: golden files are the reference, not the
thing under test.
"""

import argparse
import os
import shlex
import sys

from qweyl.cli import run_captured

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA = os.path.join(ROOT, "tests", "data")
GOLDEN = os.path.join(ROOT, "tests", "golden")


def load_cases(path):
    cases = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            name, _, args = line.partition("|")
            cases.append((name.strip(), shlex.split(args)))
    return cases


def render(code, out, err):
    return f"exit: {code}\n--- stdout\n{out}--- stderr\n{err}"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="only report mismatches")
    args = ap.parse_args()
    os.chdir(DATA)
    bad = 0
    for name, argv in load_cases(os.path.join(GOLDEN, "cases.txt")):
        text = render(*run_captured(argv))
        path = os.path.join(GOLDEN, f"{name}.out")
        old = open(path, encoding="utf-8").read() if os.path.exists(path) else None
        if old == text:
            continue
        bad += 1
        print(("differs: " if args.check else "wrote: ") + name)
        if not args.check:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
    sys.exit(1 if (bad and args.check) else 0)


if __name__ == "__main__":
    main()
