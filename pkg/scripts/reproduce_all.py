#!/usr/bin/env python3
"""Re-run every anchored CLI computation in --verify mode.

Each command exits 0 only if the computed numbers match their frozen
expectations; the script exits with the number of failing commands.
Pass --quiet to suppress per-command output.
"""

import argparse
import subprocess
import sys
import time

COMMANDS = [
    # girth values with certification
    ["nu", "3", "2", "--verify"],
    ["nu", "3", "3", "--verify"],
    ["nu", "3", "4", "--verify"],
    ["nu", "3", "5", "--verify"],
    ["nu", "4", "2", "--verify"],
    ["nu", "4", "3", "--verify"],
    ["nu", "5", "2", "--verify"],
    # circuit census of the largest tabulated matroid
    ["matroid", "3", "5", "--verify"],
    # cyclic actions: the worked order-10 example, a two-block case,
    # the balanced order-3 case, and a degenerate all-equal case
    ["cyclic", "10", "0", "2", "4", "--verify"],
    ["cyclic", "6", "1", "1", "4", "4", "--verify"],
    ["cyclic", "3", "0", "1", "2", "--verify"],
    ["cyclic", "5", "2", "2", "2", "--verify"],
    # full residue scans (order 15 carries the frozen histogram)
    ["scan", "6", "--verify"],
    ["scan", "15", "--verify"],
    # dihedral actions across the tabulated range
    ["dihedral", "2", "--verify"],
    ["dihedral", "3", "--verify"],
    ["dihedral", "4", "--verify"],
    ["dihedral", "5", "--verify"],
    ["dihedral", "6", "--verify"],
    ["dihedral", "7", "--verify"],
    ["dihedral", "8", "--verify"],
    ["dihedral", "9", "--verify"],
    ["dihedral", "10", "--verify"],
    # failing-ideal censuses with their catalogs
    ["classify", "c1", "--verify"],
    ["classify", "c2", "--parallel", "4", "--verify"],
    # banded binomial minors
    ["toeplitz", "1", "3", "--verify"],
    ["toeplitz", "5", "9", "--verify"],
    ["toeplitz", "12", "12", "--verify"],
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quiet", action="store_true", help="only print the summary")
    args = parser.parse_args()

    failures = 0
    started = time.perf_counter()
    for command in COMMANDS:
        argv = [sys.executable, "-m", "monwlp", *command]
        t0 = time.perf_counter()
        proc = subprocess.run(argv, capture_output=True, text=True)
        elapsed = time.perf_counter() - t0
        label = " ".join(command)
        if proc.returncode == 0:
            if not args.quiet:
                print(f"ok   {label}  ({elapsed:.1f}s)")
        else:
            failures += 1
            print(f"FAIL {label}  (exit {proc.returncode})")
            for line in proc.stderr.splitlines():
                print(f"     {line}")
    total = time.perf_counter() - started
    print(f"{len(COMMANDS) - failures}/{len(COMMANDS)} commands verified in {total:.1f}s")
    return failures


if __name__ == "__main__":
    sys.exit(main())
