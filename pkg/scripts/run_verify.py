#!/usr/bin/env python3
"""Run the cross-engine verification suite and archive the JSON report.

Usage:
    python scripts/run_verify.py [--random N] [--seed S] [--out FILE]

Runs `kappatools verify --corpus small` (optionally plus N seeded random
graphs) and writes the JSON report; exits with the CLI's exit code.
"""

import argparse
import pathlib
import subprocess
import sys


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--random", type=int, default=0, metavar="N")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--out", default="verify_report.json")
    args = parser.parse_args()

    cmd = [
        sys.executable,
        "-m",
        "kappatools",
        "verify",
        "--corpus",
        "small",
        "--seed",
        str(args.seed),
        "--format",
        "json",
    ]
    if args.random:
        cmd += ["--random-corpus", str(args.random)]
    result = subprocess.run(cmd, capture_output=True)
    pathlib.Path(args.out).write_bytes(result.stdout)
    sys.stderr.write(result.stderr.decode())
    print(f"report written to {args.out} (exit {result.returncode})")
    return result.returncode


if __name__ == "__main__":
    sys.exit(main())
