#!/usr/bin/env python3
"""Measure per-rule latency and print the summary table."""

import argparse

from comorph.bench import format_table, pin_to_one_core, run_benchmarks


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--iterations", type=int, default=10_000)
    args = parser.parse_args()
    pin_to_one_core()
    rows = run_benchmarks(iterations=args.iterations)
    print(f"iterations per component: {args.iterations}")
    print(format_table(rows))


if __name__ == "__main__":
    main()
