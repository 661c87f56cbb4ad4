#!/usr/bin/env python3
"""Print the gate-count audit table and optionally save it as CSV."""
import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from qimrot.audit import audit_report


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=2)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--m-min", type=int, default=4)
    parser.add_argument("--m-max", type=int, default=8)
    parser.add_argument("--csv", help="write the table to this CSV path")
    args = parser.parse_args()

    report = audit_report(range(args.n_min, args.n_max + 1),
                          range(args.m_min, args.m_max + 1))
    print(report.to_table())
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report.to_csv())
        print(f"csv written to {args.csv}")
    sys.exit(0 if report.ok else 1)


if __name__ == "__main__":
    main()
