#!/usr/bin/env python3
"""Run every shipped rigidity report and optionally dump JSON artifacts.

Usage:
    python scripts/run_rigidity_reports.py [--json-dir OUT]

Prints the text rendering of each report and exits nonzero if any report
fails an assertion.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from gpcoh.scenarios import REPORT_NAMES, get_report_runner


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json-dir", type=Path, default=None, help="directory for JSON dumps")
    ns = parser.parse_args(argv)
    all_passed = True
    for name in REPORT_NAMES:
        report = get_report_runner(name)()
        print(report.to_text())
        print()
        all_passed = all_passed and report.passed
        if ns.json_dir is not None:
            ns.json_dir.mkdir(parents=True, exist_ok=True)
            out = ns.json_dir / f"{name}.json"
            out.write_text(json.dumps(report.to_dict(), indent=2, sort_keys=True))
            print(f"wrote {out}")
    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
