#!/usr/bin/env python3
"""Regenerate the golden probe reports under tests/golden."""

import argparse
import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import structlog

from models import SpecBuilder
from utils import setup_logging
from workers import ProbeWorker

logger = structlog.get_logger(__name__)

# (spec file, system, claimed group, radius, golden file)
GOLDEN_REPORTS = [
    ("specs/star_p4.json", "star", "p4", 4, "tests/golden/star_p4_r4.txt"),
]


def main():
    """Rerun every golden probe and rewrite its report."""
    parser = argparse.ArgumentParser(description='Regenerate golden probe reports')
    parser.add_argument('--check', action='store_true',
                        help='Compare with the files on disk instead of rewriting them')
    args = parser.parse_args()

    setup_logging()
    stale = 0
    for spec, system, claimed, radius, golden in GOLDEN_REPORTS:
        worker = ProbeWorker(SpecBuilder.load(project_root / spec))
        report = worker.probe(system, claimed, radius)
        target = project_root / golden
        if args.check:
            current = target.read_bytes() if target.exists() else b""
            if current != report.to_text().encode("utf-8"):
                stale += 1
                logger.warning("golden_stale", file=golden)
            continue
        worker.write_report(report, target)
        logger.info("golden_written", file=golden, summary=report.summary())

    if stale:
        sys.exit(1)


if __name__ == '__main__':
    main()
