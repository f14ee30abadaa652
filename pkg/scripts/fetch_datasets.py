#!/usr/bin/env python3
"""Best-effort fetcher for the public series datasets used in our runs.

Only the UCI air-quality archive offers a stable direct download; the oil
and stock sources serve session-bound exports, so this script prints manual
instructions for them instead of scraping. Every downloaded file gets its
SHA-256 printed; pass --verify sha256=... to pin a digest on re-fetch.

Usage:
    python scripts/fetch_datasets.py [--dest data/] [--verify NAME=DIGEST ...]
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import urllib.request
from pathlib import Path

DOWNLOADS = {
    # UCI Beijing multi-site air quality archive (PRSA_Data_*): source of the
    # air-temperature and PM2.5 series (TEMP / PM2.5 columns per station).
    "beijing-air-quality.zip": (
        "https://archive.ics.uci.edu/static/public/501/"
        "beijing+multi+site+air+quality+data.zip"
    ),
}

MANUAL = {
    "wti-crude.csv": "WTI crude closing prices: export from a quotes provider "
    "(e.g. an energy-data portal) as date,close CSV",
    "brent-crude.csv": "London Brent closing prices: same providers as WTI",
    "russell2000.csv": "Russell 2000 index (^RUT) daily close: export from a "
    "finance portal as date,close CSV",
    "nasdaq.csv": "Nasdaq composite (^IXIC) daily close: export likewise",
}


def sha256_of(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dest", default="data", help="download directory (default data/)")
    parser.add_argument(
        "--verify",
        action="append",
        default=[],
        metavar="NAME=DIGEST",
        help="expected sha256 for a downloaded file; repeatable",
    )
    args = parser.parse_args()
    expected = dict(item.split("=", 1) for item in args.verify)

    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    failures = 0

    for name, url in DOWNLOADS.items():
        target = dest / name
        if target.exists():
            print(f"{name}: already present")
        else:
            print(f"{name}: fetching {url}")
            try:
                urllib.request.urlretrieve(url, target)
            except OSError as exc:
                print(f"{name}: download failed ({exc}); fetch manually from {url}")
                failures += 1
                continue
        digest = sha256_of(target)
        print(f"{name}: sha256 {digest}")
        if name in expected and expected[name] != digest:
            print(f"{name}: DIGEST MISMATCH (expected {expected[name]})")
            failures += 1

    print("\nManual exports (session-bound sources, no stable direct URL):")
    for name, hint in MANUAL.items():
        marker = "present" if (dest / name).exists() else "missing"
        print(f"  {name} [{marker}]: {hint}")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
