#!/usr/bin/env -S uv run python
"""
Identity Verification Run

Grid-verifies the whole identity catalog, then fuzzes the general lemmas,
and exits non-zero if any check fails.

Usage:
    python3 scripts/verify_identities.py
    python3 scripts/verify_identities.py --out-dir reports/
    python3 scripts/verify_identities.py --seed 7 --count 200 --workers 4

Reports are jsonl; identical arguments give byte-identical files.
"""
import sys
import argparse
from datetime import datetime
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from horadam.cli import main as horadam_main  # noqa: E402
from horadam.config import FUZZ_COUNT, WORKERS  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description='Verify the identity catalog and fuzz the general lemmas')
    parser.add_argument('--out-dir', default='reports', help='Directory for the jsonl reports')
    parser.add_argument('--seed', type=int, default=42, help='Fuzz seed')
    parser.add_argument('--count', type=int, default=FUZZ_COUNT, help='Fuzz draws')
    parser.add_argument('--workers', type=int, default=WORKERS, help='Process pool size for the grid run')
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    print("=" * 70)
    print("IDENTITY VERIFICATION - " + datetime.now().strftime('%Y-%m-%d %H:%M:%S'))
    print("=" * 70)

    runs = [
        ('grid', ['verify', '--ids', 'all', '--format', 'jsonl',
                  '--out', str(out_dir / 'grid.jsonl'), '--workers', str(args.workers)]),
        ('fuzz', ['fuzz', '--seed', str(args.seed), '--count', str(args.count), '--format', 'jsonl',
                  '--out', str(out_dir / 'fuzz.jsonl')]),
    ]

    passed = 0
    for name, argv in runs:
        print(f"\n--- {name.upper()} ---")
        status = horadam_main(argv)
        if status == 0:
            passed += 1
            print("    ✓ Success")
        else:
            print(f"    ✗ Failed (exit {status})")

    print("\n" + "=" * 70)
    print(f"SUMMARY: {passed}/{len(runs)} successful")
    print("=" * 70)
    return 0 if passed == len(runs) else 1


if __name__ == "__main__":
    sys.exit(main())
