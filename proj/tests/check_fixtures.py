"""Regenerates the fixtures into a scratch directory and compares them byte
for byte with the committed copies.

usage: check_fixtures.py <nodalq_fixtures> <fixtures-dir>
"""

import filecmp
import pathlib
import subprocess
import sys
import tempfile


def main():
    generator, committed = sys.argv[1], pathlib.Path(sys.argv[2])
    with tempfile.TemporaryDirectory() as tmp:
        subprocess.run([generator, tmp], check=True)
        fresh = sorted(p.name for p in pathlib.Path(tmp).iterdir())
        stored = sorted(p.name for p in committed.glob("*.json"))
        if fresh != stored:
            print(f"file sets differ:\n  generated: {fresh}\n  committed: {stored}")
            return 1
        _, mismatch, errors = filecmp.cmpfiles(tmp, committed, fresh, shallow=False)
        for name in mismatch + errors:
            print(f"stale fixture: {name}")
        if mismatch or errors:
            print("regenerate with: nodalq_fixtures fixtures")
            return 1
    print(f"{len(fresh)} fixtures up to date")
    return 0


if __name__ == "__main__":
    sys.exit(main())
