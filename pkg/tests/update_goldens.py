"""Regenerate tests/golden/*.out from the current command-line behavior.

Run from the repository root: `python3 tests/update_goldens.py`.
Review the diff before committing; the test suite treats these files as the
frozen contract for stdout bytes and exit codes.
"""

import pathlib
import subprocess
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
from cli_cases import CASES  # noqa: E402

GOLDEN_DIR = pathlib.Path(__file__).resolve().parent / "golden"


def main() -> int:
    GOLDEN_DIR.mkdir(exist_ok=True)
    failures = 0
    for name, argv, expected_code in CASES:
        proc = subprocess.run(
            [sys.executable, "-m", "longhom", *argv],
            capture_output=True)
        if proc.returncode != expected_code:
            print(f"{name}: exit {proc.returncode}, expected {expected_code}; "
                  f"stderr: {proc.stderr.decode().strip()}")
            failures += 1
            continue
        path = GOLDEN_DIR / f"{name}.out"
        path.write_bytes(proc.stdout)
        print(f"{name}: wrote {len(proc.stdout)} bytes")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
