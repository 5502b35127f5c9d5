"""Run the acceptance suite and print one PASS/FAIL line per criterion."""
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main():
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-s", str(ROOT / "tests" / "test_acceptance.py")],
        capture_output=True, text=True, cwd=ROOT,
    )
    lines = [ln for ln in proc.stdout.splitlines() if ln.startswith("criterion ")]
    for ln in sorted(set(lines), key=lambda s: int(s.split()[1].rstrip(":"))):
        print(ln)
    if not lines:
        print(proc.stdout[-2000:], proc.stderr[-2000:])
    sys.exit(proc.returncode)


if __name__ == "__main__":
    main()
