"""Run the acceptance criteria and print one PASS/FAIL line per criterion."""
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def main():
    cmd = [sys.executable, "-m", "pytest", str(ROOT / "tests" / "test_acceptance.py"), "-q", "-s",
           *sys.argv[1:]]
    proc = subprocess.run(cmd, cwd=ROOT, capture_output=True, text=True)
    lines = [line for line in proc.stdout.splitlines() if line.startswith("ACCEPTANCE")]
    print("\n".join(lines))
    if proc.returncode:
        print(proc.stdout[-4000:], file=sys.stderr)
    sys.exit(proc.returncode)


if __name__ == "__main__":
    main()
