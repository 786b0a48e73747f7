#!/usr/bin/env python3
"""Compare the CLI's Betti tables with the Koszul oracle on the fixtures.

Usage: cross_check.py CLI ORACLE_DIR
"""
import pathlib
import subprocess
import sys

CASES = [("line_a.txt", 2), ("zigzag_b.txt", 1), ("tree.txt", 2), ("mixed.txt", 1), ("mixed.txt", 2)]
PRIMES = [32003, 2]


def oracle_table(oracle, path, t, p):
    out = subprocess.run([sys.executable, str(oracle), "--p", str(p), "--power", str(t), str(path)],
                         check=True, capture_output=True, text=True).stdout
    return {tuple(map(int, l.split()[:2])): int(l.split()[2]) for l in out.splitlines() if not l.startswith("reg")}


def cli_table(cli, path, t, p):
    out = subprocess.run([cli, "--field", str(p), "--format", "csv", "ideal", "betti", "--power", str(t), str(path)],
                         check=True, capture_output=True, text=True).stdout
    rows = out.splitlines()[1:]
    return {(int(i), int(j)): int(b) for i, j, b in (r.split(",") for r in rows)}


def main():
    cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
    failed = 0
    for name, t in CASES:
        for p in PRIMES:
            want = oracle_table(root / "koszul_oracle.py", root / "fixtures" / name, t, p)
            got = cli_table(cli, root / "fixtures" / name, t, p)
            ok = want == got
            failed += not ok
            print(("ok  " if ok else "BAD ") + f"{name} t={t} p={p} entries={len(got)}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
