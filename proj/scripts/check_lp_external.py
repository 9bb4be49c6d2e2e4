#!/usr/bin/env python3
"""Cross-check the exported covering program with an independent ILP solver.

Parses the CPLEX LP text written by `quower lp`, hands the 0/1 program to
scipy's HiGHS backend, and compares the proved optimum against the expected
cover size.  Exits 77 when scipy is unavailable so a test runner can mark
the check as skipped instead of failed.
"""

import argparse
import os
import subprocess
import sys
import tempfile

SKIP = 77


def parse_lp(text):
    """Return (origin, column labels, rows) where each row is a set of columns."""
    origin = None
    stripped = []
    for line in text.splitlines():
        cut = line.find("\\")
        if cut != -1:
            comment = line[cut + 1 :]
            at = comment.find("origin:")
            if at != -1:
                origin = comment[at + 7 :].strip()
            line = line[:cut]
        stripped.append(line)
    body = "\n".join(stripped).replace("+", " + ").replace(">=", " >= ")
    tok = body.split()

    pos = 0

    def need(what):
        if pos >= len(tok):
            raise ValueError(f"lp: expected {what}")
        return tok[pos]

    if need("Minimize").lower() != "minimize":
        raise ValueError("lp: expected Minimize")
    pos += 1
    if not need("objective row").endswith(":"):
        raise ValueError("lp: expected objective row name")
    pos += 1

    cols = []
    seen = {}
    while pos < len(tok) and tok[pos].lower() not in ("subject",):
        if tok[pos] != "+":
            name = tok[pos]
            if not name.startswith("x_"):
                raise ValueError(f"lp: bad objective term {name}")
            seen[name] = len(cols)
            cols.append(name)
        pos += 1
    if pos + 1 >= len(tok) or tok[pos + 1].lower() != "to":
        raise ValueError("lp: expected Subject To")
    pos += 2

    rows = []
    while pos < len(tok) and tok[pos].lower() not in ("binary", "binaries", "bin"):
        name = tok[pos]
        if not name.endswith(":"):
            raise ValueError(f"lp: expected row name, got {name}")
        pos += 1
        members = []
        while tok[pos] != ">=":
            if tok[pos] != "+":
                members.append(seen[tok[pos]])
            pos += 1
        pos += 1  # >=
        if tok[pos] != "1":
            raise ValueError("lp: only >= 1 rows are supported")
        pos += 1
        rows.append((name[:-1], members))
    return origin, cols, rows


def solve(cols, rows):
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp
    from scipy.sparse import lil_matrix

    a = lil_matrix((len(rows), len(cols)))
    for r, (_, members) in enumerate(rows):
        for c in members:
            a[r, c] = 1.0
    res = milp(
        c=np.ones(len(cols)),
        constraints=LinearConstraint(a.tocsr(), lb=np.ones(len(rows))),
        integrality=np.ones(len(cols)),
        bounds=Bounds(0.0, 1.0),
    )
    if res.status != 0:
        raise RuntimeError(f"milp did not converge: {res.message}")
    chosen = [cols[i] for i, v in enumerate(res.x) if v > 0.5]
    for name, members in rows:
        if not any(res.x[c] > 0.5 for c in members):
            raise RuntimeError(f"milp solution leaves row {name} uncovered")
    return chosen


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--binary", help="quower executable used to export the program")
    ap.add_argument("--lp", help="solve this LP file instead of exporting one")
    ap.add_argument("--n", type=int, default=9, help="board size to export (default 9)")
    ap.add_argument("--variant", default="punctured", choices=["full", "punctured"])
    ap.add_argument("--expect", type=int, help="required optimum (default 6 for the default export)")
    args = ap.parse_args()

    try:
        import numpy  # noqa: F401
        import scipy  # noqa: F401
    except ImportError:
        print("scipy not available, skipping external cross-check")
        return SKIP

    expect = args.expect
    if args.lp:
        text = open(args.lp).read()
    else:
        binary = args.binary or os.path.join(
            os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "build", "quower"
        )
        if not os.path.exists(binary):
            print(f"error: no executable at {binary}", file=sys.stderr)
            return 2
        with tempfile.NamedTemporaryFile(suffix=".lp", delete=False) as tmp:
            path = tmp.name
        try:
            subprocess.run(
                [binary, "lp", "--n", str(args.n), "--variant", args.variant, "--out", path],
                check=True,
            )
            text = open(path).read()
        finally:
            os.unlink(path)
        if expect is None and args.n == 9 and args.variant == "punctured":
            expect = 6

    origin, cols, rows = parse_lp(text)
    print(f"origin {origin}: {len(rows)} rows, {len(cols)} columns")
    chosen = solve(cols, rows)
    print(f"external optimum {len(chosen)}: {' '.join(sorted(chosen))}")

    if expect is not None and len(chosen) != expect:
        print(f"error: expected optimum {expect}, got {len(chosen)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
