#!/usr/bin/env python3
"""Run the full invariant suite over the built-in corpus of algebras.

Usage:
    python scripts/verify_corpus.py [--skip-oracle]

Exit code 0 iff every check passes on every corpus member.
"""

import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from taured.corpus import standard_corpus
from taured.errors import NoProjInjective
from taured.reduction import verify_reduction
from taured.tilting import build_inventory, enumerate_stpairs, oracle_stpairs_via_quotients


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--skip-oracle", action="store_true")
    args = ap.parse_args()
    bad = []
    t0 = time.perf_counter()
    for name, algebra in standard_corpus().items():
        inv = build_inventory(algebra)
        pairs = enumerate_stpairs(inv)
        status = [f"{len(pairs)} pairs"]
        if not args.skip_oracle:
            oracle = oracle_stpairs_via_quotients(inv)
            if {p.key() for p in pairs} != {p.key() for p in oracle}:
                bad.append(f"{name}: oracle mismatch")
                status.append("oracle MISMATCH")
            else:
                status.append("oracle ok")
        try:
            rep = verify_reduction(algebra, name, inv=inv)
            if rep.passed:
                status.append(f"{len(rep.checks)} reduction checks ok")
            else:
                fails = [c.name for c in rep.checks if not c.passed]
                bad.append(f"{name}: {fails}")
                status.append(f"reduction FAILED {fails}")
        except NoProjInjective:
            status.append("no projective-injective")
        print(f"{name:12s} " + ", ".join(status))
    print(f"total {time.perf_counter() - t0:.1f}s")
    if bad:
        print("FAILURES:", *bad, sep="\n  ")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
