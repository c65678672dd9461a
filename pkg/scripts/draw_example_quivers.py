#!/usr/bin/env python3
"""Emit DOT and JSON for the three-vertex demo algebra and its socle quotient.

Usage:
    python scripts/draw_example_quivers.py [--out DIR]

Writes hasse.dot / hasse.json for the algebra in a3sq.alg and
hasse_quotient.dot for its reduction at the first projective-injective,
with the boundary family highlighted.
"""

import argparse
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from taured.dsl import parse_file
from taured.emit import emit_dot, json_payload
from taured.reduction import compute_nsets, find_proj_injectives, socle_quotient
from taured.tilting import build_inventory, enumerate_stpairs, hasse


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="out")
    ap.add_argument("--file", default=os.path.join(os.path.dirname(__file__), "a3sq.alg"))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    af = parse_file(args.file)
    algebra, _ = af.build()
    inv = build_inventory(algebra)
    pairs = enumerate_stpairs(inv)
    H = hasse(inv, pairs)
    tt = {inv.pair_label(p) for p in pairs if p.is_tau_tilting}
    with open(os.path.join(args.out, "hasse.dot"), "w") as f:
        f.write(emit_dot(H, double_border=tt))
    with open(os.path.join(args.out, "hasse.json"), "w") as f:
        json.dump(json_payload(af.name, inv, pairs, H), f, indent=2, ensure_ascii=False)

    v = find_proj_injectives(algebra)[0][0]
    ctx = socle_quotient(algebra, v)
    ctx.inv = inv
    nsets = compute_nsets(ctx)
    qinv = ctx.quotient_inventory()
    qpairs = enumerate_stpairs(qinv)
    QH = hasse(qinv, qpairs)
    qtt = {qinv.pair_label(p) for p in qpairs if p.is_tau_tilting}
    boundary = set()
    for mods in nsets.extend:
        p = next(p for p in qpairs if frozenset(p.modules) == mods)
        boundary.add(qinv.pair_label(p))
    with open(os.path.join(args.out, "hasse_quotient.dot"), "w") as f:
        f.write(emit_dot(QH, double_border=qtt, highlight=boundary))
    print(f"wrote {args.out}/hasse.dot ({H.n} vertices), "
          f"{args.out}/hasse_quotient.dot ({QH.n} vertices), {args.out}/hasse.json")


if __name__ == "__main__":
    main()
