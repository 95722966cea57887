#!/usr/bin/env python3
"""Regenerate the shipped prime-knot table (data/knots7.tbl).

The table is derived, not typed in: the tool sweeps every irreducible
shadow with up to seven crossings, groups the resulting diagrams by
mirror-closed polynomial fingerprint, and pins names onto the classes via
an invariant signature (first crossing number, z-degree genus bound,
v-breadth braid bound, determinant) that is unique for prime knots in
this range.  Reference diagrams are alternating minimal witnesses from
the sweep.  Every annotation written to the file is computed and then
cross-checked against the standard reference values hardcoded below; any
mismatch aborts generation.
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from knotshadows import codes, diagram, polynomial  # noqa: E402
from knotshadows.knotbase import fingerprint_of, format_gauss_code  # noqa: E402

MAX_N = 7

# (first crossing number, gc lower bound, braid lower bound, determinant) -> name
SIGNATURES = {
    (3, 1, 2, 3): "3_1",
    (4, 1, 3, 5): "4_1",
    (5, 2, 2, 5): "5_1",
    (5, 1, 3, 7): "5_2",
    (6, 1, 4, 9): "6_1",
    (6, 2, 3, 11): "6_2",
    (6, 2, 3, 13): "6_3",
    (7, 3, 2, 7): "7_1",
    (7, 1, 4, 11): "7_2",
    (7, 2, 3, 13): "7_3",
    (7, 1, 4, 15): "7_4",
    (7, 2, 3, 17): "7_5",
    (7, 2, 4, 19): "7_6",
    (7, 2, 4, 21): "7_7",
}

EXPECTED_GENUS = {"3_1": 1, "4_1": 1, "5_1": 2, "5_2": 1, "6_1": 1, "6_2": 2,
                  "6_3": 2, "7_1": 3, "7_2": 1, "7_3": 2, "7_4": 1, "7_5": 2,
                  "7_6": 2, "7_7": 2}
EXPECTED_BRAID = {"3_1": 2, "4_1": 3, "5_1": 2, "5_2": 3, "6_1": 4, "6_2": 3,
                  "6_3": 3, "7_1": 2, "7_2": 4, "7_3": 3, "7_4": 4, "7_5": 3,
                  "7_6": 4, "7_7": 4}
AMPHICHIRAL = {"4_1", "6_3"}
TWIST = {"3_1": 3, "4_1": 4, "5_2": 5, "6_1": 6, "7_2": 7}
# number of composite fingerprint classes first appearing at each sweep level
EXPECTED_UNNAMED = {6: 2, 7: 1}


def determinant(p: polynomial.Laurent2) -> int:
    val = p.evaluate_int(1, 2j)
    assert abs(val.imag) < 1e-9, "knot polynomial should evaluate to a real integer"
    return round(abs(val.real))


def is_alternating(d: diagram.Diagram) -> bool:
    comp = d.components[0]
    return all(comp[i][1] != comp[(i + 1) % len(comp)][1] for i in range(len(comp)))


def main() -> None:
    classes: dict = {}
    witnesses: dict = {}
    for n in range(0, MAX_N + 1):
        fresh = 0
        unnamed_fresh = []
        for shadow in codes.enumerate_shadows(n, False):
            for bits in itertools.product((0, 1), repeat=n):
                d = diagram.assign(shadow, bits)
                p = polynomial.homfly(d)
                fp = fingerprint_of(p)
                if fp not in classes:
                    fresh += 1
                    ib = polynomial.invariant_bounds(p)
                    sig = (n, ib.gc_lower, ib.braid_lower, determinant(p))
                    name = SIGNATURES.get(sig)
                    classes[fp] = {"sig": sig, "name": name, "first_n": n}
                    if name is None and n > 0:
                        unnamed_fresh.append(sig)
                info = classes[fp]
                name = info["name"]
                if name and info["first_n"] == n and n and is_alternating(d):
                    st = diagram.stats(d)
                    prev = witnesses.get(name)
                    cand = (st.w < 0, shadow.canonical_key, bits)
                    if prev is None or cand < prev[0]:
                        witnesses[name] = (cand, d, st, p)
        expected_unnamed = EXPECTED_UNNAMED.get(n, 0)
        if n and len(unnamed_fresh) != expected_unnamed:
            raise SystemExit(
                f"n={n}: {len(unnamed_fresh)} unnamed new classes {unnamed_fresh}, "
                f"expected {expected_unnamed}")
        print(f"n={n}: {fresh} new fingerprint classes")

    named = {info["name"] for info in classes.values() if info["name"]}
    missing = set(SIGNATURES.values()) - named
    if missing:
        raise SystemExit(f"prime classes never seen in the sweep: {sorted(missing)}")

    lines = [
        "# knotshadows table v1",
        "# columns: name crossings gauss-code annotations(key=value)",
        "# annotations: g = Seifert genus, gc = canonical genus, b = braid index,",
        "#   alt = 1 for alternating, det = determinant, twist = m for the",
        "#   m-crossing twist knot.",
        "# Generated by tools/make_table.py; every value is computed from the",
        "# shadow sweep and cross-checked against standard reference data.",
        "0_1 0 - g=0 gc=0 b=1 alt=1 det=1",
    ]
    for name in sorted(SIGNATURES.values(), key=lambda s: (int(s.split("_")[0]), s)):
        _, d, st, p = witnesses[name]
        ib = polynomial.invariant_bounds(p)
        det = determinant(p)
        g = st.g
        if g != EXPECTED_GENUS[name]:
            raise SystemExit(f"{name}: witness genus {g} != expected {EXPECTED_GENUS[name]}")
        if ib.gc_lower != EXPECTED_GENUS[name]:
            raise SystemExit(f"{name}: z-degree bound {ib.gc_lower} != genus")
        if ib.braid_lower != EXPECTED_BRAID[name]:
            raise SystemExit(f"{name}: braid bound {ib.braid_lower} != expected")
        fp = fingerprint_of(p)
        if (fp[0] == fp[1]) != (name in AMPHICHIRAL):
            raise SystemExit(f"{name}: amphichirality mismatch")
        if not is_alternating(d):
            raise SystemExit(f"{name}: reference witness is not alternating")
        ann = f"g={g} gc={g} b={EXPECTED_BRAID[name]} alt=1 det={det}"
        if name in TWIST:
            ann += f" twist={TWIST[name]}"
        lines.append(f"{name} {st.c} {format_gauss_code(d)} {ann}")

    out = REPO / "src" / "knotshadows" / "data" / "knots7.tbl"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out} ({len(lines)} lines)")


if __name__ == "__main__":
    main()
