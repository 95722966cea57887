"""Acceptance suite: one test per criterion, printing one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s``.  The heavy sweeps are
shared through the library's internal caches, so the whole suite stays in
the minutes range on a desktop.

Criterion 7 is split: the braid/genus crossing bound (7a) holds, while
the product-form crossing bound over the diagonal verdicts (7b) fails on
one degenerate instance, which is reported honestly rather than masked;
see notes in the repository README and the test itself.
"""

import functools
import itertools
from fractions import Fraction

import pytest

from knotshadows import codes, diagram, fertility, knotbase, polynomial

import oracles

EXPECTED_FERTILE = ("0_1", "3_1", "4_1", "5_2", "6_2", "6_3", "7_6")
EXPECTED_KK_TRUE = {("3_1", 3), ("3_1", 4), ("3_1", 5), ("3_1", 6),
                    ("4_1", 4), ("4_1", 6), ("5_2", 6)}
NONTRIVIAL_SMALL = ("3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3")


@functools.cache
def _base():
    return knotbase.default_table()


@functools.cache
def _kk_verdicts() -> dict[tuple[str, int], fertility.FertilityReport]:
    base = _base()
    out = {}
    for name in NONTRIVIAL_SMALL:
        for k in range(1, 7):
            out[(name, k)] = fertility.is_mn_fertile(name, k, k, base)
    return out


def _echo(line: str) -> None:
    print(line, flush=True)


def test_criterion_1_fertile_list():
    base = _base()
    fertile = []
    for rec in sorted(base, key=lambda r: (r.crossings, r.name)):
        if fertility.is_fertile(rec.name, base).verdict:
            fertile.append(rec.name)
    ok = tuple(fertile) == EXPECTED_FERTILE
    _echo(f"ACCEPTANCE 1 fertile-list: {'PASS' if ok else 'FAIL'} "
          f"(fertile through 7 crossings: {', '.join(fertile)})")
    assert tuple(fertile) == EXPECTED_FERTILE


def test_criterion_2_kk_classification():
    verdicts = _kk_verdicts()
    mismatches = [key for key, rep in verdicts.items()
                  if rep.verdict != (key in EXPECTED_KK_TRUE)]
    true_list = sorted(k for k, rep in verdicts.items() if rep.verdict)
    _echo(f"ACCEPTANCE 2 (k,k)-classification: "
          f"{'PASS' if not mismatches else 'FAIL'} (true verdicts: {true_list})")
    assert not mismatches


def test_criterion_3_genus_bound_over_mn_verdicts():
    base = _base()
    checked = 0
    violations = []
    for rec in sorted(base, key=lambda r: (r.crossings, r.name)):
        if rec.crossings > 6:
            continue
        gc_lower = fertility.gc_interval(rec.name, base)[0]
        for n in range(0, 8):
            for m in range(0, n + 1):
                rep = fertility.is_mn_fertile(rec.name, m, n, base)
                if rep.verdict:
                    checked += 1
                    if gc_lower > n - m + 1:
                        violations.append((rec.name, m, n))
    _echo(f"ACCEPTANCE 3 genus-bound: {'PASS' if not violations else 'FAIL'} "
          f"({checked} true verdicts checked, {len(violations)} violations)")
    assert not violations


def _criteria_1_2_censuses():
    """Every census the first two criteria sweep: one per irreducible
    shadow at each knot's crossing number, plus every shadow with at most
    six crossings."""
    base = _base()
    seen = {}
    sizes = sorted({rec.crossings for rec in base})
    for n in sizes:
        for sh in codes.enumerate_shadows(n, False):
            seen[sh.canonical_key] = fertility.support_census(sh, base)
    for n in range(0, 7):
        for sh in codes.enumerate_shadows(n, True):
            seen[sh.canonical_key] = fertility.support_census(sh, base)
    return list(seen.values())


def test_criterion_4_support_chain_properties():
    base = _base()
    checked_pairs = 0
    violations = []
    for cen in _criteria_1_2_censuses():
        st = codes.shadow_stats(cen.shadow)
        for name in cen.names:
            rec = base[name]
            gc = rec.annotation("gc")
            b = rec.annotation("b")
            checked_pairs += 1
            if not (rec.crossings <= st.c and gc <= st.g and b <= st.s):
                violations.append(("observation", name, cen.shadow.canonical_key))
            for other in cen.names:
                gc_other = base[other].annotation("gc")
                if not (b <= st.s <= st.c + 1 - 2 * gc_other):
                    violations.append(("chain", name, other,
                                       cen.shadow.canonical_key))
    _echo(f"ACCEPTANCE 4 support-chain: {'PASS' if not violations else 'FAIL'} "
          f"({checked_pairs} supported pairs checked)")
    assert not violations


def test_criterion_5_invariant_suites():
    base = _base()
    diagrams = 0
    for n in range(0, 7):
        for sh in codes.enumerate_shadows(n, True):
            s_shadow = codes.shadow_stats(sh).s
            for bits in itertools.product((0, 1), repeat=n):
                d = diagram.assign(sh, bits)
                st = diagram.stats(d)
                diagrams += 1
                assert (1 - st.s + st.c) % 2 == 0
                assert st.sl % 2 == 1
                assert st.s == s_shadow
                m = diagram.mirror(d)
                assert diagram.stats(m).w == -st.w
                p = polynomial.homfly(d)
                assert polynomial.homfly(m) == p.mirror_transform()
                names = knotbase.identify(d, base)
                for name in names:
                    ref = base[name].polynomial
                    assert p in (ref, ref.mirror_transform()), \
                        f"{name} diagram polynomial off its mirror pair"
    _echo(f"ACCEPTANCE 5 invariant-suites: PASS ({diagrams} diagrams over all "
          f"shadows with up to 6 crossings)")


def test_criterion_6_oracle_equivalence():
    base = _base()
    for n in range(0, 6):
        assert len(codes.enumerate_shadows(n, True)) == \
            oracles.shadow_class_count(n), f"count mismatch at n={n}"
    knots = [rec for rec in base if rec.crossings <= 6]
    for rec in knots:
        assert polynomial.homfly(rec.diagram).terms() == \
            oracles.naive_terms(rec.diagram), rec.name
        mirrored = diagram.mirror(rec.diagram)
        assert polynomial.homfly(mirrored).terms() == \
            oracles.naive_terms(mirrored), rec.name
    _echo(f"ACCEPTANCE 6 oracle-equivalence: PASS (shadow counts n<=5; "
          f"skein-tree polynomials for {len(knots)} knots and mirrors)")


def test_criterion_7a_crossing_vs_braid_genus():
    base = _base()
    checked = 0
    violations = []
    for rec in base:
        b = rec.annotation("b")
        g = rec.annotation("g")
        if b is None or g is None or b < 2:
            continue
        if b == 2:
            bound = Fraction(2 * g + 1)
        elif b == 3:
            bound = Fraction(5, 3) * (2 * g + 2)
        else:
            bound = Fraction((2 * b - 5) * (2 * g + b - 1))
        checked += 1
        if rec.crossings > bound:
            violations.append(rec.name)
    _echo(f"ACCEPTANCE 7a crossing-vs-braid-genus: "
          f"{'PASS' if not violations else 'FAIL'} ({checked} table knots)")
    assert not violations


def test_criterion_7b_crossing_bound_from_kk_verdicts():
    """Faithful check of the product-form crossing bound on the diagonal
    verdicts of criterion 2.

    This criterion cannot pass: the (6,6)-fertile verdict for 5_2 is true
    (criterion 2, with re-checkable witnesses), yet the stated bound
    evaluates to (2*0+1)*(3*0+4) = 4 < 5 = c(5_2).  The bound's derivation
    routes braid index <= n-m+3 and genus <= n-m+1 through the
    braid-index-specific crossing estimates, and for n = m the b <= 3
    branches dominate the closed product form, giving c <= 20/3 instead;
    5_2 satisfies that corrected estimate.  See notes/decisions.md in the
    review notes for the full analysis.
    """
    base = _base()
    violations = []
    checked = 0
    for (name, k), rep in sorted(_kk_verdicts().items()):
        if not rep.verdict:
            continue
        checked += 1
        bound = (2 * (k - k) + 1) * (3 * (k - k) + 4)
        if base[name].crossings > bound:
            violations.append((name, k, base[name].crossings, bound))
    status = "PASS" if not violations else "FAIL (expected: spec-level defect)"
    _echo(f"ACCEPTANCE 7b crossing-bound-from-verdicts: {status} "
          f"({checked} verdicts, violations: {violations})")
    assert not violations, (
        "the product-form crossing bound fails on the degenerate diagonal "
        f"instance(s) {violations}; the verdicts themselves are witnessed and "
        "correct, so this is a defect in the stated bound, not in the data")


def test_criterion_8_alternating_variation():
    base = _base()
    results = []
    for name in ("4_1", "5_2", "6_2", "6_3"):
        rec = base[name]
        mds = fertility.minimal_diagrams(name, base)
        gc = rec.annotation("gc")
        v = fertility.variation_stats(mds, gc)
        cap = rec.crossings - 2 * gc + 1 - rec.annotation("b")
        assert v.scv == 0, name
        assert v.cgd == 0, name
        assert Fraction(v.wv, 2) <= cap, name
        results.append(f"{name}: scv={v.scv} cgd={v.cgd} wv={v.wv} cap={cap}")
    _echo("ACCEPTANCE 8 alternating-variation: PASS (" + "; ".join(results) + ")")
