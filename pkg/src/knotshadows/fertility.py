"""Support censuses, fertility predicates and inequality verifiers.

A shadow *supports* a knot when some over/under assignment of its
crossings yields a diagram of that knot.  The census of a shadow sweeps
every assignment (half of them, since flipping all choices mirrors the
diagram and identification is mirror-closed) and identifies each result
against the knot table.  Censuses of shadows with a nugatory crossing
delegate to the untwisted word, because removing a kink never changes
the knot an assignment produces.

All reports are deterministic: sweeps run in assignment order, shadows
are handled in canonical-key order, and worker pools only change wall
time, never output.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import codes
from .codes import Shadow, canonical_word, enumerate_shadows, shadow_from_word
from .diagram import Diagram, assign, canonical_code, stats
from .errors import EmptySet, MissingAnnotation, ResourceLimit, TableInsufficient
from .knotbase import KnotBase, fingerprint_of, fingerprint_hash
from .polynomial import homfly, invariant_bounds

DEFAULT_HOMFLY_CEILING = 16
DEFAULT_SHADOW_CEILING = 8

# twist-knot data consumed by the self-linking verifier: for the
# m-crossing twist knot the extremal diagrams have m positive crossings
# (m odd; m-2 positive and 2 negative when m is even) and in both cases
# the self-linking bound collapses to 2*c(S) - 2*m + 1.


@dataclass(frozen=True)
class SupportCensus:
    """Knots obtainable from one shadow, with one witness assignment each.

    ``witnesses`` maps knot names (mirror classes) to the first assignment
    realizing them; ``counts`` gives the number of assignments per name
    over the full ``2^c`` sweep; hashes of fingerprints absent from the
    table are listed under ``unidentified``.  Witness bits are expressed
    on the canonical representative ``shadow``.
    """

    shadow: Shadow
    witnesses: Mapping[str, str]
    counts: Mapping[str, int]
    unidentified: tuple[str, ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(sorted(self.witnesses))


_census_cache: dict[tuple, SupportCensus] = {}


def clear_census_cache() -> None:
    _census_cache.clear()


def _nugatory_letter(word: tuple[int, ...]) -> int | None:
    length = len(word)
    for p in range(length):
        if word[p] == word[(p + 1) % length]:
            return word[p]
    return None


def _lift_bits(bits: str, sub_id_of: list[int], flip: list[int], removed: int) -> str:
    # Untwisting a kink never changes the knot, so a witness on the
    # reduced shadow lifts by giving the removed crossing either choice.
    out = ["0"] * len(sub_id_of)
    for old in range(len(sub_id_of)):
        if old != removed:
            out[old] = str(int(bits[sub_id_of[old]]) ^ flip[old])
    return "".join(out)


def support_census(shadow: Shadow, base: KnotBase, *,
                   ceiling: int = DEFAULT_HOMFLY_CEILING) -> SupportCensus:
    """Census of every over/under assignment of a shadow.

    Results are cached per canonical class; the returned witnesses refer
    to the canonical representative.
    """
    key = (shadow.canonical_key, base.digest, ceiling)
    hit = _census_cache.get(key)
    if hit is not None:
        return hit
    canon = shadow if shadow.key_word() == shadow.canonical_key else \
        shadow_from_word(canonical_word(shadow.word))
    census = _census_of(canon, base, ceiling)
    _census_cache[key] = census
    return census


def _census_of(shadow: Shadow, base: KnotBase, ceiling: int) -> SupportCensus:
    word = shadow.word
    c = shadow.crossings
    kink = _nugatory_letter(word)
    if kink is not None:
        reduced_seq = [y for y in word if y != kink]
        sub_shadow = shadow_from_word(reduced_seq)
        sub = support_census(sub_shadow, base, ceiling=ceiling)
        # Sub-census witnesses live on the canonical representative of the
        # reduced word; compose original id -> reduced id -> canonical id
        # and flip bits where the canonicalization reverses visit order.
        order: dict[int, int] = {}
        for y in reduced_seq:
            if y not in order:
                order[y] = len(order)
        _, canon_of, swaps = codes.canonical_relabel(codes.normalize(reduced_seq))
        sub_id_of = [-1] * c
        flip = [0] * c
        for x in range(c):
            if x != kink:
                rid = order[x]
                sub_id_of[x] = canon_of[rid]
                flip[x] = swaps[rid]
        witnesses = {nm: _lift_bits(bits, sub_id_of, flip, kink)
                     for nm, bits in sub.witnesses.items()}
        counts = {nm: 2 * v for nm, v in sub.counts.items()}
        return SupportCensus(shadow=shadow, witnesses=witnesses, counts=counts,
                             unidentified=sub.unidentified)
    witnesses: dict[str, str] = {}
    counts: dict[str, int] = {}
    unid: set[str] = set()
    if c == 0:
        sweep: Iterable[int] = (0,)
        weight = 1
    else:
        sweep = range(1 << (c - 1))
        weight = 2
    for packed in sweep:
        bits = tuple((packed >> i) & 1 for i in range(c))
        p = homfly(assign(shadow, bits), ceiling=ceiling)
        fp = fingerprint_of(p)
        names = base.names_for(fp)
        if names:
            bits_str = "".join(map(str, bits))
            for nm in names:
                counts[nm] = counts.get(nm, 0) + weight
                witnesses.setdefault(nm, bits_str)
        else:
            unid.add(fingerprint_hash(fp))
    return SupportCensus(shadow=shadow, witnesses=witnesses, counts=counts,
                         unidentified=tuple(sorted(unid)))


_parallel_base: KnotBase | None = None
_parallel_ceiling = DEFAULT_HOMFLY_CEILING


def _census_task(shadow: Shadow) -> SupportCensus:
    return support_census(shadow, _parallel_base, ceiling=_parallel_ceiling)


def census_many(shadows: Sequence[Shadow], base: KnotBase, *,
                ceiling: int = DEFAULT_HOMFLY_CEILING,
                workers: int = 1) -> list[SupportCensus]:
    """Censuses for many shadows, optionally fanned out over processes.

    The output order follows the input order regardless of worker count.
    """
    if workers <= 1 or len(shadows) < 4:
        return [support_census(s, base, ceiling=ceiling) for s in shadows]
    global _parallel_base, _parallel_ceiling
    _parallel_base, _parallel_ceiling = base, ceiling
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers) as pool:
        results = pool.map(_census_task, shadows)
    _parallel_base = None
    for census in results:
        _census_cache.setdefault(
            (census.shadow.canonical_key, base.digest, ceiling), census)
    return results


def supports(shadow: Shadow, name: str, base: KnotBase, *,
             ceiling: int = DEFAULT_HOMFLY_CEILING) -> tuple[bool, str | None]:
    """Does the shadow support the named knot?  Returns (verdict, witness bits).

    Uses the cached census when available, otherwise sweeps assignments
    with an early exit on the first hit.
    """
    key = (shadow.canonical_key, base.digest, ceiling)
    census = _census_cache.get(key)
    if census is not None:
        bits = census.witnesses.get(name)
        return (bits is not None), bits
    rec = base.get(name)
    if rec is None:
        return False, None
    canon = shadow_from_word(canonical_word(shadow.word))
    c = canon.crossings
    sweep = (0,) if c == 0 else range(1 << (c - 1))
    for packed in sweep:
        bits = tuple((packed >> i) & 1 for i in range(c))
        p = homfly(assign(canon, bits), ceiling=ceiling)
        if fingerprint_of(p) == rec.fingerprint:
            return True, "".join(map(str, bits))
    return False, None


# ---------------------------------------------------------------------------
# minimal diagrams and variation statistics


@dataclass(frozen=True)
class MinimalDiagram:
    shadow_key: str
    bits: str
    s: int
    w: int
    g: int
    poly_key: str  # exact polynomial, distinguishing the two mirror classes


def minimal_diagrams(name: str, base: KnotBase, *,
                     ceiling: int = DEFAULT_HOMFLY_CEILING,
                     shadow_ceiling: int = DEFAULT_SHADOW_CEILING,
                     chirality: str = "canonical") -> tuple[MinimalDiagram, ...]:
    """All minimum-crossing diagrams of a knot, one per diagram class.

    Sweeps every irreducible shadow with c(K) crossings and keeps the
    assignments whose fingerprint matches; duplicates related by a
    symmetry of the shadow word are removed via canonical diagram codes.
    ``chirality="canonical"`` restricts to one mirror class (the one whose
    serialized polynomial is smallest); ``"both"`` keeps everything.
    """
    rec = _lookup(base, name)
    ck = rec.crossings
    if ck > shadow_ceiling:
        raise ResourceLimit(f"minimal diagrams of {name} need a {ck}-crossing sweep")
    seen: set = set()
    found: list[MinimalDiagram] = []
    for shadow in enumerate_shadows(ck, False):
        for packed in range(1 << ck):
            bits = tuple((packed >> i) & 1 for i in range(ck))
            d = assign(shadow, bits)
            p = homfly(d, ceiling=ceiling)
            if fingerprint_of(p) != rec.fingerprint:
                continue
            code = canonical_code(d)
            if code in seen:
                continue
            seen.add(code)
            st = stats(d)
            found.append(MinimalDiagram(
                shadow_key=shadow.canonical_key,
                bits="".join(map(str, bits)),
                s=st.s, w=st.w, g=st.g, poly_key=p.serialize()))
    if chirality == "both" or not found:
        return tuple(found)
    chosen = min(md.poly_key for md in found)
    return tuple(md for md in found if md.poly_key == chosen)


@dataclass(frozen=True)
class VariationStats:
    """Spreads of Seifert-circle count, writhe and genus over a set of
    minimum-crossing diagrams."""

    scv: int
    wv: int
    cgd: int
    exact: bool
    diagrams: int


def variation_stats(diagrams: Sequence[MinimalDiagram], gc: int, *,
                    complete: bool = True) -> VariationStats:
    if not diagrams:
        raise EmptySet("variation statistics need at least one diagram")
    s_values = [d.s for d in diagrams]
    w_values = [d.w for d in diagrams]
    g_values = [d.g for d in diagrams]
    spread_w = max(w_values) - min(w_values)
    if spread_w % 2:
        raise AssertionError("writhe parity varies across minimal diagrams")
    return VariationStats(
        scv=max(s_values) - min(s_values),
        wv=spread_w // 2,
        cgd=min(g_values) - gc,
        exact=complete,
        diagrams=len(diagrams),
    )


def gc_interval(name: str, base: KnotBase,
                extra_diagrams: Sequence[MinimalDiagram] = ()) -> tuple[int, int]:
    """[polynomial lower bound, least observed diagram genus]."""
    rec = _lookup(base, name)
    lo = invariant_bounds(rec.polynomial).gc_lower
    hi = stats(rec.diagram).g
    for md in extra_diagrams:
        hi = min(hi, md.g)
    if lo > hi:
        raise AssertionError(f"genus interval empty for {name}")
    return lo, hi


# ---------------------------------------------------------------------------
# fertility predicates


@dataclass(frozen=True)
class FertilityReport:
    knot: str
    predicate: str
    verdict: bool
    witnesses: Mapping[str, Mapping[str, str]]
    obstruction: str | None
    targets: tuple[str, ...]
    config: Mapping[str, object]


def _targets(base: KnotBase, max_c: int, include_unknot: bool,
             strict: bool) -> list[str]:
    bound = max_c - 1 if strict else max_c
    out = []
    for rec in sorted(base, key=lambda r: (r.crossings, r.name)):
        if rec.crossings == 0:
            if include_unknot and (bound >= 0):
                out.append(rec.name)
        elif 3 <= rec.crossings <= bound:
            out.append(rec.name)
    return out


def _require_coverage(base: KnotBase, max_c: int) -> None:
    if max_c >= 3 and not base.covers_primes_through(max_c):
        raise TableInsufficient(
            f"table {base.version!r} does not contain every prime knot "
            f"through {max_c} crossings")


def _lookup(base: KnotBase, name: str):
    rec = base.get(name)
    if rec is None:
        raise TableInsufficient(f"knot {name!r} is not in the table")
    return rec


def is_fertile(name: str, base: KnotBase, *,
               include_unknot: bool = True,
               ceiling: int = DEFAULT_HOMFLY_CEILING,
               shadow_ceiling: int = DEFAULT_SHADOW_CEILING,
               workers: int = 1) -> FertilityReport:
    """Does every prime knot below c(K) appear on some minimal shadow of K?"""
    rec = _lookup(base, name)
    ck = rec.crossings
    _require_coverage(base, ck - 1)
    if ck > shadow_ceiling:
        raise ResourceLimit(f"fertility of {name} needs a {ck}-crossing sweep")
    shadows = enumerate_shadows(ck, False)
    censuses = census_many(list(shadows), base, ceiling=ceiling, workers=workers)
    mine = [c for c in censuses if name in c.witnesses]
    targets = _targets(base, ck, include_unknot, strict=True)
    witnesses: dict[str, dict[str, str]] = {}
    obstruction = None
    for target in targets:
        hit = next((c for c in mine if target in c.witnesses), None)
        if hit is None:
            if obstruction is None:
                obstruction = target
        else:
            witnesses[target] = {
                "shadow": hit.shadow.canonical_key,
                "bits": hit.witnesses[target],
                "knot_bits": hit.witnesses[name],
            }
    return FertilityReport(
        knot=name, predicate="fertile", verdict=obstruction is None,
        witnesses=witnesses, obstruction=obstruction, targets=tuple(targets),
        config={"include_unknot": include_unknot, "ceiling": ceiling,
                "table": base.digest, "minimal_shadows": len(mine)})


def is_mn_fertile(name: str, m: int, n: int, base: KnotBase, *,
                  allow_reducible: bool = True,
                  include_unknot: bool = True,
                  ceiling: int = DEFAULT_HOMFLY_CEILING,
                  shadow_ceiling: int = DEFAULT_SHADOW_CEILING,
                  workers: int = 1) -> FertilityReport:
    """Is there, for every prime K' with c(K') <= m, an n-crossing shadow
    supporting both K and K'?"""
    rec = _lookup(base, name)
    _require_coverage(base, m)
    if n > shadow_ceiling:
        raise ResourceLimit(f"(m,n)-fertility at n={n} exceeds the shadow ceiling "
                            f"{shadow_ceiling}")
    if n < 0:
        raise ValueError("n must be non-negative")
    shadows = enumerate_shadows(n, allow_reducible)
    censuses = census_many(list(shadows), base, ceiling=ceiling, workers=workers)
    mine = [c for c in censuses if name in c.witnesses]
    targets = _targets(base, m, include_unknot, strict=False)
    witnesses: dict[str, dict[str, str]] = {}
    obstruction = None
    for target in targets:
        hit = next((c for c in mine if target in c.witnesses), None)
        if hit is None:
            if obstruction is None:
                obstruction = target
        else:
            witnesses[target] = {
                "shadow": hit.shadow.canonical_key,
                "bits": hit.witnesses[target],
                "knot_bits": hit.witnesses[name],
            }
    return FertilityReport(
        knot=name, predicate=f"({m},{n})-fertile", verdict=obstruction is None,
        witnesses=witnesses, obstruction=obstruction, targets=tuple(targets),
        config={"m": m, "n": n, "allow_reducible": allow_reducible,
                "include_unknot": include_unknot, "ceiling": ceiling,
                "table": base.digest})


def fertility_number(name: str, base: KnotBase, *, m_max: int | None = None,
                     allow_reducible: bool = True,
                     include_unknot: bool = True,
                     ceiling: int = DEFAULT_HOMFLY_CEILING,
                     shadow_ceiling: int = DEFAULT_SHADOW_CEILING,
                     workers: int = 1) -> tuple[int, dict[int, FertilityReport]]:
    """Largest m with the (m, c(K)) predicate true, scanning m upward.

    The default bound is max(c(K), 2): prime targets cannot exceed the
    shadow size, but the predicate is vacuously true below three
    crossings.  Returns the number together with the per-m reports.
    """
    rec = _lookup(base, name)
    ck = rec.crossings
    if m_max is None:
        m_max = max(ck, 2)
    reports: dict[int, FertilityReport] = {}
    best = -1
    for m in range(0, m_max + 1):
        rep = is_mn_fertile(name, m, ck, base,
                            allow_reducible=allow_reducible,
                            include_unknot=include_unknot,
                            ceiling=ceiling, shadow_ceiling=shadow_ceiling,
                            workers=workers)
        reports[m] = rep
        if not rep.verdict:
            break
        best = m
    if best < 0:
        raise AssertionError(f"{name} does not even support itself at m=0")
    return best, reports


# ---------------------------------------------------------------------------
# inequality verification


@dataclass(frozen=True)
class SupportRow:
    """One shadow observed to support the knot, with its statistics and
    the full name census."""

    shadow_key: str
    c: int
    s: int
    g: int
    names: tuple[str, ...]


@dataclass(frozen=True)
class KnotAnalysis:
    name: str
    crossings: int
    minimal_all: tuple[MinimalDiagram, ...]
    minimal: tuple[MinimalDiagram, ...]
    variation: VariationStats | None
    gc: tuple[int, int]
    support_rows: tuple[SupportRow, ...]
    fertile: FertilityReport | None
    fnumber: int | None
    mn_reports: Mapping[tuple[int, int], FertilityReport]


def analyze_knot(name: str, base: KnotBase, *,
                 mn_pairs: Sequence[tuple[int, int]] = (),
                 include_fertility: bool = True,
                 ceiling: int = DEFAULT_HOMFLY_CEILING,
                 shadow_ceiling: int = DEFAULT_SHADOW_CEILING,
                 workers: int = 1) -> KnotAnalysis:
    """Gather the per-knot computations the bound verifier consumes."""
    rec = _lookup(base, name)
    ck = rec.crossings
    minimal_all = minimal_diagrams(name, base, ceiling=ceiling,
                                   shadow_ceiling=shadow_ceiling, chirality="both")
    chosen = min((md.poly_key for md in minimal_all), default=None)
    minimal = tuple(md for md in minimal_all if md.poly_key == chosen)
    interval = gc_interval(name, base, minimal_all)
    gc_ann = rec.annotation("gc")
    gc_exact = gc_ann if gc_ann is not None else (
        interval[0] if interval[0] == interval[1] else None)
    variation = None
    if minimal and gc_exact is not None:
        variation = variation_stats(minimal, gc_exact, complete=True)
    rows = []
    for shadow in enumerate_shadows(ck, False):
        census = support_census(shadow, base, ceiling=ceiling)
        if name in census.witnesses:
            st = codes.shadow_stats(census.shadow)
            rows.append(SupportRow(shadow_key=census.shadow.canonical_key,
                                   c=st.c, s=st.s, g=st.g, names=census.names))
    fertile = None
    fnumber = None
    mn_reports: dict[tuple[int, int], FertilityReport] = {}
    if include_fertility and ck <= shadow_ceiling:
        fertile = is_fertile(name, base, ceiling=ceiling,
                             shadow_ceiling=shadow_ceiling, workers=workers)
        fnumber, scans = fertility_number(name, base, ceiling=ceiling,
                                          shadow_ceiling=shadow_ceiling,
                                          workers=workers)
        for m, rep in scans.items():
            mn_reports[(m, ck)] = rep
    for m, n in mn_pairs:
        key = (m, n)
        if key not in mn_reports:
            mn_reports[key] = is_mn_fertile(name, m, n, base, ceiling=ceiling,
                                            shadow_ceiling=shadow_ceiling,
                                            workers=workers)
    return KnotAnalysis(name=name, crossings=ck, minimal_all=minimal_all,
                        minimal=minimal, variation=variation, gc=interval,
                        support_rows=tuple(rows), fertile=fertile,
                        fnumber=fnumber, mn_reports=mn_reports)


@dataclass(frozen=True)
class BoundEntry:
    key: str
    description: str
    left: object
    right: object
    holds: bool
    tight: bool
    context: Mapping[str, object]


@dataclass(frozen=True)
class BoundsReport:
    knot: str
    entries: tuple[BoundEntry, ...]

    @property
    def all_hold(self) -> bool:
        return all(e.holds for e in self.entries)


def _entry(key: str, description: str, left, right, **context) -> BoundEntry:
    return BoundEntry(key=key, description=description, left=left, right=right,
                      holds=left <= right, tight=left == right, context=context)


def _annotation(base: KnotBase, name: str, key: str) -> int:
    value = base[name].annotation(key)
    if value is None:
        raise MissingAnnotation(f"{name} has no exact {key!r} annotation")
    return value


def verify_bounds(name: str, base: KnotBase, results: KnotAnalysis) -> BoundsReport:
    """Check every applicable inequality on the computed data.

    Inequalities quantified over shadows or verdict pairs report their
    worst observed instance; ``tight`` flags equality there.
    """
    rec = _lookup(base, name)
    ck = rec.crossings
    entries: list[BoundEntry] = []
    rows = results.support_rows
    b_ann = _annotation(base, name, "b")
    g_ann = _annotation(base, name, "g")
    gc_ann = _annotation(base, name, "gc")

    if rows:
        worst = min(rows, key=lambda r: r.c)
        entries.append(_entry(
            "crossing-min", "knot crossing number at most supporting shadow size",
            ck, worst.c, shadow=worst.shadow_key))
        worst = min(rows, key=lambda r: r.g)
        entries.append(_entry(
            "shadow-genus", "canonical genus at most supporting shadow genus",
            gc_ann, worst.g, shadow=worst.shadow_key))
        worst = min(rows, key=lambda r: r.s)
        entries.append(_entry(
            "braid-seifert", "braid index at most shadow Seifert circle count",
            b_ann, worst.s, shadow=worst.shadow_key))
        pair_worst = None
        for row in rows:
            for other in row.names:
                gc_other = _annotation(base, other, "gc")
                left, right = row.s, row.c + 1 - 2 * gc_other
                if pair_worst is None or left - right > pair_worst[0] - pair_worst[1]:
                    pair_worst = (left, right, row.shadow_key, other)
        if pair_worst:
            entries.append(_entry(
                "cosupport-seifert",
                "Seifert circles capped by shadow size minus twice a co-supported genus",
                pair_worst[0], pair_worst[1],
                shadow=pair_worst[2], cosupported=pair_worst[3]))

    # The fertility bounds are proved by co-supporting a twist or torus
    # knot with crossing number m, so they only constrain verdicts with a
    # prime target in range: m >= 3.
    true_mn = [(m, n) for (m, n), rep in sorted(results.mn_reports.items())
               if rep.verdict and m >= 3]
    if true_mn:
        def braid_bound(mn):
            m, n = mn
            return n - m + 2 if m % 2 else n - m + 3
        worst_mn = min(true_mn, key=braid_bound)
        entries.append(_entry(
            "fertile-braid", "braid index bound from an (m,n)-fertile verdict",
            b_ann, braid_bound(worst_mn), m=worst_mn[0], n=worst_mn[1]))
        worst_mn = min(true_mn, key=lambda mn: mn[1] - mn[0])
        entries.append(_entry(
            "cosupport-genus", "canonical genus bound from an (m,n)-fertile verdict",
            results.gc[0], worst_mn[1] - worst_mn[0] + 1,
            m=worst_mn[0], n=worst_mn[1]))
        def crossing_bound(mn):
            m, n = mn
            return (2 * (n - m) + 1) * (3 * (n - m) + 4)
        worst_mn = min(true_mn, key=crossing_bound)
        entries.append(_entry(
            "crossing-fertility", "crossing number bound from an (m,n)-fertile verdict",
            ck, crossing_bound(worst_mn), m=worst_mn[0], n=worst_mn[1]))

    twist = rec.annotation("twist")
    if twist is not None and rows:
        worst = max(rows, key=lambda r: (2 * r.g - 1) - (2 * r.c - 2 * twist + 1))
        entries.append(_entry(
            "twist-selflink",
            "shadow genus capped via the twist knot's extremal self-linking data",
            2 * worst.g - 1, 2 * worst.c - 2 * twist + 1, shadow=worst.shadow_key))

    if results.fnumber is not None and results.fnumber >= 3:
        entries.append(_entry(
            "fnumber-genus", "fertility number at most c(K)+1-gc(K)",
            results.fnumber, ck + 1 - gc_ann))
        if results.variation is not None:
            v = results.variation
            entries.append(_entry(
                "fnumber-spread",
                "fertility number at most (2c(K)+4+scv+2cgd)/3",
                Fraction(results.fnumber),
                Fraction(2 * ck + 4 + v.scv + 2 * v.cgd, 3)))

    if b_ann >= 2:
        if b_ann == 2:
            qbm = Fraction(2 * g_ann + 1)
        elif b_ann == 3:
            qbm = Fraction(5, 3) * (2 * g_ann + 2)
        else:
            qbm = Fraction((2 * b_ann - 5) * (2 * g_ann + b_ann - 1))
        entries.append(_entry(
            "crossing-braid-genus",
            "crossing number bound from braid index and genus",
            Fraction(ck), qbm))

    if results.variation is not None:
        v = results.variation
        spread_cap = ck - 2 * gc_ann + 1 - b_ann
        entries.append(_entry(
            "seifert-variation", "Seifert circle variation bound", v.scv, spread_cap))
        entries.append(_entry(
            "writhe-variation", "half writhe variation bound",
            Fraction(v.wv, 2), Fraction(spread_cap)))
    if len(results.minimal) >= 1:
        worst_pair = None
        mds = results.minimal
        for i in range(len(mds)):
            for j in range(i, len(mds)):
                left = abs(mds[i].w - mds[j].w)
                right = mds[i].s + mds[j].s - 2 * b_ann
                if worst_pair is None or left - right > worst_pair[0] - worst_pair[1]:
                    worst_pair = (left, right)
        entries.append(_entry(
            "writhe-pairs",
            "writhe difference of two minimal diagrams capped by their Seifert "
            "circle counts minus twice the braid index",
            worst_pair[0], worst_pair[1]))

    return BoundsReport(knot=name, entries=tuple(entries))
