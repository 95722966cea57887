"""Diagrams: shadows with an over/under choice at every crossing.

A diagram is stored as a multi-component signed code: each component is
the cyclic sequence of ``(crossing, is_over)`` passes met along it, and
each crossing carries its sign.  Crossingless circle components are held
in a separate counter.  The representation supports links because the
skein recursion smooths crossings, which merges and splits components,
even though the public shadow/fertility API only deals with knots.

Sign convention: a crossing is positive when the under-strand crosses
from right to left as seen by an observer walking along the over-strand.
Equivalently, with ``chi = +1`` when the (first-visit, second-visit)
direction frame is positively oriented, the sign is ``chi`` if the first
visit is the over-pass and ``-chi`` otherwise.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from . import codes
from .errors import LengthMismatch, MalformedCode

Pass = tuple[int, int]  # (crossing id, 1 if this pass goes over)
Component = tuple[Pass, ...]


@dataclass(frozen=True)
class Diagram:
    components: tuple[Component, ...]
    signs: tuple[int, ...]
    free_loops: int = 0

    @property
    def crossings(self) -> int:
        return len(self.signs)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.free_loops

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Diagram(c={self.crossings}, comps={self.component_count})"


@dataclass(frozen=True)
class DiagramStats:
    c: int
    c_plus: int
    c_minus: int
    w: int
    s: int
    sl: int
    g: int
    components: int


def _as_bits(choices, c: int) -> tuple[int, ...]:
    if isinstance(choices, str):
        if not all(ch in "01" for ch in choices):
            raise MalformedCode(f"choice string {choices!r} must be over the alphabet 01")
        bits = tuple(int(ch) for ch in choices)
    elif isinstance(choices, int):
        if choices < 0 or choices >> c:
            raise LengthMismatch(f"choice integer {choices} out of range for {c} crossings")
        bits = tuple((choices >> i) & 1 for i in range(c))
    else:
        bits = tuple(1 if b else 0 for b in choices)
    if len(bits) != c:
        raise LengthMismatch(f"{len(bits)} choices for {c} crossings")
    return bits


def assign(shadow: codes.Shadow, choices) -> Diagram:
    """Diagram obtained by declaring, per crossing, which strand goes over.

    Choice ``1`` puts the strand of the crossing's first visit on top,
    ``0`` the second visit.  Accepts a bit string, a bit sequence, or an
    integer whose bit ``i`` is the choice at crossing ``i``.
    """
    c = shadow.crossings
    bits = _as_bits(choices, c)
    if c == 0:
        return Diagram(components=(), signs=(), free_loops=1)
    seen = [False] * c
    comp = []
    for x in shadow.word:
        if not seen[x]:
            seen[x] = True
            comp.append((x, bits[x]))
        else:
            comp.append((x, 1 - bits[x]))
    signs = tuple(shadow.chi[x] if bits[x] else -shadow.chi[x] for x in range(c))
    return Diagram(components=(tuple(comp),), signs=signs)


def choices_of(d: Diagram) -> tuple[int, ...]:
    """Per-crossing over/under bits relative to traversal order."""
    bits = [0] * d.crossings
    seen = [False] * d.crossings
    for comp in d.components:
        for x, flag in comp:
            if not seen[x]:
                seen[x] = True
                bits[x] = flag
    return tuple(bits)


def shadow_of(d: Diagram) -> codes.Shadow:
    """The underlying shadow of a knot diagram (single component)."""
    if d.free_loops + len(d.components) != 1:
        raise MalformedCode("only single-component diagrams have a knot shadow")
    if not d.components:
        return codes.shadow_from_word(())
    return codes.shadow_from_word(tuple(x for x, _ in d.components[0]))


def mirror(d: Diagram) -> Diagram:
    """Flip every over/under choice; all crossing signs negate."""
    comps = tuple(tuple((x, 1 - f) for x, f in comp) for comp in d.components)
    return Diagram(components=comps, signs=tuple(-s for s in d.signs), free_loops=d.free_loops)


def _relabel(components: tuple[Component, ...], signs: Sequence[int], drop: frozenset[int],
             free_loops: int) -> Diagram:
    keep = [x for x in range(len(signs)) if x not in drop]
    new_id = {x: i for i, x in enumerate(keep)}
    out_comps = []
    freed = free_loops
    for comp in components:
        trimmed = tuple((new_id[x], f) for x, f in comp if x not in drop)
        if trimmed:
            out_comps.append(trimmed)
        else:
            freed += 1
    return Diagram(components=tuple(out_comps), signs=tuple(signs[x] for x in keep),
                   free_loops=freed)


def switch_crossing(d: Diagram, x: int) -> Diagram:
    comps = tuple(
        tuple((y, (1 - f) if y == x else f) for y, f in comp) for comp in d.components
    )
    signs = tuple(-s if y == x else s for y, s in enumerate(d.signs))
    return Diagram(components=comps, signs=signs, free_loops=d.free_loops)


def _find_passes(d: Diagram, x: int) -> list[tuple[int, int]]:
    hits = []
    for ci, comp in enumerate(d.components):
        for p, (y, _) in enumerate(comp):
            if y == x:
                hits.append((ci, p))
    return hits


def smooth_crossing(d: Diagram, x: int) -> Diagram:
    """Replace crossing ``x`` by its orientation-respecting smoothing."""
    (ci, pi), (cj, pj) = _find_passes(d, x)
    comps = list(d.components)
    if ci == cj:
        comp = comps.pop(ci)
        if pi > pj:
            pi, pj = pj, pi
        part_a = comp[pi + 1:pj]
        part_b = comp[pj + 1:] + comp[:pi]
        comps.extend([part_a, part_b])
    else:
        a, b = comps[ci], comps[cj]
        merged = a[pi + 1:] + a[:pi] + b[pj + 1:] + b[:pj]
        comps = [comp for k, comp in enumerate(comps) if k not in (ci, cj)]
        comps.append(merged)
    return _relabel(tuple(comps), d.signs, frozenset([x]), d.free_loops)


def _r1_spot(d: Diagram) -> int | None:
    for comp in d.components:
        k = len(comp)
        for p in range(k):
            if comp[p][0] == comp[(p + 1) % k][0]:
                return comp[p][0]
    return None


def _r2_spot(d: Diagram) -> tuple[int, int] | None:
    # Two crossings adjacent along two distinct arcs, with one strand
    # passing over (or under) at both: the bigon cancels.
    other: dict[int, list[tuple[int, int]]] = {}
    for ci, comp in enumerate(d.components):
        for p, (x, _) in enumerate(comp):
            other.setdefault(x, []).append((ci, p))
    for ci, comp in enumerate(d.components):
        k = len(comp)
        for p in range(k):
            q = (p + 1) % k
            (x, fx), (y, fy) = comp[p], comp[q]
            if x == y or fx != fy:
                continue
            ox = [h for h in other[x] if h != (ci, p)][0]
            oy = [h for h in other[y] if h != (ci, q)][0]
            if ox[0] != oy[0]:
                continue
            k2 = len(d.components[ox[0]])
            if (ox[1] + 1) % k2 == oy[1] or (oy[1] + 1) % k2 == ox[1]:
                return x, y
    return None


def simplify(d: Diagram) -> Diagram:
    """Exhaustively remove crossings by untwisting kinks and cancelling
    bigons; the link type is unchanged and the crossing count never grows."""
    while True:
        x = _r1_spot(d)
        if x is not None:
            d = _relabel(d.components, d.signs, frozenset([x]), d.free_loops)
            continue
        spot = _r2_spot(d)
        if spot is not None:
            d = _relabel(d.components, d.signs, frozenset(spot), d.free_loops)
            continue
        return d


def _seifert_count(d: Diagram) -> int:
    # Global positions across components; the smoothing successor jumps to
    # the partner pass and continues along its component.
    starts = []
    total = 0
    for comp in d.components:
        starts.append(total)
        total += len(comp)
    if total == 0:
        return d.free_loops
    where: dict[int, list[int]] = {}
    comp_of = [0] * total
    idx_in = [0] * total
    gp = 0
    for ci, comp in enumerate(d.components):
        for p, (x, _) in enumerate(comp):
            where.setdefault(x, []).append(gp)
            comp_of[gp] = ci
            idx_in[gp] = p
            gp += 1
    partner = [0] * total
    for pair in where.values():
        i, j = pair
        partner[i] = j
        partner[j] = i
    nxt = [0] * total
    for gp in range(total):
        ci = comp_of[gp]
        succ = starts[ci] + (idx_in[gp] + 1) % len(d.components[ci])
        nxt[gp] = partner[succ]
    seen = bytearray(total)
    circles = 0
    for start in range(total):
        if seen[start]:
            continue
        circles += 1
        p = start
        while not seen[p]:
            seen[p] = 1
            p = nxt[p]
    return circles + d.free_loops


def stats(d: Diagram) -> DiagramStats:
    c = d.crossings
    c_plus = sum(1 for s in d.signs if s > 0)
    c_minus = c - c_plus
    w = c_plus - c_minus
    s = _seifert_count(d)
    comps = d.component_count
    sl = -s + w
    if (2 - comps - s + c) % 2:
        raise AssertionError("Seifert surface genus is not an integer")
    g = (2 - comps - s + c) // 2
    return DiagramStats(c=c, c_plus=c_plus, c_minus=c_minus, w=w, s=s, sl=sl, g=g,
                        components=comps)


def stats_shadow(shadow: codes.Shadow) -> codes.ShadowStats:
    return codes.shadow_stats(shadow)


# ---------------------------------------------------------------------------
# canonical codes


def _comp_local_best(comp: Component, signs: tuple[int, ...]) -> tuple[tuple, tuple[int, ...]]:
    """Minimal standalone emission of one oriented component and the
    rotations achieving it."""
    k = len(comp)
    best = None
    best_rots: list[int] = []
    for r in range(k):
        label: dict[int, int] = {}
        emit = []
        for t in range(k):
            x, f = comp[(r + t) % k]
            if x not in label:
                label[x] = len(label)
            emit.append((label[x], f, signs[x]))
        cand = tuple(emit)
        if best is None or cand < best:
            best = cand
            best_rots = [r]
        elif cand == best:
            best_rots.append(r)
    return best, tuple(best_rots)


def _global_emission(comps: Sequence[Component], rots: Sequence[int],
                     signs: tuple[int, ...], free_loops: int) -> tuple:
    label: dict[int, int] = {}
    emit: list = [free_loops]
    for comp, r in zip(comps, rots):
        k = len(comp)
        emit.append(-1)  # component separator
        for t in range(k):
            x, f = comp[(r + t) % k]
            if x not in label:
                label[x] = len(label)
            emit.append((label[x], f, signs[x]))
    return tuple(emit)


@functools.lru_cache(maxsize=262144)
def canonical_code(d: Diagram) -> tuple:
    """Deterministic key equal for exactly the isomorphic diagram values.

    Quotients by crossing relabelling, per-component rotation, component
    reordering and simultaneous orientation reversal of all components.
    """
    best = None
    for direction in (1, -1):
        if direction == 1:
            comps = list(d.components)
        else:
            comps = [tuple(reversed(comp)) for comp in d.components]
        locals_ = [_comp_local_best(comp, d.signs) for comp in comps]
        order = sorted(range(len(comps)), key=lambda i: locals_[i][0])
        # Components with equal standalone emissions may interleave either
        # way once labels are shared; try every order within tie groups.
        groups: list[list[int]] = []
        for i in order:
            if groups and locals_[groups[-1][0]][0] == locals_[i][0]:
                groups[-1].append(i)
            else:
                groups.append([i])
        for perm_parts in itertools.product(*(itertools.permutations(g) for g in groups)):
            seq = [i for part in perm_parts for i in part]
            rot_choices = [locals_[i][1] for i in seq]
            for rots in itertools.product(*rot_choices):
                cand = _global_emission([comps[i] for i in seq], rots, d.signs, d.free_loops)
                if best is None or cand < best:
                    best = cand
    if best is None:
        best = (d.free_loops,)
    return best


# ---------------------------------------------------------------------------
# text formats


_PD_CROSSING = re.compile(r"[Xx]\s*[\[(]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\])]")


def parse_pd(text: str) -> Diagram:
    """Parse a planar-diagram code line such as ``X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)``.

    Tuples list the four edges counterclockwise starting from the incoming
    under-strand; edge labels run 1..2n along the orientation.
    """
    tuples = [tuple(int(g) for g in m.groups()) for m in _PD_CROSSING.finditer(text)]
    if not tuples:
        raise MalformedCode(f"no crossings found in PD code {text!r}")
    n = len(tuples)
    top = 2 * n

    def succ(e: int) -> int:
        return e + 1 if e < top else 1

    enter: dict[int, tuple[int, int, int]] = {}  # edge -> (crossing, over flag, out edge)
    signs = [0] * n
    for x, (a, b, c, dd) in enumerate(tuples):
        if succ(dd) == b:
            over_in, over_out = dd, b
            signs[x] = 1
        elif succ(b) == dd:
            over_in, over_out = b, dd
            signs[x] = -1
        else:
            raise MalformedCode(f"crossing X({a},{b},{c},{dd}) has no coherent over-strand")
        for e, flag, out in ((a, 0, c), (over_in, 1, over_out)):
            if e in enter:
                raise MalformedCode(f"edge {e} enters two crossings")
            enter[e] = (x, flag, out)
    if set(enter) != set(range(1, top + 1)):
        raise MalformedCode("PD edge labels must cover 1..2n")
    comps = []
    used: set[int] = set()
    for start in range(1, top + 1):
        if start in used:
            continue
        comp = []
        e = start
        while True:
            used.add(e)
            x, flag, out = enter[e]
            comp.append((x, flag))
            e = out
            if e == start:
                break
            if e in used:
                raise MalformedCode("PD code does not close up into disjoint cycles")
        comps.append(tuple(comp))
    d = Diagram(components=tuple(comps), signs=tuple(signs))
    counts: dict[int, int] = {}
    for comp in d.components:
        for x, _ in comp:
            counts[x] = counts.get(x, 0) + 1
    if any(v != 2 for v in counts.values()):
        raise MalformedCode("each PD crossing must be visited exactly twice")
    return d


def parse_diagram(text: str) -> Diagram:
    """Parse a diagram line.

    Accepted forms: a PD code (``X(1,4,2,5) ...``), the explicit
    ``<shadow code> | <bits>`` form, or a bare shadow code followed by one
    0/1 token whose length matches the crossing count.
    """
    if _PD_CROSSING.search(text):
        return parse_pd(text)
    if "|" in text:
        code, bits = text.split("|", 1)
        return assign(codes.parse_shadow(code), bits.strip())
    parts = text.split()
    if len(parts) > 1 and set(parts[-1]) <= {"0", "1"}:
        try:
            shadow = codes.parse_shadow(" ".join(parts[:-1]))
        except MalformedCode:
            shadow = None
        if shadow is not None and shadow.crossings == len(parts[-1]):
            return assign(shadow, parts[-1])
    shadow = codes.parse_shadow(text)
    if shadow.crossings:
        raise MalformedCode(
            f"diagram line {text!r} is missing its over/under choices")
    return assign(shadow, "")


def format_diagram(d: Diagram) -> str:
    """Inverse of the ``<shadow code> | <bits>`` form for knot diagrams."""
    shadow = shadow_of(d)
    bits = "".join(str(b) for b in choices_of(d))
    return f"{shadow.key_word()} | {bits}" if bits else shadow.key_word() or "-"
