"""Double-occurrence codes for knot shadows.

A shadow is an oriented closed curve on the sphere whose only
singularities are transversal double points.  Walking once around the
curve and writing down each crossing as it is met gives a cyclic word in
which every label occurs exactly twice.  Shadows are stored, compared
and enumerated through that word: two words describe the same shadow
exactly when they agree up to cyclic rotation, orientation reversal and
relabelling.

Realizability (does some closed curve actually trace this word?) is
decided by searching for a genus-zero rotation system: every crossing
admits two transversal cyclic orders of its four arc-ends, and the word
is realizable iff one of the ``2^n`` choices yields ``n + 2`` faces.
The chosen rotation system doubles as the embedding certificate from
which crossing signs are derived downstream.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import MalformedCode, NotRealizable

Word = tuple[int, ...]

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def normalize(labels: Sequence) -> Word:
    """Relabel a double-occurrence sequence as 0, 1, 2, ... by first appearance.

    Raises MalformedCode unless every label occurs exactly twice.
    """
    seen: dict = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    word = tuple(out)
    counts: dict[int, int] = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
    for lab, idx in seen.items():
        if counts[idx] != 2:
            raise MalformedCode(f"label {lab!r} occurs {counts[idx]} times, expected 2")
    return word


def parse_word(text: str) -> Word:
    """Parse a whitespace- or comma-separated double-occurrence word.

    The empty string (or the single token ``-``) denotes the crossingless
    circle.
    """
    tokens = text.replace(",", " ").split()
    if tokens == ["-"]:
        tokens = []
    return normalize(tokens)


def word_key(word: Word) -> str:
    """Render a word as a readable code string (letters below 26 crossings)."""
    n = len(word) // 2
    if n <= len(_LETTERS):
        return " ".join(_LETTERS[x] for x in word)
    return " ".join(str(x + 1) for x in word)


def positions(word: Word) -> list[tuple[int, int]]:
    """First and second position of each letter."""
    n = len(word) // 2
    first: list[int] = [-1] * n
    second: list[int] = [-1] * n
    for p, x in enumerate(word):
        if first[x] < 0:
            first[x] = p
        else:
            second[x] = p
    return list(zip(first, second))


def _parity_obstructed(word: Word, pos: list[tuple[int, int]]) -> bool:
    # A realizable word has an even number of symbols between the two
    # occurrences of every letter.
    return any((j - i) % 2 == 0 for i, j in pos)


def _dart_quads(word: Word, pos: list[tuple[int, int]]) -> list[tuple[int, int, int, int]]:
    # Arc p runs from position p to p+1; dart 2p is its end at word[p],
    # dart 2p+1 its end at word[p+1].  Per crossing: the darts of the
    # incoming and outgoing arcs of the first and second visit.
    length = len(word)
    quads = []
    for i, j in pos:
        a_in = 2 * ((i - 1) % length) + 1
        a_out = 2 * i
        b_in = 2 * ((j - 1) % length) + 1
        b_out = 2 * j
        quads.append((a_in, a_out, b_in, b_out))
    return quads


def _face_count(quads: list[tuple[int, int, int, int]], length: int, chi: Sequence[int]) -> int:
    sigma = [0] * (2 * length)
    for x, (a_in, a_out, b_in, b_out) in enumerate(quads):
        if chi[x] > 0:
            # counterclockwise around the crossing: first-in, second-in,
            # first-out, second-out
            sigma[a_in] = b_in
            sigma[b_in] = a_out
            sigma[a_out] = b_out
            sigma[b_out] = a_in
        else:
            sigma[a_in] = b_out
            sigma[b_out] = a_out
            sigma[a_out] = b_in
            sigma[b_in] = a_in
    seen = bytearray(2 * length)
    faces = 0
    for start in range(2 * length):
        if seen[start]:
            continue
        faces += 1
        e = start
        while not seen[e]:
            seen[e] = 1
            e = sigma[e ^ 1]
    return faces


def find_embedding(word: Word) -> tuple[int, ...] | None:
    """Lexicographically first rotation system embedding the word on the sphere.

    Returns a tuple of +-1 per crossing (the orientation of the frame
    spanned by the first- and second-visit directions), or None when the
    word is not realizable.
    """
    n = len(word) // 2
    if n == 0:
        return ()
    pos = positions(word)
    if _parity_obstructed(word, pos):
        return None
    quads = _dart_quads(word, pos)
    length = len(word)
    target = n + 2
    for chi in itertools.product((1, -1), repeat=n):
        if _face_count(quads, length, chi) == target:
            return chi
    return None


def is_realizable(word: Sequence) -> bool:
    """True iff some closed curve on the sphere traces the word."""
    return find_embedding(normalize(word)) is not None


def canonical_word(word: Word) -> Word:
    """Least normalized word over all rotations and both orientations."""
    if not word:
        return ()
    length = len(word)
    best = None
    for seq in (word, word[::-1]):
        for r in range(length):
            cand = normalize(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    return best


def canonical_relabel(word: Word) -> tuple[Word, dict[int, int], dict[int, int]]:
    """Canonical word, a crossing-id map onto it, and per-crossing visit swaps.

    ``swaps[x] == 1`` when the transformation onto the canonical word
    reverses the order in which crossing ``x``'s two visits are met, which
    flips the meaning of a first-visit-over choice bit.
    """
    if not word:
        return (), {}, {}
    length = len(word)
    best = None
    best_map: dict[int, int] = {}
    best_transform = (0, 0)
    for reverse, seq in enumerate((word, word[::-1])):
        for r in range(length):
            rotated = seq[r:] + seq[:r]
            mapping: dict[int, int] = {}
            for x in rotated:
                if x not in mapping:
                    mapping[x] = len(mapping)
            cand = tuple(mapping[x] for x in rotated)
            if best is None or cand < best:
                best = cand
                best_map = mapping
                best_transform = (reverse, r)
    reverse, r = best_transform
    first_orig: dict[int, int] = {}
    for p, x in enumerate(word):
        if x not in first_orig:
            first_orig[x] = p
    swaps: dict[int, int] = {}
    for t in range(length):
        orig = (r + t) % length if not reverse else (length - 1 - ((r + t) % length))
        x = word[orig]
        if x not in swaps:
            swaps[x] = 0 if orig == first_orig[x] else 1
    return best, best_map, swaps


def has_nugatory_crossing(word: Word) -> bool:
    """True when some letter's two occurrences are cyclically adjacent."""
    length = len(word)
    return any(word[p] == word[(p + 1) % length] for p in range(length))


@dataclass(frozen=True)
class Shadow:
    """A realizable double-occurrence word plus its embedding certificate."""

    word: Word
    chi: tuple[int, ...]
    canonical_key: str

    @property
    def crossings(self) -> int:
        return len(self.word) // 2

    def key_word(self) -> str:
        return word_key(self.word)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Shadow({self.canonical_key!r})"


def shadow_from_word(labels: Sequence) -> Shadow:
    """Build a Shadow, verifying realizability."""
    word = normalize(labels)
    chi = find_embedding(word)
    if chi is None:
        raise NotRealizable(f"word {word_key(word)!r} is not the trace of a closed curve")
    return Shadow(word=word, chi=chi, canonical_key=word_key(canonical_word(word)))


def parse_shadow(text: str) -> Shadow:
    """Parse a shadow code string; see :func:`parse_word` for the format."""
    return shadow_from_word(parse_word(text))


def canonical_form(shadow: Shadow, *, mirror: bool = False) -> str:
    """Canonical key of a shadow.

    The key is invariant under rotation, reversal and relabelling.  The
    ``mirror`` flag asks to also quotient by reflection of the curve;
    reflection does not change the order in which crossings are met, so
    code classes already absorb it and the flag only matters as run
    metadata recorded by report producers.
    """
    del mirror
    return shadow.canonical_key


@dataclass(frozen=True)
class ShadowStats:
    """Crossing count, circle count of the oriented smoothing, and genus."""

    c: int
    s: int
    g: int


def seifert_circle_count(word: Word) -> int:
    """Circles left after smoothing every crossing respecting orientation.

    Smoothing rewires the walk so that arriving at a crossing continues
    from the *other* visit's outgoing arc; the circle count is the number
    of cycles of that successor map and depends only on the word.
    """
    if not word:
        return 1
    length = len(word)
    partner = [0] * length
    for i, j in positions(word):
        partner[i] = j
        partner[j] = i
    seen = bytearray(length)
    circles = 0
    for start in range(length):
        if seen[start]:
            continue
        circles += 1
        p = start
        while not seen[p]:
            seen[p] = 1
            p = partner[(p + 1) % length]
    return circles


def shadow_stats(shadow: Shadow) -> ShadowStats:
    c = shadow.crossings
    s = seifert_circle_count(shadow.word)
    if (1 - s + c) % 2:
        raise AssertionError(f"1 - s + c odd for {shadow.canonical_key!r}")
    return ShadowStats(c=c, s=s, g=(1 - s + c) // 2)


def iter_normal_words(n: int) -> Iterator[Word]:
    """All double-occurrence words with first appearances in increasing
    order, in lexicographic order."""
    length = 2 * n
    word: list[int] = []
    open_count = [0] * n

    def rec(depth: int, used: int, open_letters: int) -> Iterator[Word]:
        if depth == length:
            yield tuple(word)
            return
        for x in range(used):
            if open_count[x] == 1:
                word.append(x)
                open_count[x] = 2
                yield from rec(depth + 1, used, open_letters - 1)
                open_count[x] = 1
                word.pop()
        if used < n:
            word.append(used)
            open_count[used] = 1
            yield from rec(depth + 1, used + 1, open_letters + 1)
            open_count[used] = 0
            word.pop()

    if n == 0:
        yield ()
        return
    yield from rec(0, 0, 0)


@functools.cache
def enumerate_shadows(n: int, allow_reducible: bool = True) -> tuple[Shadow, ...]:
    """One representative Shadow per canonical class with ``n`` crossings.

    With ``allow_reducible=False``, classes containing a nugatory crossing
    (a letter with cyclically adjacent occurrences) are skipped.  Output
    order is lexicographic in the canonical word, hence deterministic.
    """
    if n < 0:
        raise ValueError("crossing count must be non-negative")
    out = []
    for word in iter_normal_words(n):
        if not allow_reducible and has_nugatory_crossing(word):
            continue
        if n:
            pos = positions(word)
            if _parity_obstructed(word, pos):
                continue
        if canonical_word(word) != word:
            continue
        chi = find_embedding(word)
        if chi is None:
            continue
        out.append(Shadow(word=word, chi=chi, canonical_key=word_key(word)))
    return tuple(out)
