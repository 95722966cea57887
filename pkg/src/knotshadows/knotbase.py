"""Prime-knot table: loading, fingerprints, identification.

A table is a text file, one record per line::

    # knotshadows table v1
    3_1 3 O1+U2+O3+U1+O2+U3+ g=1 gc=1 b=2 alt=1 det=3 twist=3

Fields: name, crossing number, a reference diagram as a signed oriented
Gauss code (``-`` for the crossingless unknot), then ``key=value``
annotations.  Identification compares mirror-closed fingerprints: the
unordered pair of a diagram's polynomial and its mirror transform.  A
match is therefore a knot-up-to-mirror claim, and it is a fingerprint
claim only (the table is known collision-free, and collisions in an
extended table are reported at load time rather than silently merged).
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Mapping

from .diagram import Diagram, choices_of, shadow_of
from .errors import DuplicateName, MalformedCode, ParseError
from .polynomial import Laurent2, homfly, invariant_bounds

TABLE_HEADER = "# knotshadows table v1"

Fingerprint = tuple[str, str]

# Prime knots per crossing number; used for coverage checks.
PRIME_COUNTS = {0: 0, 1: 0, 2: 0, 3: 1, 4: 1, 5: 2, 6: 3, 7: 7, 8: 21, 9: 49}

_TOKEN = re.compile(r"([OUou])(\d+)([+-])")


def fingerprint_of(p: Laurent2) -> Fingerprint:
    a = p.serialize()
    b = p.mirror_transform().serialize()
    return (a, b) if a <= b else (b, a)


def fingerprint_hash(fp: Fingerprint) -> str:
    return hashlib.sha1(("|".join(fp)).encode()).hexdigest()[:12]


def parse_gauss_code(text: str) -> Diagram:
    """Parse a signed oriented Gauss code such as ``O1+U2+O3+U1+O2+U3+``.

    ``-`` (or the empty string) denotes the crossingless unknot diagram.
    Each label must occur once as O and once as U with a consistent sign.
    """
    text = text.strip()
    if text in ("", "-"):
        return Diagram(components=(), signs=(), free_loops=1)
    tokens = _TOKEN.findall(text)
    rebuilt = "".join(f"{o}{lab}{s}" for o, lab, s in tokens)
    if rebuilt.replace(" ", "") != text.replace(" ", ""):
        raise MalformedCode(f"unrecognized Gauss code {text!r}")
    order: dict[str, int] = {}
    passes = []
    over_seen: dict[int, list[str]] = {}
    sign_seen: dict[int, set[str]] = {}
    for over, lab, sig in tokens:
        if lab not in order:
            order[lab] = len(order)
        x = order[lab]
        passes.append((x, 1 if over.upper() == "O" else 0))
        over_seen.setdefault(x, []).append(over.upper())
        sign_seen.setdefault(x, set()).add(sig)
    n = len(order)
    if len(passes) != 2 * n:
        raise MalformedCode(f"Gauss code {text!r} has labels not occurring exactly twice")
    signs = []
    for lab, x in order.items():
        if sorted(over_seen[x]) != ["O", "U"]:
            raise MalformedCode(f"label {lab} needs exactly one O and one U pass")
        if len(sign_seen[x]) != 1:
            raise MalformedCode(f"label {lab} has inconsistent signs")
        signs.append(1 if sign_seen[x] == {"+"} else -1)
    return Diagram(components=(tuple(passes),), signs=tuple(signs))


def format_gauss_code(d: Diagram) -> str:
    if d.crossings == 0:
        return "-"
    if len(d.components) != 1:
        raise MalformedCode("only knot diagrams have a one-line Gauss code")
    out = []
    for x, flag in d.components[0]:
        out.append(f"{'O' if flag else 'U'}{x + 1}{'+' if d.signs[x] > 0 else '-'}")
    return "".join(out)


@dataclass(frozen=True)
class KnotRecord:
    name: str
    crossings: int
    diagram: Diagram
    annotations: Mapping[str, int]
    fingerprint: Fingerprint
    polynomial: Laurent2

    def annotation(self, key: str) -> int | None:
        return self.annotations.get(key)


@dataclass(frozen=True, eq=False)
class KnotBase:
    records: tuple[KnotRecord, ...]
    version: str
    digest: str
    collisions: tuple[tuple[str, ...], ...]
    _by_name: dict = field(repr=False, default_factory=dict)
    _by_fp: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        for rec in self.records:
            self._by_name[rec.name] = rec
            self._by_fp.setdefault(rec.fingerprint, []).append(rec.name)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def get(self, name: str) -> KnotRecord | None:
        return self._by_name.get(name)

    def __getitem__(self, name: str) -> KnotRecord:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"knot {name!r} not in table") from None

    def names_for(self, fp: Fingerprint) -> tuple[str, ...]:
        return tuple(self._by_fp.get(fp, ()))

    def max_crossings(self) -> int:
        return max((r.crossings for r in self.records), default=-1)

    def covers_primes_through(self, c: int) -> bool:
        """True when every prime knot with crossing number <= c is present."""
        if c > max(PRIME_COUNTS):
            return False
        have: dict[int, int] = {}
        for rec in self.records:
            have[rec.crossings] = have.get(rec.crossings, 0) + 1
        return all(have.get(k, 0) >= PRIME_COUNTS[k] for k in range(3, c + 1))


def _validate(rec: KnotRecord, line_no: int) -> None:
    if rec.diagram.crossings != rec.crossings:
        raise ParseError(
            f"line {line_no}: {rec.name} declares {rec.crossings} crossings "
            f"but its diagram has {rec.diagram.crossings}")
    g = rec.annotation("g")
    gc = rec.annotation("gc")
    if g is not None and gc is not None and g > gc:
        raise ParseError(f"line {line_no}: {rec.name} has g > gc")
    b = rec.annotation("b")
    if b is not None:
        lower = invariant_bounds(rec.polynomial).braid_lower
        if lower > b:
            raise ParseError(
                f"line {line_no}: {rec.name} annotates braid index {b} below "
                f"the polynomial bound {lower}")


def load_table(source: str | Path | IO[str]) -> KnotBase:
    """Load a knot table file; see the module docstring for the format."""
    if hasattr(source, "read"):
        text = source.read()
        label = getattr(source, "name", "<stream>")
    else:
        label = str(source)
        text = Path(source).read_text()
    lines = text.splitlines()
    version = lines[0].strip() if lines and lines[0].startswith("#") else "(unversioned)"
    records: list[KnotRecord] = []
    names: set[str] = set()
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 3:
            raise ParseError(f"line {line_no} of {label}: expected 'name c code [k=v ...]'")
        name, c_text, code = parts[0], parts[1], parts[2]
        if name in names:
            raise DuplicateName(f"line {line_no} of {label}: duplicate record {name}")
        names.add(name)
        try:
            crossings = int(c_text)
        except ValueError:
            raise ParseError(f"line {line_no} of {label}: bad crossing count {c_text!r}") from None
        try:
            dgm = parse_gauss_code(code)
        except MalformedCode as exc:
            raise ParseError(f"line {line_no} of {label}: {exc}") from None
        annotations: dict[str, int] = {}
        for kv in parts[3:]:
            if "=" not in kv:
                raise ParseError(f"line {line_no} of {label}: bad annotation {kv!r}")
            key, val = kv.split("=", 1)
            try:
                annotations[key] = int(val)
            except ValueError:
                raise ParseError(f"line {line_no} of {label}: bad annotation {kv!r}") from None
        p = homfly(dgm)
        rec = KnotRecord(name=name, crossings=crossings, diagram=dgm,
                         annotations=annotations, fingerprint=fingerprint_of(p),
                         polynomial=p)
        _validate(rec, line_no)
        records.append(rec)
    by_fp: dict[Fingerprint, list[str]] = {}
    for rec in records:
        by_fp.setdefault(rec.fingerprint, []).append(rec.name)
    collisions = tuple(tuple(v) for v in by_fp.values() if len(v) > 1)
    digest = hashlib.sha1(text.encode()).hexdigest()[:12]
    return KnotBase(records=tuple(records), version=version, digest=digest,
                    collisions=collisions)


def default_table_path() -> Path:
    return Path(__file__).parent / "data" / "knots7.tbl"


_default: KnotBase | None = None


def default_table() -> KnotBase:
    global _default
    if _default is None:
        _default = load_table(default_table_path())
    return _default


def identify(d: Diagram, base: KnotBase, *, ceiling: int = 16) -> frozenset[str]:
    """Names of table knots whose fingerprint matches the diagram's.

    Empty set means "not in table"; any result is a knot-up-to-mirror,
    fingerprint-level claim.
    """
    p = homfly(d, ceiling=ceiling)
    return frozenset(base.names_for(fingerprint_of(p)))


def identification_report(d: Diagram, base: KnotBase, *, ceiling: int = 16) -> dict:
    """JSON-ready identification report."""
    p = homfly(d, ceiling=ceiling)
    fp = fingerprint_of(p)
    matches = sorted(base.names_for(fp))
    try:
        input_text = f"{shadow_of(d).key_word() or '-'} | " + \
            "".join(str(b) for b in choices_of(d))
    except MalformedCode:
        input_text = f"<{len(d.components)}-component diagram>"
    return {
        "input": input_text,
        "fingerprint_hash": fingerprint_hash(fp),
        "matches": matches,
        "collisions": [list(group) for group in base.collisions],
        "claim": "fingerprint-match-up-to-mirror",
    }
