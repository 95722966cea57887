"""Exact two-variable Laurent polynomials and the skein-recursion invariant.

The polynomial of an oriented link diagram is computed from the relation

    v^-1 * P(L+) - v * P(L-) = z * P(L0),        P(unknot) = 1,

so the crossingless k-component unlink evaluates to ((v^-1 - v)/z)^(k-1).
With this normalization the minimal v-degree bounds the maximal
self-linking number from above, the maximal z-degree bounds twice the
canonical genus from below, and the v-breadth bounds the braid index.

The recursion switches the first crossing that is met under-first so the
diagram moves toward a descending (hence unlink) state, smooths the same
crossing to drop the crossing count, simplifies between steps, and
memoizes on canonical diagram codes.  Memoized and memo-free runs agree
because every cached value is the invariant of its diagram class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, canonical_code, simplify, smooth_crossing, switch_crossing
from .errors import ResourceLimit, ZeroPolynomial

Exponent = tuple[int, int]  # (v exponent, z exponent)


class Laurent2:
    """Sparse integer Laurent polynomial in two variables ``v`` and ``z``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Exponent, int] | None = None):
        self._terms = {e: c for e, c in (terms or {}).items() if c}

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "Laurent2":
        return cls()

    @classmethod
    def one(cls) -> "Laurent2":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int, v: int = 0, z: int = 0) -> "Laurent2":
        return cls({(v, z): coeff})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Laurent2") -> "Laurent2":
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return Laurent2(terms)

    def __neg__(self) -> "Laurent2":
        return Laurent2({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Laurent2") -> "Laurent2":
        return self + (-other)

    def __mul__(self, other: "Laurent2") -> "Laurent2":
        terms: dict[Exponent, int] = {}
        for (v1, z1), c1 in self._terms.items():
            for (v2, z2), c2 in other._terms.items():
                e = (v1 + v2, z1 + z2)
                terms[e] = terms.get(e, 0) + c1 * c2
        return Laurent2(terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Laurent2) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __getstate__(self):
        return self._terms

    def __setstate__(self, state):
        object.__setattr__(self, "_terms", dict(state))

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> tuple[tuple[int, int, int], ...]:
        """Sorted ``(v exponent, z exponent, coefficient)`` triples."""
        return tuple((v, z, c) for (v, z), c in sorted(self._terms.items()))

    def coefficient(self, v: int, z: int) -> int:
        return self._terms.get((v, z), 0)

    def mirror_transform(self) -> "Laurent2":
        """Image under v -> v^-1, z -> -z (the polynomial of the mirror diagram)."""
        return Laurent2({(-v, z): c if z % 2 == 0 else -c
                         for (v, z), c in self._terms.items()})

    def evaluate_int(self, v: complex, z: complex) -> complex:
        return sum(c * v ** ve * z ** ze for (ve, ze), c in self._terms.items())

    # -- text forms ------------------------------------------------------

    def serialize(self) -> str:
        if self.is_zero:
            return "0"
        return ";".join(f"{v},{z},{c}" for v, z, c in self.terms())

    @classmethod
    def parse(cls, text: str) -> "Laurent2":
        text = text.strip()
        if text in ("", "0"):
            return cls.zero()
        terms: dict[Exponent, int] = {}
        for part in text.split(";"):
            v, z, c = (int(t) for t in part.split(","))
            terms[(v, z)] = terms.get((v, z), 0) + c
        return cls(terms)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for v, z, c in self.terms():
            factors = []
            if v:
                factors.append("v" if v == 1 else f"v^{v}")
            if z:
                factors.append("z" if z == 1 else f"z^{z}")
            if not factors or abs(c) != 1:
                factors.insert(0, str(abs(c)))
            mono = "*".join(factors)
            if not pieces:
                pieces.append(mono if c > 0 else f"-{mono}")
            else:
                pieces.append(f"+ {mono}" if c > 0 else f"- {mono}")
        return " ".join(pieces)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Laurent2({self.serialize()!r})"


_ONE = Laurent2.one()
_V2 = Laurent2.monomial(1, 2, 0)
_VZ = Laurent2.monomial(1, 1, 1)
_VM2 = Laurent2.monomial(1, -2, 0)
_VMZ = Laurent2.monomial(1, -1, 1)
_DELTA = Laurent2({(-1, -1): 1, (1, -1): -1})

_delta_powers = [_ONE, _DELTA]


def delta_power(k: int) -> Laurent2:
    """k-th power of the split-union factor (v^-1 - v)/z."""
    while len(_delta_powers) <= k:
        _delta_powers.append(_delta_powers[-1] * _DELTA)
    return _delta_powers[k]


@dataclass(frozen=True)
class DegreeBounds:
    max_deg_z: int
    min_deg_v: int
    max_deg_v: int

    @property
    def breadth_v(self) -> int:
        return self.max_deg_v - self.min_deg_v


@dataclass(frozen=True)
class InvariantBounds:
    """Lower bound for canonical genus, upper bound for maximal
    self-linking, lower bound for braid index."""

    gc_lower: int
    sl_upper: int
    braid_lower: int


def bounds(p: Laurent2) -> DegreeBounds:
    if p.is_zero:
        raise ZeroPolynomial("degree bounds of the zero polynomial")
    triples = p.terms()
    return DegreeBounds(
        max_deg_z=max(z for _, z, _ in triples),
        min_deg_v=min(v for v, _, _ in triples),
        max_deg_v=max(v for v, _, _ in triples),
    )


def invariant_bounds(p: Laurent2) -> InvariantBounds:
    b = bounds(p)
    return InvariantBounds(
        gc_lower=(b.max_deg_z + 1) // 2,
        sl_upper=b.min_deg_v - 1,
        braid_lower=b.breadth_v // 2 + 1,
    )


# ---------------------------------------------------------------------------
# skein recursion

_MEMO: dict[tuple, Laurent2] = {}


def clear_cache() -> None:
    _MEMO.clear()


def cache_size() -> int:
    return len(_MEMO)


def _first_under_first(d: Diagram) -> int | None:
    seen: set[int] = set()
    for comp in d.components:
        for x, flag in comp:
            if x not in seen:
                seen.add(x)
                if not flag:
                    return x
    return None


def _poly(d: Diagram) -> Laurent2:
    # d is already simplified
    if not d.components:
        return delta_power(d.free_loops - 1)
    p = _core(Diagram(components=d.components, signs=d.signs, free_loops=0))
    return p * delta_power(d.free_loops) if d.free_loops else p


def _core(d: Diagram) -> Laurent2:
    key = canonical_code(d)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    x = _first_under_first(d)
    if x is None:
        # descending: stacked unknots
        p = delta_power(len(d.components) - 1)
    else:
        switched = simplify(switch_crossing(d, x))
        smoothed = simplify(smooth_crossing(d, x))
        if d.signs[x] > 0:
            p = _poly(switched) * _V2 + _poly(smoothed) * _VZ
        else:
            p = _poly(switched) * _VM2 - _poly(smoothed) * _VMZ
    _MEMO[key] = p
    return p


def homfly(d: Diagram, *, ceiling: int = 16) -> Laurent2:
    """Skein polynomial of a link diagram (multi-component allowed).

    Raises ResourceLimit when the diagram still has more crossings than
    ``ceiling`` after kink and bigon removal.
    """
    d = simplify(d)
    if d.crossings > ceiling:
        raise ResourceLimit(
            f"diagram has {d.crossings} crossings after simplification, ceiling is {ceiling}")
    return _poly(d)
