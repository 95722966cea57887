"""Independent reference implementations used only by the tests.

Nothing here shares logic with the package beyond reading its value
types: realizability is decided through a planarity reduction instead of
a rotation-system search, word classes are quotiented by a local
canonicalizer, and the skein polynomial is recomputed by a plain
expansion tree (ascending convention, no simplification, no caching).
"""

from __future__ import annotations

import itertools

import networkx as nx

# ---------------------------------------------------------------------------
# realizability via a planarity gadget


def realizable_oracle(word: tuple[int, ...]) -> bool:
    """A double-occurrence word traces a closed curve on the sphere iff the
    graph obtained by exploding each crossing into a 4-cycle of dart nodes
    (in strand-alternating order) with one edge per arc is planar."""
    n = len(word) // 2
    if n == 0:
        return True
    first: dict[int, int] = {}
    second: dict[int, int] = {}
    for p, x in enumerate(word):
        if x in first:
            second[x] = p
        else:
            first[x] = p
    G = nx.Graph()
    role_out: dict[int, tuple] = {}
    role_in: dict[int, tuple] = {}
    for x in range(n):
        i, j = first[x], second[x]
        a_in, a_out, b_in, b_out = (x, "ai"), (x, "ao"), (x, "bi"), (x, "bo")
        cycle = [a_in, b_in, a_out, b_out]
        for k in range(4):
            G.add_edge(cycle[k], cycle[(k + 1) % 4])
        role_in[i], role_out[i] = a_in, a_out
        role_in[j], role_out[j] = b_in, b_out
    length = len(word)
    for p in range(length):
        G.add_edge(role_out[p], role_in[(p + 1) % length])
    ok, _ = nx.check_planarity(G)
    return ok


# ---------------------------------------------------------------------------
# brute-force shadow classes


def _local_normalize(seq):
    label: dict = {}
    out = []
    for x in seq:
        if x not in label:
            label[x] = len(label)
        out.append(label[x])
    return tuple(out)


def local_canonical(word) -> tuple[int, ...]:
    length = len(word)
    if length == 0:
        return ()
    best = None
    for seq in (tuple(word), tuple(reversed(word))):
        for r in range(length):
            cand = _local_normalize(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    return best


def _multiset_words(n: int):
    letters = [x for x in range(n) for _ in range(2)]
    seen = set()
    for perm in itertools.permutations(letters):
        if perm not in seen:
            seen.add(perm)
            yield perm


def _normal_words(n: int):
    # words with first appearances in increasing order; every word above is
    # a relabelling of exactly one of these
    length = 2 * n

    def rec(word, counts, used):
        if len(word) == length:
            yield tuple(word)
            return
        for x in range(used):
            if counts[x] == 1:
                counts[x] = 2
                word.append(x)
                yield from rec(word, counts, used)
                word.pop()
                counts[x] = 1
        if used < n:
            counts[used] = 1
            word.append(used)
            yield from rec(word, counts, used + 1)
            word.pop()
            counts[used] = 0

    yield from rec([], [0] * n, 0)


def shadow_class_count(n: int, *, allow_reducible: bool = True) -> int:
    """Number of realizable word classes: generate, quotient, then filter.

    For n <= 4 every double-occurrence word over a fixed alphabet is
    generated; for larger n the relabelling quotient is applied during
    generation (each word is a relabelling of exactly one normal-form
    word, so the class set is unchanged).
    """
    if n == 0:
        return 1
    words = _multiset_words(n) if n <= 4 else _normal_words(n)
    classes = {local_canonical(w) for w in words}
    count = 0
    for rep in sorted(classes):
        if not allow_reducible:
            length = len(rep)
            if any(rep[p] == rep[(p + 1) % length] for p in range(length)):
                continue
        if realizable_oracle(rep):
            count += 1
    return count


# ---------------------------------------------------------------------------
# plain skein-tree polynomial

_DELTA = {(-1, -1): 1, (1, -1): -1}


def _padd(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
        if not out[e]:
            del out[e]
    return out


def _pmul(a, b):
    out = {}
    for (v1, z1), c1 in a.items():
        for (v2, z2), c2 in b.items():
            e = (v1 + v2, z1 + z2)
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _delta_pow(k):
    out = {(0, 0): 1}
    for _ in range(k):
        out = _pmul(out, _DELTA)
    return out


def _find_passes(comps, x):
    hits = []
    for ci, comp in enumerate(comps):
        for p, (y, _) in enumerate(comp):
            if y == x:
                hits.append((ci, p))
    return hits


def _switch(comps, x):
    return tuple(tuple((y, 1 - f if y == x else f) for y, f in comp) for comp in comps)


def _smooth(comps, x):
    (ci, pi), (cj, pj) = _find_passes(comps, x)
    comps = list(comps)
    if ci == cj:
        comp = comps.pop(ci)
        if pi > pj:
            pi, pj = pj, pi
        comps.append(comp[pi + 1:pj])
        comps.append(comp[pj + 1:] + comp[:pi])
    else:
        a, b = comps[ci], comps[cj]
        merged = a[pi + 1:] + a[:pi] + b[pj + 1:] + b[:pj]
        comps = [c for k, c in enumerate(comps) if k not in (ci, cj)] + [merged]
    loops = sum(1 for c in comps if not c)
    return tuple(c for c in comps if c), loops


def _naive(comps, signs, loops):
    first_over = None
    seen = set()
    for comp in comps:
        for x, flag in comp:
            if x not in seen:
                seen.add(x)
                if flag and first_over is None:
                    first_over = x
    if first_over is None:
        # ascending: as many split unknots as components
        return _delta_pow(len(comps) + loops - 1)
    x = first_over
    s = signs[x]
    switched_signs = dict(signs)
    switched_signs[x] = -s
    switched = _switch(comps, x)
    sm_comps, new_loops = _smooth(comps, x)
    p_switch = _naive(switched, switched_signs, loops)
    p_smooth = _naive(sm_comps, signs, loops + new_loops)
    if s > 0:
        # P+ = v^2 P-  + v z P0
        return _padd(_pmul({(2, 0): 1}, p_switch), _pmul({(1, 1): 1}, p_smooth))
    # P- = v^-2 P+  - v^-1 z P0
    return _padd(_pmul({(-2, 0): 1}, p_switch), _pmul({(-1, 1): -1}, p_smooth))


def naive_homfly(d) -> dict[tuple[int, int], int]:
    """Skein polynomial by full tree expansion; reads only the diagram's
    component, sign and loop data."""
    signs = {x: s for x, s in enumerate(d.signs)}
    return _naive(d.components, signs, d.free_loops)


def naive_terms(d) -> tuple[tuple[int, int, int], ...]:
    return tuple(sorted((v, z, c) for (v, z), c in naive_homfly(d).items()))
