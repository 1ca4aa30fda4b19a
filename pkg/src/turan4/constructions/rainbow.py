"""Rainbow-triple construction H_k on V' u V'' with V' = Z_2^2 and V'' = (Z_2^2)^k.

A pair of distinct vectors is coloured by the sum of their entries at the
first position where they differ.  A triple is rainbow when its three colours
are distinct, which happens exactly when all three pairs first differ at the
same position; otherwise one vertex (the apex) splits off first.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb

from ..errors import DepthTooLargeToMaterialize
from ..hypergraph import LabeledFourGraph, from_edges
from ._z2 import Z22

MAX_BUILD_DEPTH = 3
X_PRIME = frozenset({0, 1})  # {(0,0), (0,1)} under (a, b) -> 2a + b


def first_difference(x: tuple, y: tuple) -> int:
    for t, (a, b) in enumerate(zip(x, y)):
        if a != b:
            return t
    raise ValueError("vectors are equal")


def color(x: tuple, y: tuple) -> int:
    t = first_difference(x, y)
    return x[t] ^ y[t]


def apex(x: tuple, y: tuple, z: tuple):
    """Apex of a non-rainbow triple as (apex, other, other); None if rainbow."""
    ixy, ixz, iyz = first_difference(x, y), first_difference(x, z), first_difference(y, z)
    if ixy == ixz == iyz:
        return None
    if ixy == ixz:
        return x, y, z
    if ixy == iyz:
        return y, x, z
    return z, x, y


def pair_for(triple_with_apex: tuple, rule: str = "swapped") -> frozenset:
    """The pair p(T) in V' attached to a non-rainbow triple (apex first).

    With ``base = {y_1, y_1 + c(y, z)}``, the ``"literal"`` rule returns
    ``base`` when apex and the other two start on the same side of V' and the
    complement otherwise.  That rule leaves the 5-set {w, x, y, z, u} free
    whenever {x, y, z} is rainbow, u sits on the other side and w = x_1, so
    alpha rises to 5.  The default ``"swapped"`` rule exchanges the two
    branches; each triple still gets exactly two vertices of V', so every
    family size is unchanged, and alpha(H_k) = 4.
    """
    x, y, z = triple_with_apex
    base = frozenset({y[0], y[0] ^ color(y, z)})
    same_side = (x[0] in X_PRIME) == (y[0] in X_PRIME)
    if rule == "literal":
        return base if same_side else frozenset(Z22) - base
    if rule == "swapped":
        return frozenset(Z22) - base if same_side else base
    raise ValueError(f"unknown apex rule {rule!r}")


def rainbow_triples_count(k: int) -> int:
    """Rainbow triples of (Z_2^2)^k, summed over the shared first-difference position."""
    return sum(4 ** (t - 1) * comb(4, 3) * 4 ** (3 * (k - t)) for t in range(1, k + 1))


def rainbow_counts(k: int) -> dict:
    """Exact family sizes of H_k without materializing it."""
    if k < 1:
        raise ValueError("depth must be >= 1")
    size = 4**k
    half = size // 2
    nonrainbow = comb(size, 3) - rainbow_triples_count(k)
    return {
        "E0": 2 * comb(half, 4) + comb(half, 2) ** 2,
        "E1": 2 * nonrainbow,
        "E2": size * (size - 1),
        "E4": 1,
        "v": 4 + size,
    }


def rainbow_build(k: int, rule: str = "swapped") -> LabeledFourGraph:
    """Materialize H_k.  Labels are ``(0, a)`` for V' and ``(1, *vector)`` for V''.

    ``rule`` selects the pair map, see :func:`pair_for`.
    """
    if k < 1:
        raise ValueError("depth must be >= 1")
    if k > MAX_BUILD_DEPTH:
        raise DepthTooLargeToMaterialize(f"k={k} > {MAX_BUILD_DEPTH}; use rainbow_counts")
    vecs = list(product(Z22, repeat=k))
    labels = [(0, a) + (0,) * (k - 1) for a in Z22] + [(1,) + v for v in vecs]
    vp = {a: a for a in Z22}
    vpp = {v: 4 + t for t, v in enumerate(vecs)}

    fam = {"E0": [], "E1": [], "E2": [], "E4": [tuple(vp[a] for a in Z22)]}
    for q in combinations(vecs, 4):
        if sum(v[0] in X_PRIME for v in q) % 2 == 0:
            fam["E0"].append(tuple(vpp[v] for v in q))
    for t in combinations(vecs, 3):
        ordered = apex(*t)
        if ordered is None:
            continue
        tri = [vpp[v] for v in t]
        for w in sorted(pair_for(ordered, rule)):
            fam["E1"].append((*tri, vp[w]))
    for a, b in combinations(Z22, 2):
        c = a ^ b
        for u, v in combinations(vecs, 2):
            if color(u, v) == c:
                fam["E2"].append((vp[a], vp[b], vpp[u], vpp[v]))
    edges = [e for es in fam.values() for e in es]
    g = from_edges(4 + len(vecs), edges)
    census = {name: len(es) for name, es in fam.items()}
    if g.e != len(edges):
        raise AssertionError("rainbow edge families overlap")
    return LabeledFourGraph(g, tuple(labels), f"rainbow_k{k}", census)


def rainbow_circular_part(k: int, rule: str = "swapped"):
    """H_k as a circular-construction part split into V' and V''."""
    from .circular import CircularPart

    h = rainbow_build(k, rule)
    return CircularPart(h.graph, (0, 1, 2, 3), tuple(range(4, h.n)), alpha=3)
