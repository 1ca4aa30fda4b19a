"""Small exact constructions with independence number 5 (and the blocks they feed)."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from ..errors import VariantOutOfRange
from ..hypergraph import LabeledFourGraph, complete, from_edges
from ..solver import alpha_exact
from ._z2 import Z22


def k5_line_construction() -> LabeledFourGraph:
    """Vertices are the 10 edges of K5; edges are 4-arm stars and 4-cycles."""
    kedges = list(combinations(range(5), 2))
    index = {e: i for i, e in enumerate(kedges)}

    def eid(a, b):
        return index[(a, b) if a < b else (b, a)]

    stars = [tuple(eid(c, o) for o in range(5) if o != c) for c in range(5)]
    cycles = set()
    for quad in combinations(range(5), 4):
        a, b, c, d = quad
        # the three Hamiltonian cycles on four points
        for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            cycles.add(tuple(sorted(eid(cyc[t], cyc[(t + 1) % 4]) for t in range(4))))
    cycles = sorted(cycles)
    g = from_edges(10, stars + cycles)
    return LabeledFourGraph(g, tuple(kedges), "k5line", {"stars": len(stars), "cycles": len(cycles)})


def one_factorization_k6() -> list[list[tuple[int, int]]]:
    """The five perfect matchings of K6 (vertex 5 plays infinity)."""
    colors = []
    for i in range(5):
        m = [(i, 5)]
        for s in (1, 2):
            a, b = (i + s) % 5, (i - s) % 5
            m.append((min(a, b), max(a, b)))
        colors.append(sorted(m))
    return colors


def _two_k6_edges(match1, match2) -> tuple[list, list]:
    cross = []
    for color in one_factorization_k6():
        for (a, b), (c, d) in product(color, color):
            cross.append((a, b, 6 + c, 6 + d))
    quads = []
    for offset, matching in ((0, match1), (6, match2)):
        # each quadruple is the complement of one pair of a perfect matching,
        # so every vertex lies in exactly two of the three quadruples
        for pair in matching:
            quads.append(tuple(offset + v for v in range(6) if v not in pair))
    return cross, quads


def _perfect_matchings_k6() -> list[tuple[tuple[int, int], ...]]:
    out = []

    def rec(rest, acc):
        if not rest:
            out.append(tuple(acc))
            return
        a = rest[0]
        for b in rest[1:]:
            rec([v for v in rest if v not in (a, b)], acc + [(a, b)])

    rec(list(range(6)), [])
    return out


@lru_cache(maxsize=1)
def two_k6_variants() -> tuple[tuple, ...]:
    """All (matching, matching) choices whose graph has alpha = 5."""
    survivors = []
    matchings = _perfect_matchings_k6()
    for m1, m2 in product(matchings, matchings):
        cross, quads = _two_k6_edges(m1, m2)
        g = from_edges(12, cross + quads)
        if alpha_exact(g).alpha == 5:
            survivors.append((m1, m2))
    return tuple(survivors)


def two_k6_construction(variant: int = 0) -> LabeledFourGraph:
    variants = two_k6_variants()
    if not 0 <= variant < len(variants):
        raise VariantOutOfRange(f"variant {variant} not in [0, {len(variants)})")
    m1, m2 = variants[variant]
    cross, quads = _two_k6_edges(m1, m2)
    g = from_edges(12, cross + quads)
    labels = tuple((0, v) for v in range(6)) + tuple((1, v) for v in range(6))
    return LabeledFourGraph(g, labels, "twok6", {"cross": len(cross), "quadruples": len(quads)})


def z2cube_construction() -> LabeledFourGraph:
    """Two copies A, B of Z_2^2 + Z_2; labels are (part, x, a) with part 0 = A."""
    labels = [(p, x, a) for p in (0, 1) for x in Z22 for a in (0, 1)]
    index = {lab: i for i, lab in enumerate(labels)}
    A = [lab for lab in labels if lab[0] == 0]
    B = [lab for lab in labels if lab[0] == 1]
    fam = {"i": [], "ii": [], "iii": [], "iv": []}
    for q in combinations(A, 4):
        if q[0][1] ^ q[1][1] ^ q[2][1] ^ q[3][1] == 0:
            fam["i"].append(q)
    for q in combinations(B, 4):
        if (q[0][2] + q[1][2] + q[2][2] + q[3][2]) % 2 == 0:
            fam["ii"].append(q)
    for v1, v2 in combinations(A, 2):
        for v3, v4 in combinations(B, 2):
            if v1[1] == v2[1] and v3[2] != v4[2]:
                fam["iii"].append((v1, v2, v3, v4))
            if v3[2] == v4[2] and v1[1] ^ v2[1] ^ v3[1] ^ v4[1] == 0:
                fam["iv"].append((v1, v2, v3, v4))
    edges = [tuple(index[v] for v in q) for qs in fam.values() for q in qs]
    g = from_edges(16, edges)
    census = {k: len(v) for k, v in fam.items()}
    assert g.e == sum(census.values())
    return LabeledFourGraph(g, tuple(labels), "z2cube", census)


def complete_k5() -> LabeledFourGraph:
    return LabeledFourGraph(complete(5), tuple((v,) for v in range(5)), "complete5", {"E": 5})
