"""Circular construction C_m[G_0, ..., G_{m-1}].

Each part ``G_i`` has its vertex set split as ``V_i' | V_i''``.  The vertices
of the product are ``W_i = V_i' x V_{i+1}''``, labelled ``(i, x, y)``.  Within
``W_i`` the group ``W_{i,x}`` collects the vertices with first coordinate
``x``; its second coordinate ranges over ``V_{i+1}''``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Sequence

from ..errors import HypothesisViolated, PartitionMismatch
from ..hypergraph import FourGraph, LabeledFourGraph, from_edges, induced
from ..solver import alpha_exact


@dataclass(frozen=True)
class CircularPart:
    graph: FourGraph
    first: tuple[int, ...]   # V_i'
    second: tuple[int, ...]  # V_i''
    alpha: int               # alpha_i, with alpha(G_i) = alpha_i + 1

    def __post_init__(self):
        a, b = set(self.first), set(self.second)
        if a & b or a | b != set(range(self.graph.n)):
            raise PartitionMismatch("V' and V'' must partition the vertex set")


@dataclass(frozen=True)
class CircularSpec:
    parts: tuple[CircularPart, ...]

    @property
    def m(self) -> int:
        return len(self.parts)

    def validate(self) -> None:
        if self.m < 2:
            raise PartitionMismatch("circular construction needs m >= 2 parts")
        for i, p in enumerate(self.parts):
            whole = alpha_exact(p.graph)
            if whole.alpha > p.alpha + 1:
                raise HypothesisViolated(f"part {i}: alpha(G_i) = {whole.alpha} > {p.alpha + 1}")
            head = alpha_exact(induced(p.graph, p.first)[0])
            if head.alpha > p.alpha:
                raise HypothesisViolated(f"part {i}: alpha(G_i & V_i') = {head.alpha} > {p.alpha}")

    def second_half_condition(self) -> bool:
        """Extra hypothesis alpha(G_i & V_i'') <= alpha_i of the refined bound."""
        return all(
            alpha_exact(induced(p.graph, p.second)[0]).alpha <= p.alpha for p in self.parts
        )

    @classmethod
    def uniform(cls, part: CircularPart, m: int) -> CircularSpec:
        return cls(tuple([part] * m))


def zero_sum_cube() -> CircularPart:
    """Z_2^3 with zero-sum quadruples, split by the top coordinate."""
    edges = [q for q in combinations(range(8), 4) if q[0] ^ q[1] ^ q[2] ^ q[3] == 0]
    g = from_edges(8, edges)
    return CircularPart(g, (0, 1, 2, 3), (4, 5, 6, 7), alpha=3)


def _split_counts(part: CircularPart) -> list[int]:
    first = set(part.first)
    counts = [0] * 5
    for e in part.graph.edge_tuples():
        counts[sum(v in first for v in e)] += 1
    return counts


def circular_edge_formula(spec: CircularSpec) -> dict:
    """Per-index family sizes and total from the closed-form count."""
    m = spec.m
    out = {"E1": [], "E2": [], "E4": []}
    for i in range(m):
        cur, nxt, nxt2 = spec.parts[i], spec.parts[(i + 1) % m], spec.parts[(i + 2) % m]
        a, b, c = len(cur.first), len(nxt.second), len(nxt2.second)
        counts = _split_counts(nxt)
        out["E1"].append(a * sum(counts[j] * c**j for j in range(4)))
        out["E2"].append(comb(a, 2) * comb(b, 2) ** 2)
        out["E4"].append(_split_counts(cur)[4] * b**4)
    out["total"] = sum(sum(out[k]) for k in ("E1", "E2", "E4"))
    out["v"] = sum(len(spec.parts[i].first) * len(spec.parts[(i + 1) % m].second) for i in range(m))
    return out


def circular_build(spec: CircularSpec, validate: bool = True) -> LabeledFourGraph:
    if validate:
        spec.validate()
    elif spec.m < 2:
        raise PartitionMismatch("circular construction needs m >= 2 parts")
    m = spec.m
    labels = []
    for i in range(m):
        nxt = spec.parts[(i + 1) % m]
        labels.extend((i, x, y) for x in spec.parts[i].first for y in nxt.second)
    index = {lab: k for k, lab in enumerate(labels)}

    census = {"E1": [], "E2": [], "E4": []}
    edges = []
    for i in range(m):
        j, k = (i + 1) % m, (i + 2) % m
        cur, nxt = spec.parts[i], spec.parts[j]
        ys_next = spec.parts[j].second   # second coordinates in W_i
        ys_next2 = spec.parts[k].second  # second coordinates in W_{i+1}
        nxt_first = set(nxt.first)

        fam = []
        for e in nxt.graph.edge_tuples():
            heads = [u for u in e if u in nxt_first]
            tails = [u for u in e if u not in nxt_first]
            if not tails:
                continue  # the quadruple must meet W_i
            for x in cur.first:
                base = [index[(i, x, y)] for y in tails]
                for ys in product(ys_next2, repeat=len(heads)):
                    fam.append(tuple(base + [index[(j, xh, yh)] for xh, yh in zip(heads, ys)]))
        census["E1"].append(len(fam))
        edges.extend(fam)

        fam = []
        for x1, x2 in combinations(cur.first, 2):
            for y1, y2 in combinations(ys_next, 2):
                for y3, y4 in combinations(ys_next, 2):
                    fam.append((index[(i, x1, y1)], index[(i, x1, y2)],
                                index[(i, x2, y3)], index[(i, x2, y4)]))
        census["E2"].append(len(fam))
        edges.extend(fam)

        fam = []
        head_set = set(cur.first)
        for e in cur.graph.edge_tuples():
            if all(u in head_set for u in e):
                for ys in product(ys_next, repeat=4):
                    fam.append(tuple(index[(i, x, y)] for x, y in zip(e, ys)))
        census["E4"].append(len(fam))
        edges.extend(fam)

    g = from_edges(len(labels), edges)
    if g.e != len(edges):
        raise AssertionError("circular edge families overlap")
    return LabeledFourGraph(g, tuple(labels), f"circular_m{m}", census)


def block_vertices(h: LabeledFourGraph, i: int) -> list[int]:
    """Vertex indices of W_i."""
    return [k for k, lab in enumerate(h.labels) if lab[0] == i]
