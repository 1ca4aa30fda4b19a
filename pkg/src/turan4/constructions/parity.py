"""Two-part parity construction.

Parts ``X`` (rows of a binary matrix) and ``Y`` (columns).  Edges: every
quadruple inside ``X``, every quadruple inside ``Y``, and every 2+2 quadruple
``{x_i, x_j, y_k, y_l}`` whose 2x2 minor ``a_ik + a_il + a_jk + a_jl`` is even.
Any five vertices contain an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from ..hypergraph import LabeledFourGraph, from_edges


@dataclass(frozen=True, eq=False)
class ParitySpec:
    n: int
    m: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("part sizes must be nonnegative")
        if self.matrix.shape != (self.n, self.m):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match ({self.n}, {self.m})")

    @classmethod
    def zero(cls, n: int, m: int) -> ParitySpec:
        return cls(n, m, np.zeros((n, m), dtype=np.int8))

    @classmethod
    def random(cls, n: int, m: int, seed: int) -> ParitySpec:
        rng = np.random.default_rng(seed)
        return cls(n, m, rng.integers(0, 2, size=(n, m), dtype=np.int8))


def parity_construction(spec: ParitySpec) -> LabeledFourGraph:
    n, m, a = spec.n, spec.m, spec.matrix.astype(np.int64) & 1
    xs = range(n)
    ys = range(n, n + m)
    e40 = list(combinations(xs, 4))
    e04 = list(combinations(ys, 4))
    e22 = []
    for i, j in combinations(range(n), 2):
        row = a[i] ^ a[j]
        for k, l in combinations(range(m), 2):
            if not row[k] ^ row[l]:
                e22.append((i, j, n + k, n + l))
    g = from_edges(n + m, e40 + e04 + e22)
    census = {"E40": len(e40), "E04": len(e04), "E22": len(e22)}
    assert g.e == sum(census.values())
    labels = tuple((0, i) for i in range(n)) + tuple((1, k) for k in range(m))
    return LabeledFourGraph(g, labels, "parity", census)


def parity_zero_count(n: int, m: int) -> int:
    """Edge count of the all-zero-matrix parity graph."""
    return comb(n, 4) + comb(m, 4) + comb(n, 2) * comb(m, 2)


def halves(size: int) -> tuple[int, int]:
    return (size + 1) // 2, size // 2


def find_min_parity_matrix(n: int, m: int) -> ParitySpec:
    """Exhaustive search (n*m <= 16) for a matrix minimizing the edge count."""
    if n * m > 16:
        raise ValueError("exhaustive matrix search limited to n*m <= 16")
    best, best_count = None, None
    for bits in range(1 << (n * m)):
        a = np.array([(bits >> t) & 1 for t in range(n * m)], dtype=np.int8).reshape(n, m)
        count = 0
        for i, j in combinations(range(n), 2):
            row = a[i] ^ a[j]
            count += sum(1 for k, l in combinations(range(m), 2) if not row[k] ^ row[l])
        if best_count is None or count < best_count:
            best, best_count = a, count
    return ParitySpec(n, m, best)
