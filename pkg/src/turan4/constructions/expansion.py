"""Expansion of a host 4-graph: a blow-up that raises alpha by at most one.

Every host vertex ``w`` becomes a part ``V_w`` of size ``N_w``.  Edges:

* ``E1111``: one vertex from each part of a host edge;
* ``E22``: two vertices from each of two distinct parts;
* ``E31``: a triple ``{a, b, c}`` of ``V_w`` plus any vertex of a part indexed
  by the critical set ``I_w^i``, ``i`` being the parity of the triple;
* ``E_w``: the internal graph of ``V_w``.  When ``d(w) = 1`` it is the
  all-zero-matrix parity graph on halves of sizes ceil(N/2), floor(N/2), and a
  triple is odd when it has an odd number of vertices in the first half.
  When ``d(w) = 0`` it is complete and every triple counts as even.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import comb, prod
from typing import Sequence

from ..errors import DFlagUnjustified, InvalidCriticalSet
from ..hypergraph import FourGraph, LabeledFourGraph, from_edges, remove
from ..solver import alpha_exact
from .parity import halves, parity_zero_count

# Host of the first worked example, 1-based as printed.
EXAMPLE1_EDGES_1BASED = (
    (1, 2, 3, 4), (5, 6, 7, 8), (1, 2, 5, 6), (3, 4, 7, 8), (1, 2, 7, 8),
    (3, 4, 5, 6), (1, 3, 5, 7), (2, 4, 6, 8), (1, 3, 6, 8), (2, 4, 5, 7),
    (1, 4, 5, 8), (2, 3, 6, 7), (1, 4, 6, 7), (2, 3, 5, 8),
)

# Asymmetric critical sets (I^0, I^1) of the second worked example, 1-based.
EXAMPLE2_CRITICAL_1BASED = {
    1: ((5, 6, 7, 8), (3, 4, 7, 8)),
    2: ((5, 6, 7, 8), (3, 4, 7, 8)),
    3: ((5, 6, 7, 8), (1, 2, 7, 8)),
    4: ((5, 6, 7, 8), (1, 2, 7, 8)),
    5: ((3, 4, 7, 8), (1, 2, 7, 8)),
    6: ((3, 4, 7, 8), (1, 2, 7, 8)),
    7: ((2, 4, 6, 8), (1, 3, 6, 8)),
    8: ((2, 3, 6, 7), (1, 4, 6, 7)),
}

# Part-size fractions printed with the second example (they sum to 0.9964).
EXAMPLE2_WEIGHTS = (0.13387, 0.13387, 0.13387, 0.13387, 0.13639, 0.13085, 0.09684, 0.09684)


def example1_host() -> FourGraph:
    return from_edges(8, [[v - 1 for v in e] for e in EXAMPLE1_EDGES_1BASED])


@dataclass(frozen=True)
class ExpansionSpec:
    host: FourGraph
    crit0: tuple[frozenset, ...]
    crit1: tuple[frozenset, ...]
    d: tuple[int, ...]
    sizes: tuple[int, ...]

    def __post_init__(self):
        n = self.host.n
        if not (len(self.crit0) == len(self.crit1) == len(self.d) == len(self.sizes) == n):
            raise ValueError("per-vertex data must have one entry per host vertex")
        if any(s < 1 for s in self.sizes):
            raise ValueError("part sizes must be >= 1")
        if any(f not in (0, 1) for f in self.d):
            raise ValueError("d flags are 0 or 1")

    @cached_property
    def host_alpha(self) -> int:
        return alpha_exact(self.host).alpha

    def _alpha_without(self, u: frozenset) -> int:
        return alpha_exact(remove(self.host, u)[0]).alpha

    def validate(self) -> None:
        a = self.host_alpha
        cache: dict[frozenset, int] = {}

        def alpha_without(u):
            if u not in cache:
                cache[u] = self._alpha_without(u)
            return cache[u]

        for w in range(self.host.n):
            for i, crit in enumerate((self.crit0[w], self.crit1[w])):
                if w in crit:
                    raise InvalidCriticalSet(f"I_{w}^{i} contains {w}")
                if alpha_without(crit) >= a:
                    raise InvalidCriticalSet(
                        f"I_{w}^{i} = {sorted(crit)} is not critical: alpha stays {a}"
                    )
            if self.d[w] and alpha_without(self.crit0[w] | self.crit1[w]) > a - 2:
                raise DFlagUnjustified(f"d({w}) = 1 but removing both critical sets keeps alpha > {a - 2}")

    def density_inputs(self) -> tuple[int, int, int, int, int]:
        """(n, e, alpha, c, d) for the equal-part density formula.

        Needs |I_w^0| = |I_w^1| for every w.
        """
        cs = []
        for a, b in zip(self.crit0, self.crit1):
            if len(a) != len(b):
                raise ValueError("critical sets of a vertex differ in size")
            cs.append(len(a))
        return self.host.n, self.host.e, self.host_alpha, sum(cs), sum(self.d)

    def with_sizes(self, sizes: Sequence[int]) -> ExpansionSpec:
        return ExpansionSpec(self.host, self.crit0, self.crit1, self.d, tuple(sizes))


def example1_spec(size: int = 2) -> ExpansionSpec:
    """Each w gets the first two host edges avoiding it as critical sets; d = 1."""
    host = example1_host()
    edges = host.edge_tuples()
    c0, c1 = [], []
    for w in range(host.n):
        avoid = [frozenset(e) for e in edges if w not in e]
        c0.append(avoid[0])
        c1.append(avoid[1])
    return ExpansionSpec(host, tuple(c0), tuple(c1), (1,) * host.n, (size,) * host.n)


def example2_spec(size: int = 2) -> ExpansionSpec:
    host = example1_host()
    c0 = tuple(frozenset(v - 1 for v in EXAMPLE2_CRITICAL_1BASED[w + 1][0]) for w in range(8))
    c1 = tuple(frozenset(v - 1 for v in EXAMPLE2_CRITICAL_1BASED[w + 1][1]) for w in range(8))
    return ExpansionSpec(host, c0, c1, (1,) * 8, (size,) * 8)


def _triple_parity_counts(size: int, d: int) -> tuple[int, int]:
    if not d:
        return comb(size, 3), 0
    h1, h2 = halves(size)
    even = comb(h2, 3) + comb(h1, 2) * h2
    odd = h1 * comb(h2, 2) + comb(h1, 3)
    return even, odd


def expansion_edge_formula(spec: ExpansionSpec) -> dict:
    """Exact family sizes of the expansion as polynomials in the part sizes."""
    N = spec.sizes
    e1111 = sum(prod(N[w] for w in e) for e in spec.host.edge_tuples())
    e22 = sum(comb(N[x], 2) * comb(N[y], 2) for x, y in combinations(range(spec.host.n), 2))
    e31 = 0
    internal = 0
    for w in range(spec.host.n):
        even, odd = _triple_parity_counts(N[w], spec.d[w])
        e31 += even * sum(N[x] for x in spec.crit0[w]) + odd * sum(N[x] for x in spec.crit1[w])
        internal += parity_zero_count(*halves(N[w])) if spec.d[w] else comb(N[w], 4)
    return {"E1111": e1111, "E22": e22, "E31": e31, "Ew": internal,
            "total": e1111 + e22 + e31 + internal}


def expansion_build(spec: ExpansionSpec, validate: bool = True) -> LabeledFourGraph:
    if validate:
        spec.validate()
    n = spec.host.n
    labels = [(w, j) for w in range(n) for j in range(spec.sizes[w])]
    start = [0] * (n + 1)
    for w in range(n):
        start[w + 1] = start[w] + spec.sizes[w]
    part = [range(start[w], start[w + 1]) for w in range(n)]

    fam = {"E1111": [], "E22": [], "E31": [], "Ew": []}
    for e in spec.host.edge_tuples():
        fam["E1111"].extend(product(*(part[w] for w in e)))
    for x, y in combinations(range(n), 2):
        for p, q in product(combinations(part[x], 2), combinations(part[y], 2)):
            fam["E22"].append(p + q)
    for w in range(n):
        h1, _ = halves(spec.sizes[w])
        first = set(part[w][:h1])
        targets = (
            [v for x in sorted(spec.crit0[w]) for v in part[x]],
            [v for x in sorted(spec.crit1[w]) for v in part[x]],
        )
        for t in combinations(part[w], 3):
            i = sum(v in first for v in t) % 2 if spec.d[w] else 0
            fam["E31"].extend(t + (v,) for v in targets[i])
        for q in combinations(part[w], 4):
            inside = sum(v in first for v in q)
            if not spec.d[w] or inside % 2 == 0:
                fam["Ew"].append(q)
    edges = [e for es in fam.values() for e in es]
    g = from_edges(len(labels), edges)
    if g.e != len(edges):
        raise AssertionError("expansion edge families overlap")
    census = {k: len(v) for k, v in fam.items()}
    return LabeledFourGraph(g, tuple(labels), "expansion", census)
