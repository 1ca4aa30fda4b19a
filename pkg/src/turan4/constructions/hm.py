"""The Z_m + Z_2^6 construction H_{m, lambda} and its sampled invariant suite.

Vertices are ``(i, x, y, z)`` with ``i`` in Z_m, ``x, y`` in Z_2^2 and ``z``
in a fixed subset ``B`` of Z_2^2 of size lambda.  Call ``(x, y)`` the cell of
a vertex.  Edge types, all indices mod m:

1.  four vertices of one cell at level i (needs lambda = 4);
2.  four distinct cells at level i whose x's sum to 0;
3.  two vertices at level i with equal x and different y, plus two at level
    i+1 whose x's sum to the sum of those y's;
4a. two pairs at level i, each inside its own cell (different z's), cells
    distinct;
4b. a same-cell pair at level i plus two vertices at level i+2 with equal x
    and different y;
4c. a same-cell pair at level i plus two vertices at level i+3 whose x's sum
    to the sum of the pair's z's.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb

import numpy as np

from ..errors import InvariantViolated, LambdaOutOfRange, MTooSmall
from ..hypergraph import FourGraph, LabeledFourGraph
from ._z2 import Z22, pairs_with_sum

TYPES = ("1", "2", "3", "4a", "4b", "4c")
CELLS = [(x, y) for x in Z22 for y in Z22]


@dataclass(frozen=True)
class HmLambdaSpec:
    m: int
    lam: int
    b_set: tuple[int, ...] = ()

    def __post_init__(self):
        if not 1 <= self.lam <= 4:
            raise LambdaOutOfRange(f"lambda={self.lam} not in 1..4")
        if self.m < 4:
            raise MTooSmall(f"m={self.m} < 4: level offsets +2 and +3 would alias")
        if not self.b_set:
            object.__setattr__(self, "b_set", tuple(range(self.lam)))
        b = tuple(self.b_set)
        if len(set(b)) != self.lam or any(z not in Z22 for z in b):
            raise LambdaOutOfRange(f"B={b} must be {self.lam} distinct elements of Z_2^2")
        object.__setattr__(self, "b_set", b)

    @property
    def v(self) -> int:
        return 16 * self.m * self.lam


def hm_type_formula(lam: int) -> dict:
    """Edges of each type per level."""
    c2 = comb(lam, 2)
    return {
        "1": 16 * comb(lam, 4),
        "2": 476 * lam**4,
        "3": 768 * lam**4,
        "4a": 120 * c2**2,
        "4b": 384 * c2 * lam**2,
        "4c": 512 * c2 * lam**2,
    }


def hm_edge_formula(m: int, lam: int) -> int:
    HmLambdaSpec(m, lam)  # parameter validation
    num = m * (5168 * lam**4 - 1536 * lam**3 + 112 * lam**2 - 12 * lam)
    if num % 3:
        raise AssertionError("edge polynomial not divisible by 3")
    return num // 3


def _templates(b: tuple[int, ...]) -> dict[str, list]:
    """Per-type edges at base level 0 as lists of 4 (level offset, cell, z-index)."""
    lam = len(b)
    zi = range(lam)
    cell_of = {c: k for k, c in enumerate(CELLS)}
    t: dict[str, list] = {k: [] for k in TYPES}

    for k in range(16):
        for zs in combinations(zi, 4):
            t["1"].append([(0, k, z) for z in zs])
    for cs in combinations(range(16), 4):
        if CELLS[cs[0]][0] ^ CELLS[cs[1]][0] ^ CELLS[cs[2]][0] ^ CELLS[cs[3]][0]:
            continue
        for zs in product(zi, repeat=4):
            t["2"].append([(0, c, z) for c, z in zip(cs, zs)])
    for x1 in Z22:
        for y1, y2 in combinations(Z22, 2):
            lo = (cell_of[(x1, y1)], cell_of[(x1, y2)])
            for xa, xb in pairs_with_sum(y1 ^ y2):
                for ya, yb in product(Z22, repeat=2):
                    hi = (cell_of[(xa, ya)], cell_of[(xb, yb)])
                    for za, zb, zc, zd in product(zi, repeat=4):
                        t["3"].append([(0, lo[0], za), (0, lo[1], zb), (1, hi[0], zc), (1, hi[1], zd)])
    for c1, c2 in combinations(range(16), 2):
        for za, zb in combinations(zi, 2):
            for zc, zd in combinations(zi, 2):
                t["4a"].append([(0, c1, za), (0, c1, zb), (0, c2, zc), (0, c2, zd)])
    for c1 in range(16):
        for za, zb in combinations(zi, 2):
            base = [(0, c1, za), (0, c1, zb)]
            for x2 in Z22:
                for y2, y3 in combinations(Z22, 2):
                    for zc, zd in product(zi, repeat=2):
                        t["4b"].append(base + [(2, cell_of[(x2, y2)], zc), (2, cell_of[(x2, y3)], zd)])
            for xa, xb in pairs_with_sum(b[za] ^ b[zb]):
                for ya, yb in product(Z22, repeat=2):
                    for zc, zd in product(zi, repeat=2):
                        t["4c"].append(base + [(3, cell_of[(xa, ya)], zc), (3, cell_of[(xb, yb)], zd)])
    return t


def hm_build(spec: HmLambdaSpec) -> LabeledFourGraph:
    """Materialize H_{m,lambda}; vertex index is ((i * 16 + cell) * lambda + z-index)."""
    m, lam = spec.m, spec.lam
    per_level = 16 * lam
    levels = np.arange(m, dtype=np.int64)[:, None, None]
    blocks = []
    census = {}
    for name, rows in _templates(spec.b_set).items():
        if not rows:
            census[name] = 0
            continue
        arr = np.array(rows, dtype=np.int64)  # (t, 4, 3)
        local = arr[:, :, 1] * lam + arr[:, :, 2]
        idx = ((levels + arr[None, :, :, 0]) % m) * per_level + local[None, :, :]
        idx = idx.reshape(-1, 4)
        census[name] = idx.shape[0]
        blocks.append(idx)
    edges = np.sort(np.concatenate(blocks), axis=1)
    canon = np.unique(edges, axis=0)
    if canon.shape[0] != edges.shape[0]:
        raise AssertionError("H_m edge types overlap")
    labels = tuple(
        (i, x, y, z) for i in range(m) for (x, y) in CELLS for z in spec.b_set
    )
    g = FourGraph(spec.v, canon)
    return LabeledFourGraph(g, labels, f"hm_m{m}_l{lam}", census)


# -- invariant suite ---------------------------------------------------------


def level_sets(labels, a, m: int) -> tuple[list, dict, dict]:
    """A_1(i), A_2(i, x), A_3(i, x, y) of a vertex set as python sets."""
    a1 = [set() for _ in range(m)]
    a2: dict = {}
    a3: dict = {}
    for v in a:
        i, x, y, z = labels[v]
        a1[i].add(x)
        a2.setdefault((i, x), set()).add(y)
        a3.setdefault((i, x, y), set()).add(z)
    return a1, a2, a3


def invariant_slacks(labels, a, m: int) -> dict:
    """Slack (right side minus left side) of each displayed inequality.

    ``local`` is the minimum over all base levels i; ``levels`` sums the
    per-level bound and ``size`` caps |A| itself.
    """
    a1, a2, a3 = level_sets(labels, a, m)
    eps = [0] * m
    for (i, _x, _y), zs in a3.items():
        eps[i] += max(0, len(zs) - 1)
    chi = [1 if a1[i] else 0 for i in range(m)]
    max_a2 = [max((len(a2.get((i, x), ())) for x in Z22), default=0) for i in range(m)]
    sum_a2 = [sum(len(a2.get((i, x), ())) for x in Z22) for i in range(m)]
    local = min(
        2 + chi[(i + 2) % m] + chi[(i + 3) % m]
        - (eps[i] + max_a2[(i + 2) % m] + len(a1[(i + 3) % m]))
        for i in range(m)
    )
    levels = 2 * m + sum(chi) - (sum(eps) + sum(sum_a2))
    size = 2 * m + sum(chi) - len(a)
    return {"local": local, "levels": levels, "size": size}


class _Greedy:
    def __init__(self, g: FourGraph):
        self.g = g
        order = np.argsort(g.edges.ravel(), kind="stable")
        owners = order // 4
        bounds = np.searchsorted(g.edges.ravel()[order], np.arange(g.n + 1))
        self.incidence = [owners[bounds[v]:bounds[v + 1]] for v in range(g.n)]

    def run(self, order) -> list[int]:
        count = np.zeros(self.g.e, dtype=np.int8)
        chosen = []
        for v in order:
            inc = self.incidence[v]
            if inc.size and (count[inc] == 3).any():
                continue
            count[inc] += 1
            chosen.append(int(v))
        return chosen


def repair_independent(g: FourGraph, vertices) -> list[int]:
    """Keep vertices in the given order unless they would complete an edge."""
    return sorted(_Greedy(g).run(list(vertices)))


@dataclass
class InvariantReport:
    samples: int
    seed: int
    violations: dict = field(default_factory=lambda: {"local": 0, "levels": 0, "size": 0})
    min_slack: dict = field(default_factory=dict)
    max_size: int = 0
    bound_3m: int = 0

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "violations": self.violations,
            "min_slack": self.min_slack,
            "max_independent_size": self.max_size,
            "bound_3m": self.bound_3m,
        }


def hm_invariant_suite(
    spec: HmLambdaSpec, samples: int, seed: int = 0, strict: bool = False, graph=None
) -> InvariantReport:
    """Check the three inequalities on random maximal independent sets."""
    h = graph if graph is not None else hm_build(spec)
    greedy = _Greedy(h.graph)
    report = InvariantReport(samples, seed, bound_3m=3 * spec.m)
    children = np.random.SeedSequence(seed).spawn(samples) if samples else []
    for child in children:
        rng = np.random.default_rng(child)
        a = greedy.run(rng.permutation(h.n))
        slack = invariant_slacks(h.labels, a, spec.m)
        for key, val in slack.items():
            if val < 0:
                report.violations[key] += 1
            report.min_slack[key] = min(report.min_slack.get(key, val), val)
        report.max_size = max(report.max_size, len(a))
    if strict and not report.ok:
        raise InvariantViolated(f"inequality violations: {report.violations}")
    return report
