"""Independence number of 4-graphs.

Two independent routes:

* :func:`alpha_bruteforce` enumerates vertex subsets with numpy and serves as
  the oracle for small graphs;
* :func:`alpha_exact` is a bitset branch and bound.  A node holds the chosen
  set ``S`` and the candidate set ``P``.  Every edge with two vertices in ``S``
  leaves a 2-edge between its other two vertices, so ``S`` induces an ordinary
  graph on ``P``.  Covering ``P`` greedily with cliques of that graph bounds
  how many more vertices can join, and branching walks candidates in reverse
  clique order so the bound prunes whole suffixes at once.
"""

from __future__ import annotations

import enum
import os
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import IndexOutOfRange, TooLargeForBruteForce
from .hypergraph import FourGraph, LabeledFourGraph

BRUTEFORCE_MAX_N = 24
UNBOUNDED_MAX_N = 48
DEFAULT_NODE_CAP = 10**8


class Status(str, enum.Enum):
    EXACT = "Exact"
    LOWER_BOUND_ONLY = "LowerBoundOnly"


@dataclass(frozen=True)
class SolveBudget:
    max_nodes: int | None = None
    max_seconds: float | None = None

    @classmethod
    def default_for(cls, n: int) -> SolveBudget:
        if n <= UNBOUNDED_MAX_N:
            return cls()
        cap = os.environ.get("TURAN_BUDGET_NODES")
        return cls(max_nodes=int(cap) if cap else DEFAULT_NODE_CAP)


@dataclass(frozen=True)
class AlphaResult:
    alpha: int
    witness: tuple[int, ...]
    status: Status
    nodes_explored: int = 0

    @property
    def exact(self) -> bool:
        return self.status is Status.EXACT

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "status": self.status.value,
            "witness": list(self.witness),
            "nodes": self.nodes_explored,
        }


def _graph(h) -> FourGraph:
    return h.graph if isinstance(h, LabeledFourGraph) else h


def is_independent(h: FourGraph | LabeledFourGraph, a: Iterable[int]) -> bool:
    h = _graph(h)
    a = set(int(v) for v in a)
    if any(v < 0 or v >= h.n for v in a):
        raise IndexOutOfRange(f"vertex subset not inside [0, {h.n})")
    if len(a) < 4 or h.e == 0:
        return True
    inside = np.zeros(h.n, dtype=bool)
    inside[list(a)] = True
    return not bool(np.any(np.all(inside[h.edges], axis=1)))


# -- brute force oracle ----------------------------------------------------


def _independent_subset_of_size(edge_masks: np.ndarray, n: int, k: int, chunk: int = 1 << 16):
    """First k-subset (lexicographic) containing no edge, or None."""
    weights = [1 << i for i in range(n)]
    it = combinations(range(n), k)
    while True:
        block = []
        for combo in it:
            block.append(combo)
            if len(block) == chunk:
                break
        if not block:
            return None
        masks = np.array([sum(weights[i] for i in c) for c in block], dtype=np.uint64)
        if edge_masks.size:
            hit = (masks[:, None] & edge_masks[None, :]) == edge_masks[None, :]
            free = ~hit.any(axis=1)
        else:
            free = np.ones(len(block), dtype=bool)
        if free.any():
            return block[int(np.argmax(free))]
        if len(block) < chunk:
            return None


def alpha_bruteforce(h: FourGraph | LabeledFourGraph) -> AlphaResult:
    """Exact alpha by exhaustive subset enumeration (n <= 24).

    Independent sets are closed under taking subsets, so sizes are scanned
    upward and the scan stops at the first size with no independent subset.
    """
    h = _graph(h)
    if h.n > BRUTEFORCE_MAX_N:
        raise TooLargeForBruteForce(f"n={h.n} exceeds {BRUTEFORCE_MAX_N}")
    edge_masks = np.array(h.edge_masks(), dtype=np.uint64)
    witness: tuple[int, ...] = tuple(range(min(h.n, 3)))
    checked = 0
    for k in range(len(witness) + 1, h.n + 1):
        checked += 1
        found = _independent_subset_of_size(edge_masks, h.n, k)
        if found is None:
            break
        witness = found
    return AlphaResult(len(witness), tuple(witness), Status.EXACT, checked)


# -- branch and bound ------------------------------------------------------


class _BudgetExhausted(Exception):
    pass


@dataclass
class _Search:
    n: int
    links: dict = field(default_factory=dict)  # (u, v) -> {c: mask of d with {u,v,c,d} an edge}
    best: int = 0
    best_set: tuple = ()
    nodes: int = 0
    max_nodes: int | None = None
    deadline: float | None = None

    @classmethod
    def build(cls, h: FourGraph) -> _Search:
        s = cls(h.n)
        links = s.links
        for quad in h.edges.tolist():
            for i, j in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
                u, v = quad[i], quad[j]
                c, d = (x for k, x in enumerate(quad) if k != i and k != j)
                row = links.setdefault((u, v), {})
                row[c] = row.get(c, 0) | (1 << d)
                row[d] = row.get(d, 0) | (1 << c)
        return s

    def _link(self, u: int, v: int) -> dict:
        return self.links.get((u, v) if u < v else (v, u), {})

    def greedy(self, order: list[int]) -> list[int]:
        chosen: list[int] = []
        banned = 0
        adj2 = [0] * self.n
        for v in order:
            if banned >> v & 1:
                continue
            banned |= adj2[v]
            for u in chosen:
                for c, mask in self._link(u, v).items():
                    adj2[c] |= mask
            chosen.append(v)
        return chosen

    def _clique_cover(self, p: int, adj2: list[int]) -> list[tuple[int, int]]:
        """Greedy clique partition of P in the residual 2-graph.

        Returns (vertex, class number) pairs, class numbers nondecreasing.
        """
        out = []
        rest = p
        k = 0
        while rest:
            k += 1
            cand = rest
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                out.append((v, k))
                rest ^= low
                cand &= adj2[v] & rest
        return out

    def expand(self, chosen: list[int], p: int, adj2: list[int]) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExhausted
        if self.deadline is not None and not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise _BudgetExhausted
        size = len(chosen)
        if size > self.best:
            self.best = size
            self.best_set = tuple(sorted(chosen))
        if not p:
            return
        order = self._clique_cover(p, adj2)
        for v, k in reversed(order):
            if size + k <= self.best:
                return
            p &= ~(1 << v)
            q = p & ~adj2[v]
            if q:
                nxt = adj2[:]
                for u in chosen:
                    for c, mask in self._link(u, v).items():
                        if q >> c & 1:
                            nxt[c] |= mask
            else:
                nxt = adj2
            chosen.append(v)
            self.expand(chosen, q, nxt)
            chosen.pop()


def alpha_exact(h: FourGraph | LabeledFourGraph, budget: SolveBudget | None = None) -> AlphaResult:
    """Certified independence number, or the best witness if the budget runs out."""
    h = _graph(h)
    if budget is None:
        budget = SolveBudget.default_for(h.n)
    if h.n == 0:
        return AlphaResult(0, (), Status.EXACT, 0)
    s = _Search.build(h)
    s.max_nodes = budget.max_nodes
    if budget.max_seconds is not None:
        s.deadline = time.monotonic() + budget.max_seconds

    deg = h.degrees()
    rng = random.Random(0x5EED)
    orders = [sorted(range(h.n), key=lambda v: (deg[v], v))]
    for _ in range(15):
        o = list(range(h.n))
        rng.shuffle(o)
        orders.append(o)
    for o in orders:
        g = s.greedy(o)
        if len(g) > s.best:
            s.best, s.best_set = len(g), tuple(sorted(g))

    status = Status.EXACT
    try:
        s.expand([], (1 << h.n) - 1, [0] * h.n)
    except _BudgetExhausted:
        status = Status.LOWER_BOUND_ONLY
    return AlphaResult(s.best, s.best_set, status, s.nodes)


def tau(h: FourGraph | LabeledFourGraph, budget: SolveBudget | None = None) -> tuple[int, Status]:
    """Transversal number v(H) - alpha(H) and the status of the alpha solve.

    Under LowerBoundOnly the returned value is an upper bound on tau.
    """
    res = alpha_exact(h, budget)
    return _graph(h).n - res.alpha, res.status
