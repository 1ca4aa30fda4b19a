"""Canonical 4-uniform hypergraphs and their serialization.

Vertices are dense indices ``0..n-1``.  Edges live in an ``(e, 4)`` integer
array whose rows are sorted ascending and whose row order is lexicographic, so
two graphs with the same edge set compare equal element by element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import EdgeArityNot4, IndexOutOfRange, ParseError

Label = tuple[int, ...]


def _canonical_rows(n: int, rows: np.ndarray) -> np.ndarray:
    if rows.size == 0:
        return np.zeros((0, 4), dtype=np.int64)
    if rows.ndim != 2 or rows.shape[1] != 4:
        raise EdgeArityNot4(f"edges must be 4-subsets, got array of shape {rows.shape}")
    rows = np.sort(rows.astype(np.int64, copy=False), axis=1)
    if np.any(rows[:, 1:] == rows[:, :-1]):
        bad = rows[np.any(rows[:, 1:] == rows[:, :-1], axis=1)][0]
        raise EdgeArityNot4(f"edge {bad.tolist()} has a repeated vertex")
    if rows[:, 0].min() < 0 or rows[:, 3].max() >= n:
        bad = rows[(rows[:, 0] < 0) | (rows[:, 3] >= n)][0]
        raise IndexOutOfRange(f"edge {bad.tolist()} not inside [0, {n})")
    return np.unique(rows, axis=0)


@dataclass(frozen=True, eq=False)
class FourGraph:
    """A 4-uniform hypergraph on vertices ``0..n-1``.

    Build instances with :func:`from_edges`; the constructor assumes the edge
    array is already canonical.
    """

    n: int
    edges: np.ndarray

    def __post_init__(self):
        self.edges.setflags(write=False)

    @property
    def e(self) -> int:
        return int(self.edges.shape[0])

    @property
    def v(self) -> int:
        return self.n

    def edge_tuples(self) -> list[tuple[int, int, int, int]]:
        return [tuple(r) for r in self.edges.tolist()]

    def edge_masks(self) -> list[int]:
        return [(1 << a) | (1 << b) | (1 << c) | (1 << d) for a, b, c, d in self.edges.tolist()]

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n)

    def __eq__(self, other):
        if not isinstance(other, FourGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges.tobytes()))

    def __repr__(self):
        return f"FourGraph(n={self.n}, e={self.e})"


def from_edges(n: int, edges: Iterable[Sequence[int]] | np.ndarray) -> FourGraph:
    """Canonical graph from any iterable of 4-subsets; duplicates collapse."""
    if n < 0:
        raise IndexOutOfRange("vertex count must be nonnegative")
    if isinstance(edges, np.ndarray):
        rows = edges
    else:
        edges = list(edges)
        for ed in edges:
            if len(ed) != 4:
                raise EdgeArityNot4(f"edge {list(ed)} does not have 4 elements")
        rows = np.array(edges, dtype=np.int64).reshape(-1, 4)
    return FourGraph(n, _canonical_rows(n, rows))


def complete(n: int) -> FourGraph:
    return from_edges(n, list(combinations(range(n), 4)))


def empty(n: int) -> FourGraph:
    return from_edges(n, [])


def _check_subset(h: FourGraph, a: Iterable[int]) -> list[int]:
    a = sorted(set(int(x) for x in a))
    if a and (a[0] < 0 or a[-1] >= h.n):
        raise IndexOutOfRange(f"vertex subset not inside [0, {h.n})")
    return a


def induced(h: FourGraph, a: Iterable[int]) -> tuple[FourGraph, dict[int, int]]:
    """Subgraph induced by ``a``, reindexed in increasing order of old index.

    Returns the graph and the map from old to new vertex indices.
    """
    a = _check_subset(h, a)
    index = {old: new for new, old in enumerate(a)}
    lookup = np.full(h.n, -1, dtype=np.int64)
    lookup[a] = np.arange(len(a))
    if h.e:
        mapped = lookup[h.edges]
        keep = np.all(mapped >= 0, axis=1)
        rows = mapped[keep]
    else:
        rows = np.zeros((0, 4), dtype=np.int64)
    # Reindexing is monotone, so rows stay sorted and lexicographic.
    return FourGraph(len(a), np.ascontiguousarray(rows)), index


def remove(h: FourGraph, a: Iterable[int]) -> tuple[FourGraph, dict[int, int]]:
    a = set(_check_subset(h, a))
    return induced(h, [v for v in range(h.n) if v not in a])


def disjoint_union(parts: Sequence[FourGraph]) -> FourGraph:
    offset = 0
    blocks = []
    for g in parts:
        blocks.append(g.edges + offset)
        offset += g.n
    if not blocks:
        return empty(0)
    # Offsets are increasing, so concatenation is already canonical.
    return FourGraph(offset, np.ascontiguousarray(np.concatenate(blocks, axis=0)))


@dataclass(frozen=True, eq=False)
class LabeledFourGraph:
    """A :class:`FourGraph` with one integer tuple per vertex.

    ``name`` and ``census`` record which construction produced the graph and
    how many edges each edge family contributed.
    """

    graph: FourGraph
    labels: tuple[Label, ...]
    name: str = ""
    census: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise ValueError(f"{len(self.labels)} labels for {self.graph.n} vertices")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be pairwise distinct")
        if len({len(lab) for lab in self.labels}) > 1:
            raise ValueError("label arity must be uniform")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def e(self) -> int:
        return self.graph.e

    def index_of(self, label: Sequence[int]) -> int:
        return self._index()[tuple(label)]

    def _index(self) -> dict[Label, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def induced(self, a: Iterable[int]) -> LabeledFourGraph:
        g, index = induced(self.graph, a)
        labels = [None] * g.n
        for old, new in index.items():
            labels[new] = self.labels[old]
        return LabeledFourGraph(g, tuple(labels), self.name)

    def remove(self, a: Iterable[int]) -> LabeledFourGraph:
        a = set(a)
        return self.induced(v for v in range(self.n) if v not in a)

    def __eq__(self, other):
        if not isinstance(other, LabeledFourGraph):
            return NotImplemented
        return self.graph == other.graph and self.labels == other.labels

    def __repr__(self):
        return f"LabeledFourGraph({self.name or 'unnamed'}, n={self.n}, e={self.e})"


def _unwrap(h: FourGraph | LabeledFourGraph) -> tuple[FourGraph, tuple[Label, ...] | None]:
    if isinstance(h, LabeledFourGraph):
        return h.graph, h.labels
    return h, None


# -- t4g text format -------------------------------------------------------


def dumps_t4g(h: FourGraph | LabeledFourGraph) -> str:
    g, labels = _unwrap(h)
    lines = [f"n {g.n}", f"e {g.e}"]
    if labels is not None:
        lines.extend(f"# label {i} " + " ".join(map(str, lab)) for i, lab in enumerate(labels))
    lines.extend(" ".join(map(str, row)) for row in g.edges.tolist())
    return "\n".join(lines) + "\n"


def loads_t4g(text: str) -> FourGraph | LabeledFourGraph:
    n = e = None
    labels: dict[int, Label] = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts and parts[0] == "label":
                try:
                    labels[int(parts[1])] = tuple(int(t) for t in parts[2:])
                except (IndexError, ValueError):
                    raise ParseError(f"line {lineno}: malformed label {raw!r}") from None
            continue
        parts = line.split()
        try:
            if parts[0] == "n" and n is None:
                n = int(parts[1])
            elif parts[0] == "e" and e is None:
                e = int(parts[1])
            else:
                if len(parts) != 4:
                    raise ParseError(f"line {lineno}: edge needs 4 indices, got {raw!r}")
                rows.append([int(t) for t in parts])
        except (IndexError, ValueError):
            raise ParseError(f"line {lineno}: cannot parse {raw!r}") from None
    if n is None or e is None:
        raise ParseError("missing 'n' or 'e' header line")
    g = from_edges(n, rows)
    if g.e != e:
        raise ParseError(f"header says e={e} but {g.e} distinct edges were read")
    if labels:
        if sorted(labels) != list(range(n)):
            raise ParseError("labels must be given for every vertex or none")
        return LabeledFourGraph(g, tuple(labels[i] for i in range(n)))
    return g


def dumps_json(h: FourGraph | LabeledFourGraph) -> str:
    g, labels = _unwrap(h)
    doc = {
        "n": g.n,
        "edges": g.edges.tolist(),
        "labels": [list(lab) for lab in labels] if labels is not None else None,
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def loads_json(text: str) -> FourGraph | LabeledFourGraph:
    try:
        doc = json.loads(text)
        g = from_edges(int(doc["n"]), doc["edges"])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from None
    if doc.get("labels") is not None:
        return LabeledFourGraph(g, tuple(tuple(lab) for lab in doc["labels"]))
    return g


def read_graph(path) -> FourGraph | LabeledFourGraph:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return loads_json(text)
    return loads_t4g(text)


def write_graph(h: FourGraph | LabeledFourGraph, path, fmt: str = "t4g") -> None:
    text = dumps_json(h) if fmt == "json" else dumps_t4g(h)
    with open(path, "w") as fh:
        fh.write(text)
