"""Exact rational bounds on Turan numbers and densities of 4-graphs.

``T(n, k, 4)`` is the fewest edges of an n-vertex 4-graph with no
independent k-set, ``t(k, 4)`` its limit density and
``t_*(k, 4) = (k - 1)^3 t(k, 4) / 24`` the rescaled density.

Finite graphs only ever feed :class:`TuranValueTable`.  Because
``T(n, k, 4) / C(n, 4)`` increases with n, one graph does not bound
``t(k, 4)``; density records come only from the limit formulas below.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import ceil, comb, floor
from types import MappingProxyType
from typing import Iterable, Mapping

from .constructions.hm import hm_edge_formula
from .constructions.rainbow import rainbow_counts
from .errors import MissingBaseEntry, MTooSmall, RatioOutOfRange, UncertifiedAlpha
from .hypergraph import FourGraph
from .solver import AlphaResult

DIGITS = 6


def t_star(k: int, t: Fraction) -> Fraction:
    return Fraction((k - 1) ** 3, 24) * t


def render_decimal(q: Fraction, kind: str, digits: int = DIGITS) -> str:
    """Fixed-point string rounded outward: up for upper bounds, down for lower."""
    scale = 10**digits
    scaled = q * scale
    if kind == "upper":
        units = ceil(scaled)
    elif kind == "lower":
        units = floor(scaled)
    else:
        raise ValueError(f"kind must be upper or lower, not {kind!r}")
    sign = "-" if units < 0 else ""
    whole, frac = divmod(abs(units), scale)
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class Provenance:
    name: str
    params: tuple = ()
    cite: str = ""
    reproduced: bool = True

    def label(self) -> str:
        if not self.params:
            return self.name
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.name}({inner})"

    def to_json(self) -> dict:
        out = {"name": self.name, "params": dict(self.params), "reproduced": self.reproduced}
        if self.cite:
            out["cite"] = self.cite
        return out


@dataclass(frozen=True)
class BoundRecord:
    """A bound on ``t(k, 4)``; ``k`` is None for the limit ``t_*(4)``."""

    k: int | None
    kind: str
    t_value: Fraction | None
    t_star: Fraction
    provenance: Provenance
    note: str = ""

    def __post_init__(self):
        if self.kind not in ("upper", "lower"):
            raise ValueError(f"kind must be upper or lower, not {self.kind!r}")
        if self.k is not None and self.t_value is not None:
            if t_star(self.k, self.t_value) != self.t_star:
                raise ValueError("t_star does not match t_value")

    @classmethod
    def from_t(cls, k: int, kind: str, t: Fraction, provenance: Provenance, note: str = "") -> BoundRecord:
        t = Fraction(t)
        return cls(k, kind, t, t_star(k, t), provenance, note)

    @property
    def decimal(self) -> str:
        return render_decimal(self.t_star, self.kind)

    def to_json(self) -> dict:
        out = {
            "k": self.k,
            "kind": self.kind,
            "t_star_num": self.t_star.numerator,
            "t_star_den": self.t_star.denominator,
            "decimal": self.decimal,
            "provenance": self.provenance.to_json(),
        }
        if self.t_value is not None:
            out["t_num"] = self.t_value.numerator
            out["t_den"] = self.t_value.denominator
        if self.note:
            out["note"] = self.note
        return out


# -- integer table -----------------------------------------------------------


@dataclass(frozen=True)
class TuranEntry:
    lower: int | None = None
    upper: int | None = None
    lower_cite: str = ""
    upper_cite: str = ""

    @property
    def exact(self) -> bool:
        return self.lower is not None and self.lower == self.upper


@dataclass(frozen=True)
class TuranValueTable:
    """Immutable map (n, k) -> integer bounds on T(n, k, 4).

    Every update returns a new table and rejects lower > upper.
    """

    entries: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))
        for (n, k), e in self.entries.items():
            if e.lower is not None and e.upper is not None and e.lower > e.upper:
                raise ValueError(f"T({n},{k},4): lower {e.lower} > upper {e.upper}")

    def get(self, n: int, k: int) -> TuranEntry | None:
        return self.entries.get((n, k))

    def keys(self):
        return sorted(self.entries)

    def with_upper(self, n: int, k: int, value: int, cite: str) -> TuranValueTable:
        old = self.entries.get((n, k), TuranEntry())
        if old.upper is not None and old.upper <= value:
            return self
        entries = dict(self.entries)
        entries[(n, k)] = replace(old, upper=value, upper_cite=cite)
        return TuranValueTable(entries)

    def with_lower(self, n: int, k: int, value: int, cite: str) -> TuranValueTable:
        old = self.entries.get((n, k), TuranEntry())
        if old.lower is not None and old.lower >= value:
            return self
        entries = dict(self.entries)
        entries[(n, k)] = replace(old, lower=value, lower_cite=cite)
        return TuranValueTable(entries)

    def monotone_violations(self) -> list[tuple[int, int, int]]:
        """(k, n1, n2) where exact T(n, k)/C(n, 4) decreases from n1 to n2."""
        bad = []
        by_k: dict[int, list[tuple[int, int]]] = {}
        for (n, k), e in self.entries.items():
            if e.exact:
                by_k.setdefault(k, []).append((n, e.lower))
        for k, rows in sorted(by_k.items()):
            rows.sort()
            for (n1, v1), (n2, v2) in zip(rows, rows[1:]):
                if Fraction(v2, comb(n2, 4)) < Fraction(v1, comb(n1, 4)):
                    bad.append((k, n1, n2))
        return bad


def _data() -> dict:
    with resources.files("turan4").joinpath("data/external_constants.json").open() as fh:
        return json.load(fh)


def load_external_table() -> TuranValueTable:
    table = TuranValueTable()
    for row in _data()["turan_values"]:
        if "lower" in row:
            table = table.with_lower(row["n"], row["k"], row["lower"], row["cite"])
        if "upper" in row:
            table = table.with_upper(row["n"], row["k"], row["upper"], row["cite"])
    return table


def lift_lower(table: TuranValueTable, n: int, k: int = 5) -> tuple[int, TuranValueTable]:
    """``T(n, k, 4) >= ceil(n T(n-1, k, 4) / (n - 4))`` from the entry at n - 1."""
    base = table.get(n - 1, k)
    if base is None or base.lower is None:
        raise MissingBaseEntry(f"no lower bound for T({n - 1},{k},4)")
    if n <= 4:
        raise ValueError("lifting needs n > 4")
    value = -(-n * base.lower // (n - 4))
    return value, table.with_lower(n, k, value, f"lifted from T({n - 1},{k},4) >= {base.lower}")


def seed_table() -> TuranValueTable:
    """External constants closed under single-step lifting for n <= 18."""
    table = load_external_table()
    for k in (5, 6, 7):
        for n in range(6, 19):
            if table.get(n - 1, k) is not None and table.get(n - 1, k).lower is not None:
                _, table = lift_lower(table, n, k)
    return table


def density_from_graph(table: TuranValueTable, h: FourGraph, alpha: AlphaResult, name: str = "graph") -> TuranValueTable:
    """Record ``T(v, alpha + 1, 4) <= e`` for a graph with certified alpha."""
    if not alpha.exact:
        raise UncertifiedAlpha(f"alpha status is {alpha.status.value}, not Exact")
    return table.with_upper(h.n, alpha.alpha + 1, h.e, name)


def lifted_density_lower(table: TuranValueTable, n: int, k: int = 5) -> BoundRecord:
    """``t(k, 4) >= T(n, k, 4) / C(n, 4)``, valid because the ratio increases in n."""
    entry = table.get(n, k)
    if entry is None or entry.lower is None:
        raise MissingBaseEntry(f"no lower bound for T({n},{k},4)")
    return BoundRecord.from_t(
        k, "lower", Fraction(entry.lower, comb(n, 4)),
        Provenance("turan_ratio", (("n", n), ("T_lower", entry.lower)), entry.lower_cite),
    )


# -- limit formulas ----------------------------------------------------------


def parity_limit_bound() -> BoundRecord:
    return BoundRecord.from_t(5, "upper", Fraction(5, 16), Provenance("parity"))


def complete_bound() -> BoundRecord:
    return BoundRecord.from_t(4, "upper", Fraction(1), Provenance("complete"))


def expansion_density_bound(n: int, e: int, alpha: int, c: int, d: int) -> BoundRecord:
    """Equal-part expansion of an n-vertex host with e edges: bound on t(alpha + 2, 4)."""
    t = (24 * e + 3 * n * (n - 1) + 4 * c + n - Fraction(11, 16) * d) / Fraction(n**4)
    params = (("n", n), ("e", e), ("alpha", alpha), ("c", c), ("d", d))
    return BoundRecord.from_t(alpha + 2, "upper", t, Provenance("expansion", params))


def circular_expansion_bound(m: int) -> BoundRecord:
    if m < 3:
        raise MTooSmall(f"m={m} < 3")
    t = Fraction(768 * m + 30837, 65536 * m**3)
    return BoundRecord.from_t(3 * m + 2, "upper", t, Provenance("circular_expansion", (("m", m),)))


def rainbow_limit_bound(m: int) -> BoundRecord:
    if m < 2:
        raise MTooSmall(f"m={m} < 2")
    return BoundRecord.from_t(3 * m + 1, "upper", Fraction(443, 640 * m**3), Provenance("rainbow", (("m", m),)))


def rainbow_finite_edges(k: int, m: int) -> int:
    """Edges of m circular copies of the depth-k rainbow graph."""
    c = rainbow_counts(k)
    size = 4**k
    return m * (4 * (c["E0"] + c["E1"] * size + c["E2"] * size**2) + 6 * comb(size, 2) ** 2 + size**4)


def rainbow_finite_bound(k: int, m: int) -> Fraction:
    if k < 1 or m < 2:
        raise ValueError("need k >= 1 and m >= 2")
    v = m * 4 ** (k + 1)
    return Fraction(rainbow_finite_edges(k, m), comb(v, 4))


def corollary74_bound(m: int, lam: int) -> BoundRecord:
    """Expansion of H_{m, lambda}: bound on t(3m + 2, 4)."""
    e = hm_edge_formula(m, lam)
    v = 16 * m * lam
    ts = Fraction((3 * m + 1) ** 3) * (e + Fraction(v, 24) * (3 * v + 64 * lam - Fraction(43, 16))) / v**4
    t = ts * 24 / (3 * m + 1) ** 3
    return BoundRecord.from_t(3 * m + 2, "upper", t, Provenance("hm_expansion", (("m", m), ("lambda", lam))))


def thomasse_yeo_edges(n: int, alpha: int) -> int:
    """Smallest integer edge count allowed by e >= 4n - (21/4) alpha."""
    return max(0, ceil(Fraction(16 * n - 21 * alpha, 4)))


def thomasse_yeo_lower() -> BoundRecord:
    return BoundRecord(None, "lower", None, Fraction(64, 343), Provenance("thomasse_yeo", cite="Thomasse, Yeo (2007)"))


def recursive_bound(rec: BoundRecord, m: int) -> BoundRecord:
    """``t(m(k-1)+1, 4) <= m^{-3} t(k, 4)`` for an upper record."""
    if rec.kind != "upper" or rec.t_value is None or m < 1:
        raise ValueError("needs an upper record with t_value and m >= 1")
    k2 = m * (rec.k - 1) + 1
    return BoundRecord.from_t(k2, "upper", rec.t_value / m**3,
                              Provenance("recursive", (("from_k", rec.k), ("m", m))))


# -- small ratios ------------------------------------------------------------


def section8_exact(n: int, alpha: int) -> int | None:
    """Exact ``T(n, alpha + 1, 4)`` for 1 <= n/alpha <= 7/4; None when no formula applies."""
    if n < 1 or alpha < 1:
        raise ValueError("n and alpha must be positive")
    r = Fraction(n, alpha)
    if r < 1 or r > Fraction(7, 4) or alpha < min(n, 3):
        return None
    if r <= Fraction(4, 3):
        return n - alpha
    if r <= Fraction(3, 2):
        return ceil(Fraction(5 * n - 6 * alpha, 2))
    if 4 * n == 7 * alpha - 2:
        return None
    return ceil(Fraction(16 * n - 21 * alpha, 4))


# (vertices, alpha) -> edges of the disjoint-union building blocks
UNION_BLOCKS = {(5, 3): 5, (6, 4): 3, (7, 4): 7, (8, 5): 6}


@lru_cache(maxsize=None)
def _union_dp(n: int, alpha: int) -> int | None:
    if n == 0 and alpha == 0:
        return 0
    best = None
    for (bn, ba), be in UNION_BLOCKS.items():
        if bn <= n and ba <= alpha:
            rest = _union_dp(n - bn, alpha - ba)
            if rest is not None and (best is None or rest + be < best):
                best = rest + be
    return best


def union_upper(n: int, alpha: int) -> int:
    """Cheapest disjoint union of the base blocks with n vertices and independence alpha.

    On the boundary n/alpha = 3/2 the known exact value from the lower-ratio
    regime also counts.
    """
    r = Fraction(n, alpha) if alpha > 0 else None
    if r is None or r < Fraction(3, 2) or r > Fraction(7, 4):
        raise RatioOutOfRange(f"n/alpha = {n}/{alpha} outside [3/2, 7/4]")
    if alpha < 3:
        raise RatioOutOfRange(f"every 4-graph on {n} vertices has alpha >= 3")
    best = _union_dp(n, alpha)
    if r == Fraction(3, 2):
        boundary = ceil(Fraction(5 * n - 6 * alpha, 2))
        best = boundary if best is None else min(best, boundary)
    if best is None:
        raise RatioOutOfRange(f"no block decomposition for n={n}, alpha={alpha}")
    return best


# -- summary table -----------------------------------------------------------


CIRCULAR_ROWS = (5, 6, 7)
HM_ROWS = ((10, 2), (11, 2), (12, 2), (13, 2), (14, 2), (20, 3), (21, 3))


def external_density_rows() -> list[BoundRecord]:
    rows = []
    for row in _data()["density_rows"]:
        q = Fraction(row["t_star_upper"])
        rows.append(BoundRecord(row["k"], "upper", None, q,
                                Provenance("external", cite=row["cite"], reproduced=False)))
    return rows


def optimizer_record(restarts: int = 32, seed: int = 0) -> BoundRecord:
    from .constructions.expansion import example2_spec
    from .optimizer import ExpansionObjective, minimize

    res = minimize(ExpansionObjective.from_spec(example2_spec()), seed=seed, restarts=restarts)
    t = res.value_certified * 24 / 125
    return BoundRecord.from_t(6, "upper", t, Provenance("expansion_optimized", (("restarts", restarts), ("seed", seed))))


def table9_report(restarts: int = 32, seed: int = 0) -> list[BoundRecord]:
    """Best upper bound per k, ordered by k."""
    rows = [
        complete_bound(),
        parity_limit_bound(),
        optimizer_record(restarts, seed),
        rainbow_limit_bound(2),
    ]
    rows += [circular_expansion_bound(m) for m in CIRCULAR_ROWS]
    rows += [corollary74_bound(m, lam) for m, lam in HM_ROWS]
    rows += external_density_rows()
    return sorted(rows, key=lambda r: r.k)


def render_table9(rows: Iterable[BoundRecord], fmt: str) -> str:
    rows = list(rows)
    if fmt == "json":
        return json.dumps([r.to_json() for r in rows], indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "t_star_upper", "num", "den", "reproduced", "provenance"])
        for r in rows:
            w.writerow([r.k, r.decimal, r.t_star.numerator, r.t_star.denominator,
                        int(r.provenance.reproduced), r.provenance.label()])
        return buf.getvalue()
    if fmt == "md":
        lines = ["| k | t_* <= | reproduced | provenance |", "|---|---|---|---|"]
        for r in rows:
            flag = "yes" if r.provenance.reproduced else "external"
            lines.append(f"| {r.k} | {r.decimal} | {flag} | {r.provenance.label()} |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def render_tvalues(table: TuranValueTable, fmt: str = "md") -> str:
    if fmt == "json":
        rows = [{"n": n, "k": k, "lower": e.lower, "upper": e.upper,
                 "lower_cite": e.lower_cite, "upper_cite": e.upper_cite}
                for (n, k), e in ((key, table.get(*key)) for key in table.keys())]
        return json.dumps(rows, indent=2, sort_keys=True) + "\n"
    if fmt != "md":
        raise ValueError(f"unknown format {fmt!r}")
    lines = ["| k | n | T(n,k,4) | source |", "|---|---|---|---|"]
    for n, k in sorted(table.keys(), key=lambda t: (t[1], t[0])):
        e = table.get(n, k)
        if e.exact:
            val, src = str(e.lower), e.lower_cite
        else:
            lo = "?" if e.lower is None else str(e.lower)
            hi = "?" if e.upper is None else str(e.upper)
            val = f"{lo}-{hi}"
            src = "; ".join(s for s in (e.lower_cite, e.upper_cite) if s)
        lines.append(f"| {k} | {n} | {val} | {src} |")
    return "\n".join(lines) + "\n"


def published_summary() -> dict[int, tuple[Fraction, str, str]]:
    """Published upper bounds on t_*(k, 4) by k: (value, printed text, note)."""
    return {
        r["k"]: (Fraction(r["t_star_upper"]), r["t_star_upper"], r.get("note", ""))
        for r in _data()["published_summary"]
    }
