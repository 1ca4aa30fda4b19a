"""Optimal part sizes for an expansion, over the probability simplex.

With parts of size ``x_w N`` the expansion has ``f(x) N^4 + O(N^3)`` edges,
where

    f(x) = sum_{edges e} prod_{w in e} x_w                      (E1111)
         + 1/4 sum_{u < v} x_u^2 x_v^2                          (E22)
         + sum_w x_w^3 / 6 * mass_w                             (E31)
         + sum_w q_w x_w^4 / 24                                 (internal)

``mass_w`` is the mean weight of the two critical sets when ``d(w) = 1`` (even
and odd triples are equally common) and the weight of ``I_w^0`` when
``d(w) = 0``; ``q_w`` is 5/16 or 1.  The quantity minimized is the rescaled
density ``g(x) = (alpha + 1)^3 f(x) / (sum x)^4``, which is invariant under
scaling ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .constructions.expansion import ExpansionSpec
from .errors import NonPositiveWeight

SNAP_DENOMINATOR = 10**6


@dataclass(frozen=True, eq=False)
class ExpansionObjective:
    n: int
    edges: np.ndarray
    crit0: tuple[tuple[int, ...], ...]
    crit1: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    alpha: int

    @classmethod
    def from_spec(cls, spec: ExpansionSpec) -> ExpansionObjective:
        return cls(
            spec.host.n,
            spec.host.edges,
            tuple(tuple(sorted(s)) for s in spec.crit0),
            tuple(tuple(sorted(s)) for s in spec.crit1),
            tuple(spec.d),
            spec.host_alpha,
        )

    @property
    def scale(self) -> int:
        return (self.alpha + 1) ** 3

    def _mass_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n))
        for w in range(self.n):
            if self.d[w]:
                for j in self.crit0[w]:
                    m[w, j] += 0.5
                for j in self.crit1[w]:
                    m[w, j] += 0.5
            else:
                for j in self.crit0[w]:
                    m[w, j] += 1.0
        return m

    def _internal(self) -> np.ndarray:
        return np.array([5 / 16 if f else 1.0 for f in self.d])

    # exact route

    def exact(self, x: Sequence) -> Fraction:
        """g at a rational point, in exact arithmetic."""
        x = [Fraction(v) for v in x]
        if len(x) != self.n:
            raise ValueError(f"expected {self.n} weights")
        if any(v <= 0 for v in x):
            raise NonPositiveWeight("weights must be strictly positive")
        f = Fraction(0)
        for a, b, c, d in self.edges.tolist():
            f += x[a] * x[b] * x[c] * x[d]
        sq = [v * v for v in x]
        f += (sum(sq) ** 2 - sum(s * s for s in sq)) / 8
        for w in range(self.n):
            if self.d[w]:
                mass = (sum(x[j] for j in self.crit0[w]) + sum(x[j] for j in self.crit1[w])) / 2
                q = Fraction(5, 16)
            else:
                mass = sum((x[j] for j in self.crit0[w]), Fraction(0))
                q = Fraction(1)
            f += x[w] ** 3 / 6 * mass + q * x[w] ** 4 / 24
        return self.scale * f / sum(x) ** 4

    # float route

    def value(self, x: np.ndarray) -> float:
        x = np.asarray(x, dtype=float)
        if np.any(x <= 0):
            raise NonPositiveWeight("weights must be strictly positive")
        return self._value(x)

    def _value(self, x: np.ndarray) -> float:
        f = np.prod(x[self.edges], axis=1).sum() if len(self.edges) else 0.0
        sq = x * x
        f += (sq.sum() ** 2 - (sq * sq).sum()) / 8
        f += (x**3 / 6 * (self._mass_matrix() @ x)).sum()
        f += (self._internal() * x**4 / 24).sum()
        return float(self.scale * f / x.sum() ** 4)

    def gradient(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        n = self.n
        mm = self._mass_matrix()
        df = np.zeros(n)
        f = 0.0
        if len(self.edges):
            p = x[self.edges]
            f = np.prod(p, axis=1).sum()
            for k in range(4):
                others = np.prod(np.delete(p, k, axis=1), axis=1)
                np.add.at(df, self.edges[:, k], others)
        sq = x * x
        f += (sq.sum() ** 2 - (sq * sq).sum()) / 8
        df += 0.5 * x * sq.sum() - 0.5 * x**3
        mass = mm @ x
        f += (x**3 / 6 * mass).sum()
        df += x**2 / 2 * mass + mm.T @ (x**3 / 6)
        q = self._internal()
        f += (q * x**4 / 24).sum()
        df += q * x**3 / 6
        s = x.sum()
        return self.scale * (df / s**4 - 4 * f / s**5)


def gradient_check(obj: ExpansionObjective, x, h: float = 1e-6) -> float:
    """Largest |analytic - central difference| / (1 + |analytic|) over coordinates."""
    if not 1e-8 <= h <= 1e-4:
        raise ValueError("step must lie in [1e-8, 1e-4]")
    x = np.asarray(x, dtype=float)
    g = obj.gradient(x)
    err = 0.0
    for j in range(obj.n):
        e = np.zeros(obj.n)
        e[j] = h
        fd = (obj.value(x + e) - obj.value(x - e)) / (2 * h)
        err = max(err, abs(g[j] - fd) / (1 + abs(g[j])))
    return err


def project_simplex(y: np.ndarray, floor: float = 0.0) -> np.ndarray:
    """Euclidean projection onto {x >= floor, sum x = 1}."""
    n = y.size
    mass = 1.0 - n * floor
    z = y - floor
    u = np.sort(z)[::-1]
    css = np.cumsum(u) - mass
    rho = np.nonzero(u - css / np.arange(1, n + 1) > 0)[0][-1]
    theta = css[rho] / (rho + 1)
    return np.maximum(z - theta, 0.0) + floor


@dataclass
class OptimizerResult:
    x: np.ndarray
    x_rational: list[Fraction]
    value: float
    value_certified: Fraction
    iterations: int
    converged: bool
    restart: int

    def to_json(self) -> dict:
        return {
            "x": [float(v) for v in self.x],
            "value": self.value,
            "value_certified_num": self.value_certified.numerator,
            "value_certified_den": self.value_certified.denominator,
            "iterations": self.iterations,
            "converged": self.converged,
            "restart": self.restart,
        }


def _descend(obj, x, max_iter, floor):
    val = obj._value(x)
    history = [val]
    step = 1.0
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        g = obj.gradient(x)
        while True:
            cand = project_simplex(x - step * g, floor)
            cval = obj._value(cand)
            if cval <= val - 1e-4 * g @ (x - cand) or step < 1e-14:
                break
            step *= 0.5
        if cval < val:
            x, val = cand, cval
        step = min(step * 2.0, 1e3)
        history.append(val)
        if len(history) > 50 and history[-51] - val <= 1e-10 * abs(history[-51]):
            converged = True
            break
    return x, val, it, converged


def _pattern_search(obj, x, val, floor, rounds=200):
    """Compass search along transfers e_i - e_j, which keep the sum fixed."""
    n = x.size
    delta = 1e-3
    for _ in range(rounds):
        improved = False
        for i in range(n):
            for j in range(n):
                if i == j or x[j] - delta < floor:
                    continue
                cand = x.copy()
                cand[i] += delta
                cand[j] -= delta
                cval = obj._value(cand)
                if cval < val:
                    x, val, improved = cand, cval, True
        if not improved:
            delta /= 2
            if delta < 1e-12:
                break
    return x, val


def snap(x: np.ndarray, max_den: int = SNAP_DENOMINATOR) -> list[Fraction]:
    q = [Fraction(float(v)).limit_denominator(max_den) for v in x]
    if any(v <= 0 for v in q):
        q = [max(v, Fraction(1, max_den)) for v in q]
    return q


def minimize(
    obj: ExpansionObjective, seed: int = 1, restarts: int = 32, max_iter: int = 5000
) -> OptimizerResult:
    """Multi-start projected gradient descent with a compass-search polish.

    Restart 0 starts from the uniform point, the others from Dirichlet(1)
    samples; the best value wins and ties go to the lowest restart index.
    """
    n = obj.n
    floor = 1e-9
    rng = np.random.default_rng(seed)
    starts = [np.full(n, 1.0 / n)] + [rng.dirichlet(np.ones(n)) for _ in range(max(restarts, 1) - 1)]
    best = None
    for r, x0 in enumerate(starts):
        x0 = project_simplex(x0, floor)
        x, val, iters, converged = _descend(obj, x0, max_iter, floor)
        x, val = _pattern_search(obj, x, val, floor)
        if best is None or val < best[1]:
            best = (x, val, iters, converged, r)
    x, val, iters, converged, r = best
    q = snap(x)
    return OptimizerResult(
        x=x / x.sum(),
        x_rational=q,
        value=val,
        value_certified=obj.exact(q),
        iterations=iters,
        converged=converged,
        restart=r,
    )
