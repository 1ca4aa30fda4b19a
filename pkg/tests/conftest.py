from __future__ import annotations

from itertools import combinations

import numpy as np
from hypothesis import HealthCheck, settings

from turan4.hypergraph import FourGraph, from_edges

settings.register_profile("repo", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def random_graph(rng: np.random.Generator, n: int, p: float) -> FourGraph:
    quads = list(combinations(range(n), 4))
    if not quads:
        return from_edges(n, [])
    keep = rng.random(len(quads)) < p
    return from_edges(n, [q for q, k in zip(quads, keep) if k])
