from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_graph
from turan4.errors import IndexOutOfRange, TooLargeForBruteForce
from turan4.hypergraph import complete, disjoint_union, empty, from_edges
from turan4.solver import (
    SolveBudget,
    Status,
    alpha_bruteforce,
    alpha_exact,
    is_independent,
    tau,
)
from turan4.bounds import thomasse_yeo_edges


def test_oracle_equivalence_200_random_graphs():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        n = int(rng.integers(4, 15))
        g = random_graph(rng, n, float(rng.uniform(0.05, 0.6)))
        fast, slow = alpha_exact(g), alpha_bruteforce(g)
        assert fast.status is Status.EXACT
        assert fast.alpha == slow.alpha
        assert is_independent(g, fast.witness) and len(fast.witness) == fast.alpha
        assert is_independent(g, slow.witness)


@given(st.integers(4, 11), st.floats(0.0, 1.0), st.integers(0, 2**32 - 1))
def test_exact_solver_matches_oracle(n, p, seed):
    g = random_graph(np.random.default_rng(seed), n, p)
    assert alpha_exact(g).alpha == alpha_bruteforce(g).alpha


@given(st.integers(4, 11), st.floats(0.0, 1.0), st.integers(0, 2**32 - 1))
def test_thomasse_yeo_on_exact_solves(n, p, seed):
    g = random_graph(np.random.default_rng(seed), n, p)
    res = alpha_exact(g)
    assert 21 * (n - res.alpha) <= 5 * n + 4 * g.e
    assert g.e >= thomasse_yeo_edges(n, res.alpha)


@pytest.mark.parametrize("n", [0, 1, 3, 5, 9])
def test_empty_graph(n):
    assert alpha_exact(empty(n)).alpha == n
    assert alpha_bruteforce(empty(n)).alpha == n


@pytest.mark.parametrize("n", [4, 5, 8, 12])
def test_complete_graph(n):
    assert alpha_exact(complete(n)).alpha == 3
    assert alpha_bruteforce(complete(n)).alpha == 3


def test_alpha_is_additive_over_disjoint_union():
    rng = np.random.default_rng(5)
    parts = [random_graph(rng, 7, 0.5) for _ in range(3)]
    u = disjoint_union(parts)
    assert alpha_exact(u).alpha == sum(alpha_exact(p).alpha for p in parts)


def test_tau():
    assert tau(complete(9)) == (6, Status.EXACT)


def test_budget_gives_lower_bound_only():
    rng = np.random.default_rng(1)
    g = random_graph(rng, 30, 0.02)
    res = alpha_exact(g, SolveBudget(max_nodes=1))
    assert res.status is Status.LOWER_BOUND_ONLY
    assert is_independent(g, res.witness) and len(res.witness) == res.alpha
    assert res.alpha <= alpha_exact(g).alpha


def test_env_budget_for_large_graphs(monkeypatch):
    monkeypatch.setenv("TURAN_BUDGET_NODES", "7")
    assert SolveBudget.default_for(100).max_nodes == 7
    assert SolveBudget.default_for(20).max_nodes is None


def test_bruteforce_size_limit():
    with pytest.raises(TooLargeForBruteForce):
        alpha_bruteforce(empty(25))


def test_is_independent_errors():
    with pytest.raises(IndexOutOfRange):
        is_independent(complete(5), [0, 9])
    assert not is_independent(complete(5), [0, 1, 2, 3])
    assert is_independent(complete(5), [0, 1, 2])


def test_to_json():
    res = alpha_exact(from_edges(5, [[0, 1, 2, 3]]))
    doc = res.to_json()
    assert doc["alpha"] == 4 and doc["status"] == "Exact" and len(doc["witness"]) == 4
