"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line."""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import combinations

import numpy as np

from conftest import random_graph
from turan4.bounds import (
    corollary74_bound,
    expansion_density_bound,
    rainbow_finite_bound,
    rainbow_limit_bound,
    section8_exact,
    thomasse_yeo_edges,
    union_upper,
)
from turan4.constructions import (
    CircularSpec,
    HmLambdaSpec,
    circular_build,
    example2_spec,
    hm_build,
    hm_edge_formula,
    hm_invariant_suite,
    k5_line_construction,
    parity_construction,
    rainbow_build,
    two_k6_construction,
    z2cube_construction,
    zero_sum_cube,
)
from turan4.constructions.hm import TYPES, hm_type_formula
from turan4.constructions.parity import ParitySpec
from turan4.constructions.small import two_k6_variants
from turan4.optimizer import ExpansionObjective, gradient_check, minimize
from turan4.solver import Status, alpha_bruteforce, alpha_exact

UNIFORM = Fraction(52875, 65536)


def record(capsys, number: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[acceptance] criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_exact_rationals(capsys):
    t0 = time.perf_counter()
    r = expansion_density_bound(8, 14, 4, 32, 8)
    dt = time.perf_counter() - t0
    ok = r.t_value == Fraction(1269, 8192) and r.t_star == UNIFORM and dt < 1
    record(capsys, 1, ok, f"t(6,4) <= {r.t_value}, t_* <= {r.t_star} ({dt:.3f}s)")


def test_criterion_02_circular_census(capsys):
    t0 = time.perf_counter()
    seen = []
    ok = True
    for m in (2, 3, 4):
        h = circular_build(CircularSpec.uniform(zero_sum_cube(), m), validate=False)
        per = set(zip(h.census["E1"], h.census["E2"], h.census["E4"]))
        ok &= per == {(772, 216, 256)} and len(h.census["E1"]) == m and h.e == 1244 * m
        seen.append(h.e)
    dt = time.perf_counter() - t0
    ok &= dt < 5
    record(capsys, 2, ok, f"per-index (772, 216, 256), e = {seen} ({dt:.2f}s)")


def test_criterion_03_solver_certification(capsys):
    t0 = time.perf_counter()
    g2 = circular_build(CircularSpec.uniform(zero_sum_cube(), 2))
    res = alpha_exact(g2)
    dt1 = time.perf_counter() - t0
    t0 = time.perf_counter()
    h2 = rainbow_build(2)
    brute = alpha_bruteforce(h2)
    dt2 = time.perf_counter() - t0
    ok = (
        (g2.n, g2.e) == (32, 2488) and res.alpha == 6 and res.status is Status.EXACT
        and h2.n == 20 and brute.alpha == 4
        and dt1 < 60 and dt2 < 60
    )
    record(capsys, 3, ok, f"alpha(G_2) = {res.alpha} {res.status.value} ({dt1:.2f}s); "
                          f"alpha(H_2) = {brute.alpha} by exhaustive search ({dt2:.2f}s)")


def test_criterion_04_rainbow_limit(capsys):
    t0 = time.perf_counter()
    r = rainbow_limit_bound(2)
    target = Fraction(443, 5120)
    rel = abs(rainbow_finite_bound(6, 2) / target - 1)
    dt = time.perf_counter() - t0
    ok = (r.t_value == target and r.t_star == Fraction(3987, 5120)
          and r.t_star < Fraction("0.778711") and rel < Fraction(1, 1000) and dt < 5)
    record(capsys, 4, ok, f"t(7,4) <= {r.t_value}, t_* <= {r.t_star} ~ {r.decimal}; "
                          f"k=6 finite ratio off by {float(rel):.2e} ({dt:.2f}s)")


def test_criterion_05_hm_formula(capsys):
    t0 = time.perf_counter()
    bad = []
    for m in (4, 5):
        for lam in (1, 2, 3, 4):
            h = hm_build(HmLambdaSpec(m, lam))
            per = hm_type_formula(lam)
            if h.e != hm_edge_formula(m, lam) or any(h.census[t] != m * per[t] for t in TYPES):
                bad.append((m, lam))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 120
    record(capsys, 5, ok, f"8 (m, lambda) cases, mismatches {bad} ({dt:.1f}s)")


def test_criterion_06_headline_bound(capsys):
    t0 = time.perf_counter()
    rows = {(10, 2): "0.711838", (11, 2): "0.709199", (12, 2): "0.707575", (13, 2): "0.706727",
            (14, 2): "0.706485", (20, 3): "0.706452", (21, 3): "0.706335"}
    got = {key: corollary74_bound(*key).decimal for key in rows}
    dt = time.perf_counter() - t0
    head = corollary74_bound(21, 3)
    ok = got == rows and Fraction(head.decimal) >= head.t_star and dt < 1
    record(capsys, 6, ok, f"t_*(65,4) <= {head.decimal}; all 7 rows match ({dt:.3f}s)")


def test_criterion_07_small_ratio_formulas(capsys):
    ok = section8_exact(6, 4) == 3 and section8_exact(7, 4) == 7
    pairs = 0
    bad = []
    for n in range(1, 61):
        for a in range(3, n + 1):
            if not Fraction(3, 2) <= Fraction(n, a) <= Fraction(7, 4):
                continue
            pairs += 1
            s, u = section8_exact(n, a), union_upper(n, a)
            if 4 * n == 7 * a - 2:
                m = (n - 3) // 7
                if s is not None or u != 7 * m + 3:
                    bad.append((n, a, s, u))
            elif s != u:
                bad.append((n, a, s, u))
    ok &= not bad
    record(capsys, 7, ok, f"{pairs} (n, alpha) pairs, exceptional ones give 7m+3; mismatches {bad[:3]}")


def test_criterion_08_optimizer(capsys):
    obj = ExpansionObjective.from_spec(example2_spec())
    t0 = time.perf_counter()
    res = minimize(obj, seed=1, restarts=32)
    dt = time.perf_counter() - t0
    grad = gradient_check(obj, np.full(8, 0.125))
    ok = (res.value_certified < Fraction("0.80262") and res.value_certified <= UNIFORM
          and grad < 1e-4 and dt < 60)
    record(capsys, 8, ok, f"certified {float(res.value_certified):.7f} < 0.80262, "
                          f"gradient error {grad:.1e} ({dt:.1f}s)")


def test_criterion_09_small_constructions(capsys):
    t0 = time.perf_counter()
    k5, z2 = k5_line_construction(), z2cube_construction()
    variants = two_k6_variants()
    tk = two_k6_construction(0)
    res = [alpha_exact(h) for h in (k5, tk, z2)]
    dt = time.perf_counter() - t0
    ok = (
        (k5.n, k5.e, tk.n, tk.e, z2.n, z2.e) == (10, 20, 12, 51, 16, 220)
        and all(r.alpha == 5 and r.exact for r in res)
        and len(variants) >= 1 and dt < 30
    )
    record(capsys, 9, ok, f"k5line 10/20, twok6 12/51 ({len(variants)} variants), z2cube 16/220, "
                          f"alpha = {[r.alpha for r in res]} ({dt:.2f}s)")


def _every_5_subset_has_edge(g) -> bool:
    masks = np.array(g.edge_masks(), dtype=np.uint64)
    for s in combinations(range(g.n), 5):
        m = np.uint64(sum(1 << v for v in s))
        if masks.size == 0 or not np.any((masks & m) == masks):
            return False
    return True


def test_criterion_10_property_suites(capsys):
    rng = np.random.default_rng(10)
    oracle_bad = ty_bad = 0
    for _ in range(200):
        n = int(rng.integers(4, 15))
        g = random_graph(rng, n, float(rng.uniform(0.05, 0.6)))
        fast = alpha_exact(g)
        if fast.alpha != alpha_bruteforce(g).alpha:
            oracle_bad += 1
        if fast.exact and g.e < thomasse_yeo_edges(n, fast.alpha):
            ty_bad += 1
    parity_bad = 0
    for seed in range(20):
        n = int(rng.integers(0, 13))
        m = int(rng.integers(0, 13 - n))
        if not _every_5_subset_has_edge(parity_construction(ParitySpec.random(n, m, seed)).graph):
            parity_bad += 1
    rep = hm_invariant_suite(HmLambdaSpec(4, 1), 1000, seed=0)
    ok = oracle_bad == 0 and ty_bad == 0 and parity_bad == 0 and rep.ok
    record(capsys, 10, ok, f"oracle mismatches {oracle_bad}/200, parity failures {parity_bad}/20, "
                           f"H_4,1 violations {rep.violations}, Thomasse-Yeo failures {ty_bad}")
