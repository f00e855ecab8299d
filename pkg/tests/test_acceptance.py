"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal
summary (see conftest.py).  Run alone with

    pytest tests/test_acceptance.py -v
"""
import math
import time

import numpy as np
import pytest

from korobov import (
    FourierPoly,
    approximate,
    brute_force_spectrum,
    count_box_oracle,
    enumerate_top,
    fit_exponent,
    h_norm,
    info_complexity,
    info_complexity_upper_bound,
    l2_error,
    riemann_zeta,
    spt_exponent,
    worst_case_error,
    worst_case_witness,
)
from korobov.complexity import minimal_box
from korobov.spectrum import certified_prefix_length, certifying_box

from conftest import ACCEPTANCE_LINES, make

WEIGHTS = ["const:1", "poly:2", "list:0.5,0.25,0.125,0.0625"]
SMOOTHNESS = ["const:1", "list:0.6,1,2"]
CONFIGS = [(g, a) for g in WEIGHTS for a in SMOOTHNESS]
EPS_GRID = [0.9, 0.6, 0.45, 0.3, 0.1]


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def test_1_spectrum_oracle_equivalence():
    n = 2000
    start = time.perf_counter()
    worst, short, mismatched = 0.0, [], []
    for d in (1, 2, 3):
        for g, a in CONFIGS:
            p = make(g, a)
            top = enumerate_top(p, d, n)
            box = certifying_box(p, d, math.nextafter(top[-1].value, 0.0))
            bf = brute_force_spectrum(p, d, box, top=n)
            m = certified_prefix_length(bf, p, d, box)
            if m < n:
                short.append((d, g, a, m))
            for x, y in zip(top[:m], bf[:m]):
                worst = max(worst, abs(x.value - y.value) / y.value)
                if x.index != y.index:
                    mismatched.append((d, g, a, x.index, y.index))
                    break
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and not short and not mismatched and elapsed < 30
    record(
        1,
        "enumerate_top(2000) == brute-force prefix",
        ok,
        f"{3 * len(CONFIGS)} configs, max rel err {worst:.1e}, uncertified {short}, "
        f"index mismatches {len(mismatched)}, {elapsed:.1f}s (< 30s)",
    )
    assert ok


def test_2_and_5_counting_equivalence_and_upper_bound():
    taus = [0.5, 0.75, 1.0, 1.5, 2.0, 3.0]
    start = time.perf_counter()
    mismatches, checked = [], 0
    bound_checks, violations = 0, []
    for d in (1, 2, 3, 4):
        for g, a in CONFIGS:
            p = make(g, a)
            for eps in EPS_GRID:
                exact = info_complexity(p, d, eps).count
                oracle = count_box_oracle(p, d, eps, minimal_box(p, d, eps))
                checked += 1
                if exact != oracle:
                    mismatches.append((d, g, a, eps, exact, oracle))
                for tau in taus:
                    if 2 * p.alpha(1) * tau > 1:
                        bound_checks += 1
                        if not exact <= info_complexity_upper_bound(p, d, eps, tau):
                            violations.append((d, g, a, eps, tau))
    elapsed = time.perf_counter() - start
    ok2 = not mismatches and elapsed < 60
    record(2, "info_complexity == box oracle", ok2, f"{checked} queries, {len(mismatches)} mismatches, {elapsed:.1f}s (< 60s)")
    ok5 = not violations
    record(5, "count <= 2 eps^-2tau prod(...)", ok5, f"{bound_checks} (config, eps, tau) checks, {len(violations)} violations")
    assert ok2, mismatches
    assert ok5, violations


def test_3_curse_exactness():
    p = make("const:1", "const:1")
    exact = [info_complexity(p, d, 0.5).count for d in range(1, 8)]
    at_half = exact == [3**d for d in range(1, 8)]
    others = [(eps, d) for eps in (0.95, 0.8, 0.6, 0.4, 0.3) for d in range(1, 8)]
    floor_ok = all(info_complexity(p, d, eps).count >= 3**d for eps, d in others)
    ok = at_half and floor_ok and exact[-1] == 2187
    record(3, "gamma=1: n(0.5, d) = 3^d, d=1..7", ok, f"counts {exact}; >= 3^d on {len(others)} other (eps, d) pairs: {floor_ok}")
    assert ok


def test_4_product_identity():
    p = make("list:0.5,0.5", "const:1")
    target = (1 + 0.5 * riemann_zeta(4).value) ** 2
    running, exceeded = 0.0, False
    for e in enumerate_top(p, 2, 100_000):
        running += e.value**2
        exceeded |= running > target
    gap = target - running
    ok = 0 <= gap <= 1e-6 and not exceeded and abs(target - 2.3751791) < 1e-7
    record(4, "sum of top 1e5 lambda^2 vs (1 + 0.5 zeta(4))^2", ok, f"target {target:.10f}, gap {gap:.2e} (<= 1e-6), exceeded {exceeded}")
    assert ok


def test_6_optimal_error():
    worst_gap = 0.0
    for d in (1, 2, 3):
        for g, a in CONFIGS:
            p = make(g, a)
            for n in range(0, 51):
                f, err = worst_case_witness(p, d, n)
                worst_gap = max(worst_gap, abs(err - worst_case_error(p, d, n)))
    rng = np.random.default_rng(20261018)
    beat = 0.0
    for trial in range(200):
        g, a = CONFIGS[trial % len(CONFIGS)]
        p = make(g, a)
        d = 1 + trial % 3
        n = int(rng.integers(0, 51))
        keys = {tuple(int(x) for x in rng.integers(-5, 6, size=d)) for _ in range(10)}
        coeffs = rng.normal(size=len(keys)) + 1j * rng.normal(size=len(keys))
        raw = FourierPoly(d, dict(zip(keys, coeffs)))
        scale = h_norm(raw, p) * rng.uniform(1.0, 3.0)
        f = FourierPoly(d, {k: c / scale for k, c in raw.terms.items()})
        beat = max(beat, l2_error(f, approximate(f, p, n)) - worst_case_error(p, d, n))
    ok = worst_gap <= 1e-12 and beat <= 1e-12
    record(6, "e(n) = sqrt(lambda_{n+1})", ok, f"witness gap {worst_gap:.1e}; 200 random unit-ball f, max excess {beat:.2e} (<= 1e-12)")
    assert ok


def test_7a_exponent_formula():
    got = [spt_exponent(make("poly:4", "const:1")), spt_exponent(make("geom:0.5", "const:1")), spt_exponent(make("poly:1", "const:2"))]
    ok = got == [1.0, 1.0, 2.0]
    record("7a", "p_str = 2 max(1/delta, 1/(2 alpha_1))", ok, f"got {got}, expected [1, 1, 2]")
    assert ok


def test_7b_empirical_exponent():
    start = time.perf_counter()
    grid = [2.0**-i for i in range(2, 11)]
    fit = fit_exponent(make("poly:4", "const:1"), 20, grid)
    elapsed = time.perf_counter() - start
    ok = 0.65 <= fit.slope <= 1.35 and elapsed < 300
    record("7b", "fitted slope for poly:4, d=20, eps to 2^-10 in [0.65, 1.35]", ok, f"slope {fit.slope:.4f}, counts {fit.counts}, {elapsed:.2f}s")
    assert ok, f"slope {fit.slope:.4f} outside [0.65, 1.35]"


def test_8_zeta_accuracy():
    e2 = abs(riemann_zeta(2).value - math.pi**2 / 6)
    e4 = abs(riemann_zeta(4).value - math.pi**4 / 90)
    ok = e2 <= 1e-12 and e4 <= 1e-12
    record(8, "zeta(2), zeta(4) closed forms", ok, f"errors {e2:.1e}, {e4:.1e} (<= 1e-12)")
    assert ok
