"""Acceptance gate: one check per advertised guarantee of the package.

Each test covers exactly one numbered guarantee, measures what the
guarantee states (including runtime where one is stated), and emits one
PASS/FAIL line into the terminal summary, so a single pytest run doubles
as the sign-off checklist.
"""

import math
import random
import time

import numpy as np

import conftest
from conftest import (
    circulant_adjacency,
    crossing_counts_np,
    crossing_pairs_by_subsets,
)
from outerkplanar import (
    BIPARTITE_UPPER_VARIANTS,
    GENERAL_UPPER_VARIANTS,
    CirculantSpec,
    NotApplicableError,
    bipartite_upper,
    canonical_form,
    complete_graph,
    cut_value,
    dirichlet_kernel,
    dirichlet_kernel_closed,
    epsilon_for,
    exact_maxcut,
    general_lower,
    general_upper,
    is_outer_k_planar,
    kx_chain,
    kxx_alternating,
    kxx_chain,
    lemma_maxcut_bound,
    max_edges,
    mercer_inner,
    mohar_bound,
    xor_sum,
)


def report(num, ok, detail):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_crossing_oracle_exactness():
    t0 = time.perf_counter()
    ok = True
    for n in range(5, 11):
        g = complete_graph(n)
        expected = math.comb(n, 4)
        pairs = crossing_pairs_by_subsets(n, set(g.edges))
        counts = crossing_counts_np(n, g.edges)
        ok &= len(pairs) == expected
        ok &= sum(counts.values()) == 2 * expected
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1.0
    report(1, ok,
           f"K_n crossing pairs equal C(n,4) and per-edge sums equal "
           f"2*C(n,4) for n=5..10 ({elapsed:.2f}s < 1s)")


def test_criterion_2_extremal_grid_n8():
    t0 = time.perf_counter()
    got = []
    witnesses_ok = True
    for k in range(4):
        res = max_edges(8, k)
        got.append(res.max_edges)
        witnesses_ok &= res.proven_optimal and is_outer_k_planar(res.witness, k)
    elapsed = time.perf_counter() - t0
    ok = got == [13, 16, 19, 19] and witnesses_ok and elapsed < 300
    report(2, ok,
           f"max_edges(8,k)={got} for k=0..3 with valid optimal witnesses "
           f"({elapsed:.1f}s < 300s); note: at k=3 the exhaustive optimum "
           f"is 19 while the closed-form target 3.25n-6 gives 20, so the "
           f"formula is not attained at n=8 (gap recorded, not assumed)")


def _applicable_uppers(n, k, bipartite):
    fn = bipartite_upper if bipartite else general_upper
    table = BIPARTITE_UPPER_VARIANTS if bipartite else GENERAL_UPPER_VARIANTS
    out = {}
    for variant in table:
        try:
            out[variant] = fn(n, k, variant)
        except NotApplicableError:
            continue
    return out


def test_criterion_3_construction_bound_sandwich():
    checks = 0
    violations = []
    instances = []
    for x in (3, 4, 5, 6, 8, 10, 12, 16, 20, 24, 30):
        max_blocks = (200 - 2) // (x - 2)
        for blocks in sorted({1, 2, 3, max_blocks // 2, max_blocks} - {0}):
            instances.append((kx_chain(x, blocks), False))
    for x in (1, 2, 3, 5, 8, 10, 14, 20):
        max_blocks = (200 - 2) // (2 * x - 2) if x > 1 else 1
        for blocks in sorted({1, 2, max_blocks} - {0}):
            if x == 1 and blocks > 1:
                continue
            instances.append((kxx_chain(x, blocks), True))
    for g, bipartite in instances:
        assert g.n <= 200
        counts = crossing_counts_np(g.n, g.edges)
        kmax = max(counts.values())
        # bipartite instances must also satisfy the general-family bounds
        families = (True, False) if bipartite else (False,)
        instance_checks = 0
        for family in families:
            for variant, value in _applicable_uppers(g.n, kmax, family).items():
                instance_checks += 1
                if g.m > value + 1e-9:
                    violations.append((g.n, kmax, family, variant, g.m, value))
        assert instance_checks > 0, (g.n, kmax)  # general local always applies
        checks += instance_checks
    ok = not violations and checks > 100
    report(3, ok,
           f"{len(instances)} chain instances (n<=200) against every "
           f"applicable upper bound: {checks} comparisons, "
           f"{len(violations)} violations")


def test_criterion_4_epsilon_consistency():
    e50 = epsilon_for(50)
    ok = 0.42 < e50 <= 0.43
    ok &= abs(e50 - 0.4243) < 5e-4
    ok &= e50 < 0.43
    vals = [epsilon_for(k) for k in range(3, 10**6 + 1, 1)]
    diffs_ok = all(a > b for a, b in zip(vals, vals[1:]))
    ok &= diffs_ok
    report(4, ok,
           f"epsilon_for(50)={e50:.6f} in (0.42, 0.43] and < 0.43; strictly "
           f"decreasing over every integer k in [3, 10^6]")


def test_criterion_5_circulant_sandwich():
    t0 = time.perf_counter()
    ok = True
    worst_gap = 0.0
    tight = []
    for r in range(1, 6):
        for n in range(2 * r + 1, 21):
            spec = CirculantSpec(n, r)
            exact = exact_maxcut(spec).value
            mohar = mohar_bound(spec)
            lemma = lemma_maxcut_bound(spec)
            ok &= exact <= mohar + 1e-9 <= lemma + 1e-9
            worst_gap = max(worst_gap, exact - mohar)
            if r == 1 and n % 2 == 0:
                tight.append(abs(exact - mohar))
    ok &= all(gap <= 1e-9 for gap in tight)
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 120
    report(5, ok,
           f"exact <= mohar <= lemma for all n<=20, r<=5; mohar tight on "
           f"even cycles (max dev {max(tight):.1e}) ({elapsed:.1f}s < 120s)")


def test_criterion_6_spectral_residuals():
    worst = 0.0
    for n in range(3, 65):
        freqs = np.arange(n)
        fourier = np.exp(2j * math.pi * np.outer(np.arange(n), freqs) / n)
        for r in range(1, (n - 1) // 2 + 1):
            spec = CirculantSpec(n, r)
            lam = dirichlet_kernel(r, 2 * math.pi * freqs / n) - 1.0
            a = circulant_adjacency(n, r)
            resid = np.abs(a @ fourier - fourier * lam[None, :]).max()
            worst = max(worst, float(resid))
    grid = np.linspace(0.01, 2 * math.pi - 0.01, 3000)
    kernel_gap = max(
        float(np.abs(dirichlet_kernel(r, grid) - dirichlet_kernel_closed(r, grid)).max())
        for r in range(0, 33))
    inner = mercer_inner(176)
    ok = worst <= 1e-9 and kernel_gap <= 1e-9 and abs(inner - (-0.4997)) <= 1e-4
    report(6, ok,
           f"eigenvector residuals <= {worst:.1e} for all n<=64; Dirichlet "
           f"sum vs closed form <= {kernel_gap:.1e} off the singular set; "
           f"mercer_inner(176)={inner:.5f} within 1e-4 of -0.4997")


def test_criterion_7_xor_sum_duality():
    rng = random.Random(1_000_003)
    ok = True
    for _ in range(10**4):
        n = rng.randint(3, 48)
        r = rng.randint(1, (n - 1) // 2)
        bits = [rng.randint(0, 1) for _ in range(n)]
        total = xor_sum(bits, r)
        ok &= total == 2 * cut_value(CirculantSpec(n, r), bits)
        ok &= total <= (5 * r / 4 + 152) * n
    report(7, ok,
           "cyclic xor_sum equals twice the circulant cut value and stays "
           "below (5r/4+152)n on 10^4 random (bits, r) samples")


def test_criterion_8_bipartite_fixed_point():
    res = max_edges(6, 2, "bipartite_alternating")
    same = canonical_form(res.witness) == canonical_form(kxx_alternating(3))
    ok = res.max_edges == 9 and same
    report(8, ok,
           f"max_edges(6,2,alternating)={res.max_edges} with witness "
           f"isomorphic to the alternating K_3,3 (canonical forms match)")


def test_criterion_9_asymptotic_proxies():
    # The headline statements are asymptotic; check their finite shadows:
    # the chain family certifies sqrt(k)*n from below, the direct bound
    # tracks (sqrt(2)+eps)*sqrt(k)*n from above, and eps(k) keeps falling.
    ok = True
    ratios = []
    for k in (25, 100, 2500, 10**4, 250000, 10**6):
        s = math.isqrt(k)
        x = 2 * s + 2
        blocks = max(1, round(3000 / (x - 2)))
        n = blocks * (x - 2) + 2
        lo = general_lower(n, k)
        ok &= lo.exact and lo.value >= math.sqrt(k) * n
        ok &= lo.value <= general_upper(n, k, "common")
        if k >= 176:
            direct = general_upper(n, k, "direct")
            ok &= lo.value <= direct
            ratios.append(direct / (math.sqrt(k) * n))
    ok &= ratios == sorted(ratios, reverse=True)
    ok &= ratios[-1] < 1.45  # approaching sqrt(2) ~ 1.4142 from above
    decades = [epsilon_for(10**p) for p in range(1, 7)]
    ok &= all(a > b for a, b in zip(decades, decades[1:]))
    ok &= decades[-1] < 0.005
    report(9, ok,
           f"asymptotics via finite proxies: chain >= sqrt(k)*n exactly on "
           f"admissible grids, direct/(sqrt(k)n) falls to {ratios[-1]:.4f} "
           f"at k=10^6, eps(10^6)={decades[-1]:.4f} and decade-monotone")
