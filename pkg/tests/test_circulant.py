import itertools
import math

import numpy as np
import pytest

from conftest import circulant_adjacency
from outerkplanar import (
    BudgetExceededError,
    CirculantSpec,
    Cut,
    adjacency_eigenvalue,
    adjacency_eigenvalues,
    cut_value,
    dirichlet_kernel,
    dirichlet_kernel_closed,
    exact_maxcut,
    laplacian_lambda_max,
    lemma_maxcut_bound,
    mercer_inner,
    mercer_min_bound,
    mohar_bound,
    xor_sum,
)


def test_spec_validation():
    spec = CirculantSpec(9, 2)
    assert spec.edge_count == 18
    with pytest.raises(ValueError):
        CirculantSpec(9, 0)
    with pytest.raises(ValueError):
        CirculantSpec(8, 4)  # needs 2r < n


def test_dirichlet_sum_form():
    assert dirichlet_kernel(0, 1.234) == 1.0
    for r in range(6):
        assert dirichlet_kernel(r, 0.0) == pytest.approx(2 * r + 1, abs=1e-12)
    # known root: theta = 2*pi/7 kills D_3
    assert abs(dirichlet_kernel(3, 2 * math.pi / 7)) < 1e-12
    with pytest.raises(ValueError):
        dirichlet_kernel(-1, 0.5)


def test_dirichlet_closed_matches_sum():
    grid = np.linspace(0.01, 2 * math.pi - 0.01, 400)
    for r in range(9):
        diff = np.abs(dirichlet_kernel(r, grid) - dirichlet_kernel_closed(r, grid))
        assert float(diff.max()) < 1e-10, r


def test_dirichlet_closed_singularities():
    with pytest.raises(ValueError):
        dirichlet_kernel_closed(3, 0.0)
    with pytest.raises(ValueError):
        dirichlet_kernel_closed(3, 2 * math.pi)
    with pytest.raises(ValueError):
        dirichlet_kernel_closed(3, np.array([0.5, 0.0]))


def test_dirichlet_shapes():
    out = dirichlet_kernel(2, np.array([0.1, 0.2]))
    assert isinstance(out, np.ndarray) and out.shape == (2,)
    assert isinstance(dirichlet_kernel(2, 0.1), float)


def test_adjacency_eigenvalue_frozen():
    assert adjacency_eigenvalue(CirculantSpec(8, 2), 1) == pytest.approx(
        math.sqrt(2), abs=1e-12)
    with pytest.raises(ValueError):
        adjacency_eigenvalue(CirculantSpec(8, 2), 8)


def test_eigenvalues_match_dense_solver():
    for n in range(3, 17):
        for r in range(1, (n - 1) // 2 + 1):
            spec = CirculantSpec(n, r)
            lam = np.sort(adjacency_eigenvalues(spec))
            ref = np.linalg.eigvalsh(circulant_adjacency(n, r))
            assert float(np.abs(lam - ref).max()) < 1e-9, (n, r)


def test_eigenvector_residuals():
    # cos(2*pi*j*m/n) is a real eigenvector for frequency j
    for n in range(3, 17):
        for r in range(1, (n - 1) // 2 + 1):
            spec = CirculantSpec(n, r)
            a = circulant_adjacency(n, r)
            for j in range(n):
                lam = adjacency_eigenvalue(spec, j)
                x = np.cos(2 * math.pi * j * np.arange(n) / n)
                assert float(np.abs(a @ x - lam * x).max()) < 1e-9, (n, r, j)


def test_laplacian_lambda_max():
    assert laplacian_lambda_max(CirculantSpec(5, 1)) == pytest.approx(
        3.618033988749895, abs=1e-12)
    assert laplacian_lambda_max(CirculantSpec(9, 2)) == pytest.approx(6.0, abs=1e-9)
    for n in range(3, 15):
        for r in range(1, (n - 1) // 2 + 1):
            spec = CirculantSpec(n, r)
            a = circulant_adjacency(n, r)
            lap = 2 * r * np.eye(n) - a
            ref = float(np.linalg.eigvalsh(lap)[-1])
            assert laplacian_lambda_max(spec) == pytest.approx(ref, abs=1e-9)


def test_mohar_values():
    assert mohar_bound(CirculantSpec(5, 1)) == pytest.approx(4.522542485937368, abs=1e-12)
    # the even cycle and C_12^{1,2} are tight cases
    assert mohar_bound(CirculantSpec(6, 1)) == pytest.approx(6.0, abs=1e-9)
    assert exact_maxcut(CirculantSpec(6, 1)).value == 6
    assert mohar_bound(CirculantSpec(12, 2)) == pytest.approx(18.0, abs=1e-9)
    assert exact_maxcut(CirculantSpec(12, 2)).value == 18


def test_mercer_branches():
    assert mercer_inner(2) == pytest.approx(-4.123190204786391, abs=1e-12)
    assert mercer_min_bound(2) == pytest.approx(-8.246380409572781, abs=1e-12)
    inner176 = mercer_inner(176)
    assert inner176 == pytest.approx(-0.4997146259671037, abs=1e-12)
    assert -0.5 < inner176 < -0.49
    for r in (2, 5, 50, 176, 400):
        assert mercer_min_bound(r) == pytest.approx(
            min(-5.0 / 12.0, mercer_inner(r)) * r, abs=1e-12)
    with pytest.raises(ValueError):
        mercer_inner(1)
    with pytest.raises(ValueError):
        mercer_min_bound(1)


def test_mercer_bounds_kernel_minimum():
    grid = np.linspace(0.0, 2 * math.pi, 4001)
    for r in range(2, 21):
        kernel_min = float(dirichlet_kernel(r, grid).min())
        assert kernel_min >= mercer_min_bound(r) - 1e-9, r


def test_lemma_maxcut_bound():
    assert lemma_maxcut_bound(CirculantSpec(10, 2)) == pytest.approx(772.5)
    # refinement only kicks in from r = 176; below it falls back to rn
    assert lemma_maxcut_bound(CirculantSpec(10, 2), refined=True) == 20.0
    big = CirculantSpec(1000, 200)
    assert lemma_maxcut_bound(big, refined=True) == pytest.approx(125250.0)
    assert lemma_maxcut_bound(big, refined=True) < lemma_maxcut_bound(big)


def test_cut_value_checks():
    spec = CirculantSpec(8, 2)
    with pytest.raises(ValueError):
        cut_value(spec, (0, 1, 0))
    with pytest.raises(ValueError):
        cut_value(spec, (0, 1, 2, 0, 1, 0, 1, 0))


def test_exact_maxcut_frozen():
    cut = exact_maxcut(CirculantSpec(8, 2))
    assert cut == Cut(sides=(0, 0, 1, 1, 0, 0, 1, 1), value=12)
    assert cut_value(CirculantSpec(8, 2), cut.sides) == cut.value
    cut = exact_maxcut(CirculantSpec(12, 3))
    assert cut.value == 24
    assert cut.sides == (0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1)


def test_exact_maxcut_chunking_is_invisible():
    default = exact_maxcut(CirculantSpec(12, 3))
    chunked = exact_maxcut(CirculantSpec(12, 3), chunk_size=17)
    assert default == chunked


def test_exact_maxcut_against_itertools():
    spec = CirculantSpec(7, 2)
    best = max(
        cut_value(spec, (0,) + rest)
        for rest in itertools.product((0, 1), repeat=6)
    )
    assert exact_maxcut(spec).value == best


def test_exact_maxcut_budget():
    with pytest.raises(BudgetExceededError):
        exact_maxcut(CirculantSpec(29, 3))


def test_xor_sum_examples():
    assert xor_sum("0101", 1) == 8
    assert xor_sum("0011", 1, mode="bounded") == 2
    assert xor_sum([0, 1, 0, 1], 1) == 8
    with pytest.raises(ValueError):
        xor_sum("0101", 0)
    with pytest.raises(ValueError):
        xor_sum("", 1)
    with pytest.raises(ValueError):
        xor_sum("0102", 1)
    with pytest.raises(ValueError):
        xor_sum("0101", 1, mode="torus")


def test_xor_sum_duality_and_caps(rng):
    for _ in range(200):
        n = rng.randint(5, 40)
        r = rng.randint(1, (n - 1) // 2)
        bits = "".join(rng.choice("01") for _ in range(n))
        spec = CirculantSpec(n, r)
        cyc = xor_sum(bits, r)
        assert cyc == 2 * cut_value(spec, [int(b) for b in bits])
        bounded = xor_sum(bits, r, mode="bounded")
        assert bounded <= cyc <= 2 * r * n


def test_xor_sum_bounded_truncates_r():
    # r past the string length only drops already-absent pairs
    assert xor_sum("01", 5, mode="bounded") == xor_sum("01", 1, mode="bounded")
