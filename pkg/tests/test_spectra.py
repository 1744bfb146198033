import math

import numpy as np
import pytest

from fulleroct.goldberg import FIXTURE_NAMES
from fulleroct.graph import EmbeddedGraph
from fulleroct.spectra import (
    NotIndependentError,
    SizeBudgetError,
    SpectraError,
    Spectrum,
    adjacency_matrix,
    adjacency_spectrum,
    closed_shell_check,
    lambda_min_bound,
    laplacian_spectrum,
    maxcut_spectral_check,
    smallest_eigenvalue,
    symmetric_eigensystem,
)

PHI_SQUARED = ((1 + math.sqrt(5)) / 2) ** 2


# -- eigensolver core ----------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 8, 33, 80])
def test_eigensolver_against_library_oracle(n):
    rng = np.random.default_rng(n)
    a = rng.standard_normal((n, n))
    a = a + a.T
    ours, _ = symmetric_eigensystem(a)
    oracle = np.linalg.eigvalsh(a)
    scale = max(1.0, float(np.max(np.abs(oracle))))
    assert np.max(np.abs(ours - oracle)) / scale < 1e-12


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_eigensolver_on_fixture_adjacency(fullerenes, name):
    a = adjacency_matrix(fullerenes[name].base)
    ours, _ = symmetric_eigensystem(a)
    oracle = np.linalg.eigvalsh(a)
    assert np.max(np.abs(ours - oracle)) < 1e-10


def test_eigensolver_residuals():
    rng = np.random.default_rng(11)
    a = rng.standard_normal((50, 50))
    a = a + a.T
    w, v = symmetric_eigensystem(a, vectors=True)
    for i in (0, 10, 25, 49):
        res = np.linalg.norm(a @ v[:, i] - w[i] * v[:, i])
        assert res <= 1e-7 * np.linalg.norm(v[:, i])


def test_eigensolver_sorted_and_multiplicity(k4):
    w, _ = symmetric_eigensystem(adjacency_matrix(k4))
    assert np.allclose(w, [-1, -1, -1, 3], atol=1e-12)


# -- graph spectra ---------------------------------------------------------------


def test_k4_spectrum(k4):
    s = adjacency_spectrum(k4)
    assert [round(x, 9) for x in s.eigenvalues] == [-1.0, -1.0, -1.0, 3.0]


def test_dodecahedron_largest(fullerenes):
    assert adjacency_spectrum(fullerenes["20:1"].base).largest == pytest.approx(3.0)


def test_gp11_smallest_is_minus_phi_squared(gp11):
    lam = smallest_eigenvalue(gp11.base)
    assert abs(lam + PHI_SQUARED) < 1e-6


def test_corollary_bound_arithmetic():
    # n = 60: the bound evaluates to -2.2 and -phi^2 lies below it.
    assert lambda_min_bound(60) == pytest.approx(-2.2)
    assert -PHI_SQUARED <= lambda_min_bound(60)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_smallest_eigenvalue_bound(fullerenes, name):
    f = fullerenes[name]
    lam = smallest_eigenvalue(f.base)
    assert lam <= lambda_min_bound(f.n) + 1e-9


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_spectrum_traces(fullerenes, name):
    f = fullerenes[name]
    sa = adjacency_spectrum(f.base)
    sl = laplacian_spectrum(f.base)
    assert len(sa.eigenvalues) == f.n
    assert abs(sum(sa.eigenvalues)) <= f.n * 1e-9
    assert sum(sl.eigenvalues) == pytest.approx(2 * f.m, abs=1e-7)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_cubic_identity(fullerenes, name):
    f = fullerenes[name]
    sa = adjacency_spectrum(f.base)
    sl = laplacian_spectrum(f.base)
    assert abs(sl.largest - (3 - sa.smallest)) < 1e-8


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_maxcut_spectral_check(pipeline, name):
    f, tr, _ = pipeline[name]
    assert maxcut_spectral_check(f, tr)


def test_maxcut_rejects_unvalidated_graph(k4, pipeline):
    _, tr, _ = pipeline["20:1"]
    with pytest.raises(SpectraError):
        maxcut_spectral_check(k4, tr)


def test_maxcut_numbers_gp11(gp11):
    # 90 - 12 = 78 must not exceed 60 mu / 4 with mu = 3 + phi^2.
    mu = laplacian_spectrum(gp11.base).largest
    assert mu == pytest.approx(3 + PHI_SQUARED, abs=1e-8)
    assert 78 <= 60 * mu / 4


def test_size_budget(monkeypatch, k4):
    monkeypatch.setattr("fulleroct.spectra.DENSE_BUDGET", 3)
    with pytest.raises(SizeBudgetError):
        adjacency_spectrum(k4)


# -- closed shell ------------------------------------------------------------------


def test_closed_shell_single_edge():
    edge = EmbeddedGraph([(1,), (0,)])
    assert closed_shell_check(edge, []) is True


def test_closed_shell_triangle(triangle):
    assert closed_shell_check(triangle, []) is False


def test_closed_shell_rejects_dependent_set(triangle):
    with pytest.raises(NotIndependentError):
        closed_shell_check(triangle, [0, 1])


def test_closed_shell_verdict_recorded_for_gp11(gp11):
    from fulleroct.transversal import independent_set, odd_cycle_transversal

    isr = independent_set(gp11, odd_cycle_transversal(gp11))
    verdict = closed_shell_check(gp11.base, isr.vertices)
    assert verdict in (True, False, None)


def test_closed_shell_spectrum_size(fullerenes):
    g = fullerenes["20:1"].base
    keep = g.n - 4
    sub = adjacency_matrix(g)[np.ix_(range(keep), range(keep))]
    w, _ = symmetric_eigensystem(sub)
    assert len(w) == keep


def test_spectrum_sign_counts():
    s = Spectrum((-1.0, -1e-12, 1e-12, 2.0), 1e-8)
    assert s.positives() == 1 and s.negatives() == 1 and s.zeros() == 2
