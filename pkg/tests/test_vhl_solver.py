import numpy as np
import pytest
from numpy.testing import assert_allclose

from analyse.metrics import hausdorff, psf_error, relative_error
from analyse.music import estimate_psfs, recover_amplitudes
from data.estimators import VhmEstimator
from data.errors import DegenerateMeasurementError, ShapeMismatchError
from data.lift_shape import LiftShape
from data.solve_report import SolverConfig
from managers.model_maker import sample_instance, synthesize_data_matrix
from operators.hankel_lift import vec_hankel
from operators.measurement import apply_A
from solver.svt import nuclear_norm
from solver.vhl_solver import VhlSolver, solve_vhl


def _instance(n, s, r, seed):
    model, subspace = sample_instance(n, s, r, seed)
    X = synthesize_data_matrix(model, n)
    return X, subspace, apply_A(X, subspace.entries), LiftShape.default(n, s)


def test_solver_config_validation():
    for kwargs in ({"rho": 0}, {"tol_rel": -1e-3}, {"max_iters": 0}, {"svt_rank_cap": 0}):
        with pytest.raises(ValueError):
            SolverConfig(**kwargs)


def test_zero_measurements_give_zero_solution():
    _, subspace, _, shape = _instance(16, 2, 1, 0)
    report = solve_vhl(np.zeros(16), subspace, shape)
    assert not np.any(report.X_hat)
    assert report.nuclear_norm == 0
    assert report.converged
    assert report.iters <= 2


@pytest.fixture(scope="module")
def small_recovery():
    X, subspace, y, shape = _instance(16, 2, 1, 3)
    return X, subspace, y, shape, VhlSolver().solve(y, subspace, shape)


def test_recovers_a_small_instance(small_recovery):
    X, _, _, _, report = small_recovery
    if report.converged:
        assert report.primal_residual <= 1e-7 and report.dual_residual <= 1e-7
    assert relative_error(report.X_hat, X) < 1e-3


def test_solution_is_feasible(small_recovery):
    _, subspace, y, _, report = small_recovery
    assert_allclose(apply_A(report.X_hat, subspace.entries), y, atol=1e-10 * max(1.0, np.max(np.abs(y))))


def test_solution_is_no_worse_than_the_truth(small_recovery):
    X, _, _, shape, report = small_recovery
    assert report.nuclear_norm <= nuclear_norm(vec_hankel(X, shape)) * (1 + 1e-6)


@pytest.mark.parametrize("n, s, r, seed", [(16, 2, 1, 3), (24, 2, 1, 5), (32, 2, 2, 6), (32, 3, 1, 7)])
def test_residuals_never_grow_between_windows(n, s, r, seed):
    _, subspace, y, shape = _instance(n, s, r, seed)
    report = VhlSolver().solve(y, subspace, shape)
    history = np.max(np.asarray(report.history), axis=1)
    assert len(history) == report.iters

    window_peaks = [np.max(history[start:start + 50]) for start in range(0, len(history), 50)]
    for earlier, later in zip(window_peaks, window_peaks[1:]):
        assert later <= earlier


def test_scalar_snapshots_are_solved_by_projection():
    y = np.array([1.0, 2.0 - 1.0j, 0.5j, 3.0])
    report = solve_vhl(y, np.ones((4, 1)), LiftShape.default(4, 1))
    assert report.iters == 1
    assert report.converged
    assert_allclose(report.X_hat, y[None, :])


def test_zero_norm_row_is_rejected():
    B = np.ones((8, 2))
    B[3] = 0
    with pytest.raises(DegenerateMeasurementError):
        solve_vhl(np.ones(8), B, LiftShape.default(8, 2))


def test_measurement_length_must_match():
    with pytest.raises(ShapeMismatchError):
        solve_vhl(np.ones(7), np.ones((8, 2)), LiftShape.default(8, 2))


def test_iteration_cap_returns_an_unconverged_report():
    _, subspace, y, shape = _instance(16, 2, 2, 4)
    report = VhlSolver(SolverConfig(max_iters=1)).solve(y, subspace, shape)
    assert report.iters == 1
    assert not report.converged
    assert report.X_hat.shape == (2, 16)
    assert set(report.to_dict()) == {"n", "s", "iters", "primal_residual", "dual_residual",
                                     "nuclear_norm", "converged", "X_hat"}


@pytest.mark.slow
def test_recovers_the_reference_instance():
    model, subspace = sample_instance(64, 3, 4, 2024, delta=1 / 64)
    X = synthesize_data_matrix(model, 64)
    y, shape = apply_A(X, subspace.entries), LiftShape.default(64, 3)
    report = solve_vhl(y, subspace, shape)
    assert relative_error(report.X_hat, X) < 1e-3
    assert hausdorff(model.taus, VhmEstimator(4).estimate(report.X_hat).taus, "wraparound") <= 1e-4

    sources = recover_amplitudes(report.X_hat, model.taus, 64)
    truth = subspace.entries @ model.orients
    for g, g_hat in zip(truth.T, estimate_psfs(subspace, sources).T):
        assert psf_error(g, g_hat) < 1e-6
