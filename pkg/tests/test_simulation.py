import math

import numpy as np
import pytest

from analyse.simulation import run_phase_transition, run_snr_sweep, trial_rng
from data.experiment_config import PhaseTransitionConfig, SnrSweepConfig, parse_series
from data.solve_report import SolverConfig
from data.trial_progress import TrialProgress


def _tiny_grid(**kwargs):
    options = dict(axes=(("r", [1, 2]), ("s", [1, 2])), fixed={"n": 16}, trials=2,
                   solver=SolverConfig(max_iters=400), base_seed=3)
    options.update(kwargs)
    return PhaseTransitionConfig(**options)


def _tiny_sweep(**kwargs):
    options = dict(snr_values=(0.0, math.inf), series=("vhm:1", "vhm:3", "mmv:3"), n=32, s=3, r=2,
                   delta=1 / 32, trials=3, metric="wraparound", base_seed=5)
    options.update(kwargs)
    return SnrSweepConfig(**options)


def test_trial_seeds_are_independent_of_order():
    a = trial_rng(0, 2, 5).standard_normal(3)
    trial_rng(0, 1, 1).standard_normal(10)
    b = trial_rng(0, 2, 5).standard_normal(3)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, trial_rng(0, 2, 6).standard_normal(3))


def test_phase_transition_config_validation():
    with pytest.raises(ValueError):
        _tiny_grid(axes=(("r", [1]), ("r", [2])))
    with pytest.raises(ValueError):
        _tiny_grid(fixed={"s": 2})
    with pytest.raises(ValueError):
        _tiny_grid(trials=0)
    with pytest.raises(ValueError):
        _tiny_grid(axes=(("r", [0, 1]), ("s", [1])))


def test_cells_are_row_major():
    cells = list(_tiny_grid().cells())
    assert [(i, j) for _, i, j, _ in cells] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert cells[1][3] == {"n": 16, "r": 1, "s": 2}


def test_parse_series():
    assert parse_series("vhm:6") == ("vhm", 6)
    for label in ("music:2", "vhm", "mmv:x"):
        with pytest.raises(ValueError):
            parse_series(label)


def test_sweep_config_validation():
    with pytest.raises(ValueError):
        _tiny_sweep(series=("mmv:1",))
    with pytest.raises(ValueError):
        _tiny_sweep(series=("vhm:4",))
    with pytest.raises(ValueError):
        _tiny_sweep(snr_values=(-math.inf,))
    with pytest.raises(ValueError):
        _tiny_sweep(metric="euclid")


@pytest.fixture(scope="module")
def tiny_grid():
    return run_phase_transition(_tiny_grid())


def test_phase_transition_counts(tiny_grid):
    assert tiny_grid.errors.shape == (2, 2, 2)
    counts = tiny_grid.counts
    assert np.all((counts >= 0) & (counts <= 2))
    # one snapshot row means the constraints fix X outright
    assert counts[0, 0] == 2 and counts[1, 0] == 2

    frame = tiny_grid.to_frame()
    assert list(frame.columns) == ["r", "s", "count"]
    assert len(frame) == 4


def test_looser_threshold_never_loses_successes(tiny_grid):
    assert np.all(tiny_grid.success_counts(1e-2) >= tiny_grid.success_counts(1e-3))


def test_phase_transition_is_deterministic(tiny_grid):
    again = run_phase_transition(_tiny_grid(), process_count=2)
    assert tiny_grid.to_frame().to_csv(index=False) == again.to_frame().to_csv(index=False)
    np.testing.assert_array_equal(tiny_grid.errors, again.errors)


def test_failed_trials_count_as_failures():
    grid = run_phase_transition(_tiny_grid(axes=(("s", [20]), ("n", [16])), fixed={"r": 1}))
    assert np.all(np.isinf(grid.errors))
    assert grid.counts.sum() == 0


@pytest.fixture(scope="module")
def tiny_sweep():
    return run_snr_sweep(_tiny_sweep())


def test_noiseless_sweep_is_exact(tiny_sweep):
    means = tiny_sweep.mean_errors
    assert means.shape == (3, 2)
    assert np.all(means[:, 1] <= 1e-4)


def test_noisy_sweep_entries_are_recorded(tiny_sweep):
    assert np.all(np.isfinite(tiny_sweep.errors)) and np.all(tiny_sweep.errors >= 0)
    assert tiny_sweep.failures.sum() == 0
    frame = tiny_sweep.to_frame()
    assert list(frame.columns) == ["snr", "estimator", "mean_error"]
    assert list(frame["estimator"][:3]) == ["vhm:1", "vhm:3", "mmv:3"]


def test_sweep_is_deterministic(tiny_sweep):
    again = run_snr_sweep(_tiny_sweep(), process_count=2)
    assert tiny_sweep.to_frame().to_csv(index=False) == again.to_frame().to_csv(index=False)


def test_progress_statistics():
    progress = TrialProgress(3)
    progress.increase()
    progress.increase(failed=True)
    stats = progress.to_dict()
    assert (stats["completed"], stats["failed"], stats["total"]) == (2, 1, 3)
    assert not progress.done
    progress.increase()
    assert progress.done


def _row_inversions(counts):
    return [int(np.sum(np.diff(row) > 0)) for row in counts]


@pytest.mark.slow
def test_phase_transition_over_r_and_s():
    grid = run_phase_transition(PhaseTransitionConfig(
        axes=(("r", [1, 2, 4, 8]), ("s", [1, 2, 4, 8])), fixed={"n": 64}, trials=10,
    ), process_count=None)
    counts = grid.counts
    rs = np.outer([1, 2, 4, 8], [1, 2, 4, 8])
    assert np.all(counts[rs <= 8] >= 8)
    assert np.all(counts[rs >= 48] <= 2)
    assert max(_row_inversions(counts)) <= 1
    assert max(_row_inversions(counts.T)) <= 1


@pytest.mark.slow
def test_sample_count_grows_with_snapshots():
    grid = run_phase_transition(PhaseTransitionConfig(
        axes=(("s", [4]), ("n", [24, 64])), fixed={"r": 4}, trials=10,
    ), process_count=None)
    low, high = grid.counts[0]
    assert high >= 8
    assert low <= 2


@pytest.mark.slow
def test_more_snapshots_help_at_moderate_noise():
    sweep = run_snr_sweep(SnrSweepConfig(snr_values=(20.0,), series=("vhm:1", "vhm:6"), trials=50),
                          process_count=None)
    one_row, six_rows = sweep.mean_errors[:, 0]
    assert six_rows <= 1.1 * one_row


@pytest.mark.slow
def test_outputs_do_not_depend_on_process_count():
    config = _tiny_grid(axes=(("r", [1, 2, 3]), ("s", [2, 3])), fixed={"n": 24}, trials=3,
                        solver=SolverConfig())
    serial = run_phase_transition(config, process_count=1).to_frame().to_csv(index=False)
    pooled = run_phase_transition(config, process_count=4).to_frame().to_csv(index=False)
    assert serial == pooled

    sweep = _tiny_sweep(trials=10)
    assert (run_snr_sweep(sweep, 1).to_frame().to_csv(index=False)
            == run_snr_sweep(sweep, 4).to_frame().to_csv(index=False))
