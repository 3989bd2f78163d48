import logging
import multiprocessing

import numpy as np

from analyse.metrics import hausdorff, relative_error
from data.estimators import Estimator
from data.experiment_config import parse_series
from data.lift_shape import LiftShape
from data.trial_grid import SweepResult, TrialGrid
from data.trial_progress import TrialProgress
from managers.model_maker import add_noise, sample_instance, sample_model, synthesize_data_matrix
from operators.measurement import apply_A
from solver.vhl_solver import VhlSolver

logger = logging.getLogger(__name__)

# Largest possible Hausdorff distance on [0, 1) for each metric
_WORST_ERROR = {"plain": 1.0, "wraparound": 0.5}


def trial_rng(base_seed, cell_index, trial):
    return np.random.default_rng(np.random.SeedSequence([base_seed, cell_index, trial]))


def phase_transition_trial(task):
    cell_index, trial, params, config = task
    n, s, r = params["n"], params["s"], params["r"]
    try:
        model, subspace = sample_instance(n, s, r, trial_rng(config.base_seed, cell_index, trial),
                                          distribution=config.distribution, delta=config.delta)
        X = synthesize_data_matrix(model, n)
        report = VhlSolver(config.solver).solve(apply_A(X, subspace.entries), subspace, LiftShape.default(n, s))
        error = relative_error(report.X_hat, X)
    except Exception as e:
        logger.warning("trial %d of cell %d (n=%d, s=%d, r=%d) failed: %s", trial, cell_index, n, s, r, e)
        return cell_index, trial, np.inf, True
    return cell_index, trial, error, False


def snr_sweep_trial(task):
    snr_index, trial, snr_db, config = task
    rng = trial_rng(config.base_seed, snr_index, trial)
    try:
        model = sample_model(config.r, config.s, rng, amp_law=config.amp_law, delta=config.delta,
                             orient_law=config.orient_law)
        X = add_noise(synthesize_data_matrix(model, config.n), snr_db, rng, complex_noise=config.complex_noise)
    except Exception as e:
        logger.warning("trial %d at %.1f dB could not draw an instance: %s", trial, snr_db, e)
        count = len(config.series)
        return snr_index, trial, [_WORST_ERROR[config.metric]] * count, [True] * count

    errors = []
    failures = []
    for label in config.series:
        name, rows = parse_series(label)
        try:
            estimator = Estimator.create(name, config.r, grid_step=config.grid_step)
            taus_hat = estimator.estimate(X[:rows]).taus
            errors.append(hausdorff(model.taus, taus_hat, config.metric))
            failures.append(False)
        except Exception as e:
            logger.warning("series %s failed at %.1f dB, trial %d: %s", label, snr_db, trial, e)
            errors.append(_WORST_ERROR[config.metric])
            failures.append(True)
    return snr_index, trial, errors, failures


class Simulation:
    """Runs independent trials, optionally on a process pool.

    Results are stored by (cell, trial) index, so they do not depend on the
    number of processes or the order in which trials finish.
    """

    def __init__(self, process_count=1):
        self.process_count = multiprocessing.cpu_count() if process_count is None else max(1, process_count)

    def run_tasks(self, worker, tasks, progress_every):
        progress = TrialProgress(len(tasks))
        if self.process_count == 1:
            results = map(worker, tasks)
            yield from self._track(results, progress, progress_every)
            return

        with multiprocessing.Pool(self.process_count) as pool:
            results = pool.imap_unordered(worker, tasks)
            yield from self._track(results, progress, progress_every)

    @staticmethod
    def _track(results, progress, progress_every):
        for result in results:
            progress.increase(failed=np.any(result[-1]))
            if progress.completed % progress_every == 0 or progress.done:
                stats = progress.to_dict()
                logger.info("%d/%d trials (%d failed), %.1fs elapsed, %.2f trials/s",
                            stats["completed"], stats["total"], stats["failed"],
                            stats["time_elapsed"], stats["trials_per_second"])
            yield result


class PhaseTransitionSimulation(Simulation):
    def __init__(self, config, process_count=1):
        super().__init__(process_count)
        self.config = config

    def run(self):
        config = self.config
        shape = tuple(len(values) for _, values in config.axes)
        errors = np.full(shape + (config.trials,), np.inf)

        positions = {}
        tasks = []
        for cell_index, i, j, params in config.cells():
            positions[cell_index] = (i, j)
            tasks.extend((cell_index, trial, params, config) for trial in range(config.trials))

        for cell_index, trial, error, _ in self.run_tasks(phase_transition_trial, tasks, config.trials):
            i, j = positions[cell_index]
            errors[i, j, trial] = error

        return TrialGrid(
            axes=tuple((name, [int(value) for value in values]) for name, values in config.axes),
            fixed=dict(config.fixed),
            trials_per_cell=config.trials,
            errors=errors,
            threshold=config.threshold,
            base_seed=config.base_seed,
        )


class SnrSweepSimulation(Simulation):
    def __init__(self, config, process_count=1):
        super().__init__(process_count)
        self.config = config

    def run(self):
        config = self.config
        shape = (len(config.series), len(config.snr_values), config.trials)
        errors = np.zeros(shape)
        failed = np.zeros(shape, dtype=bool)

        tasks = [
            (snr_index, trial, float(snr_db), config)
            for snr_index, snr_db in enumerate(config.snr_values)
            for trial in range(config.trials)
        ]
        for snr_index, trial, trial_errors, trial_failures in self.run_tasks(snr_sweep_trial, tasks, config.trials):
            errors[:, snr_index, trial] = trial_errors
            failed[:, snr_index, trial] = trial_failures

        return SweepResult(
            snr_values=[float(snr) for snr in config.snr_values],
            series=list(config.series),
            errors=errors,
            failures=failed.sum(axis=-1),
            trials=config.trials,
            metric=config.metric,
            base_seed=config.base_seed,
        )


def run_phase_transition(config, process_count=1):
    return PhaseTransitionSimulation(config, process_count).run()


def run_snr_sweep(config, process_count=1):
    return SnrSweepSimulation(config, process_count).run()
