import logging
from pathlib import Path

import numpy as np

from analyse.incoherence import incoherence_diagnostic
from analyse.metrics import match_sources, psf_error, relative_error
from analyse.music import estimate_psfs, pick_peaks, recover_amplitudes
from analyse.simulation import run_phase_transition, run_snr_sweep
from data.estimators import Estimator
from data.errors import ShapeMismatchError
from data.experiment_config import PhaseTransitionConfig
from data.lift_shape import LiftShape
from frontend.svg_figures import plot_pseudospectrum, plot_sweep, plot_trial_grid
from managers.model_maker import add_noise, sample_instance, synthesize_data_matrix
from managers.model_store import ModelStore
from operators.measurement import apply_A
from solver.vhl_solver import VhlSolver

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_CONVERGED = 3
EXIT_IO = 4


def _out_dir(config):
    path = Path(config.out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def cmd_synth(config):
    out = _out_dir(config)
    model, subspace = sample_instance(config.n, config.s, config.r, config.seed,
                                      distribution=config.distribution, delta=config.delta)
    X = synthesize_data_matrix(model, config.n)

    ModelStore.save_model(out / "model.json", model, subspace, config.n)
    ModelStore.write_matrix(out / "X.csv", X, "x")
    ModelStore.write_matrix(out / "y.csv", apply_A(X, subspace.entries), "y")
    if config.snr is not None:
        noisy = add_noise(X, config.snr, np.random.default_rng([config.seed, 1]))
        ModelStore.write_matrix(out / "X_noisy.csv", noisy, "x")

    diagnostic = incoherence_diagnostic(model, LiftShape.default(config.n, config.s))
    print(f"n={config.n} s={config.s} r={config.r} mu1={diagnostic.mu1:.4g}")
    return EXIT_OK


def cmd_solve(config):
    _, subspace, n = ModelStore.load_model(config.model)
    y = ModelStore.read_vector(config.y)
    shape = LiftShape.default(n, subspace.s)

    report = VhlSolver(config.solver_config()).solve(y, subspace, shape)

    error = None
    if config.truth is not None:
        error = relative_error(report.X_hat, ModelStore.read_matrix(config.truth))

    out = _out_dir(config)
    ModelStore.write_report(out / "report.json", report, error)
    ModelStore.write_matrix(out / "Xhat.csv", report.X_hat, "x")

    summary = f"iters={report.iters} converged={report.converged} nuclear_norm={report.nuclear_norm:.6g}"
    print(summary if error is None else f"{summary} relative_error={error:.3e}")
    return EXIT_OK if report.converged else EXIT_NOT_CONVERGED


def _compare_psfs(path, X, sources):
    model, subspace, n = ModelStore.load_model(path)
    if (n, subspace.s) != X.shape[::-1]:
        raise ShapeMismatchError(f"model.json describes n={n}, s={subspace.s} but X is {X.shape[0]} x {X.shape[1]}")

    psfs_hat = estimate_psfs(subspace, sources)
    psfs_true = subspace.entries @ model.orients[:, match_sources(model.taus, sources.taus_hat)]
    errors = [psf_error(g, g_hat) for g, g_hat in zip(psfs_true.T, psfs_hat.T)]
    logger.info("PSF errors: %s", ", ".join(f"{error:.3e}" for error in errors))
    return {"psfs": psfs_hat, "psfs_true": psfs_true, "psf_errors": errors}


def cmd_music(config):
    X = ModelStore.read_matrix(config.x)
    if config.rows is not None:
        X = X[:config.rows]
    n = X.shape[1]

    kwargs = {"grid_step": config.grid_step}
    if config.estimator == "single":
        kwargs["row"] = config.row
    estimator = Estimator.create(config.estimator, config.r, **kwargs)

    curve = estimator.pseudospectrum(X)
    peaks = pick_peaks(curve, config.r)
    sources = recover_amplitudes(X, np.sort(peaks.taus), n)

    psfs = {}
    if config.psf_model is not None:
        psfs = _compare_psfs(config.psf_model, X, sources)

    out = _out_dir(config)
    ModelStore.write_pseudospectrum(out / "pseudospectrum.csv", curve)
    ModelStore.write_sources(out / "sources.json", sources, **psfs)
    if config.svg:
        plot_pseudospectrum(curve, peaks.taus, out / "pseudospectrum.svg")

    print("taus_hat=" + ",".join(f"{tau:.4f}" for tau in sources.taus_hat))
    return EXIT_OK


def cmd_phase_transition(config):
    axes, fixed = config.phase_axes()
    experiment = PhaseTransitionConfig(
        axes=axes, fixed=fixed, trials=config.trial_count, threshold=config.threshold,
        base_seed=config.seed, distribution=config.distribution, delta=config.delta,
        solver=config.solver_config(),
    )
    grid = run_phase_transition(experiment, config.threads)

    out = _out_dir(config)
    ModelStore.write_csv(out / "grid.csv", grid.to_frame())
    plot_trial_grid(grid, out / "grid.svg")
    return EXIT_OK


def cmd_snr_sweep(config):
    sweep = run_snr_sweep(config.sweep_config(), config.threads)
    failed = int(sweep.failures.sum())
    if failed:
        logger.warning("%d estimator runs failed and were scored at the worst distance", failed)

    out = _out_dir(config)
    ModelStore.write_csv(out / "sweep.csv", sweep.to_frame())
    plot_sweep(sweep, out / "sweep.svg")
    return EXIT_OK


COMMAND_HANDLERS = {
    "synth": cmd_synth,
    "solve": cmd_solve,
    "music": cmd_music,
    "phase-transition": cmd_phase_transition,
    "snr-sweep": cmd_snr_sweep,
}


def dispatch(config):
    return COMMAND_HANDLERS[config.command](config)
