import json
from dataclasses import dataclass, fields

from data.experiment_config import PHASE_AXES, SnrSweepConfig, parse_series
from data.solve_report import SolverConfig
from data.subspace_matrix import Distribution

COMMANDS = ("synth", "solve", "music", "phase-transition", "snr-sweep")
ESTIMATORS = ("vhm", "single", "mmv")

# Trial counts follow the experiments they reproduce: 20 per phase-transition cell, 100 per SNR point
DEFAULT_TRIALS = {"phase-transition": 20, "snr-sweep": 100}

# Default sweep series use up to six rows
COMMAND_DEFAULTS = {"snr-sweep": {"s": 6}}


@dataclass
class RunConfig:
    command: str = None
    # problem
    n: int = 64
    s: int = 3
    r: int = 4
    seed: int = 0
    distribution: str = "gaussian"
    snr: float = None
    delta: float = None
    # solver
    rho: float = 1.0
    tol: float = 1e-7
    max_iters: int = 5000
    # estimation
    estimator: str = "vhm"
    row: int = 0
    rows: int = None
    grid_step: float = 1e-4
    # io
    model: str = "model.json"
    y: str = "y.csv"
    x: str = "X.csv"
    truth: str = None
    psf_model: str = None
    out: str = "."
    svg: bool = False
    # experiments
    axes: list = None
    r_values: list = None
    s_values: list = None
    n_values: list = None
    trials: int = None
    threshold: float = 1e-3
    snr_values: list = None
    series: list = None
    law: str = "gaussian"
    metric: str = "plain"
    threads: int = 1

    @classmethod
    def from_sources(cls, command, file_values=None, flag_values=None):
        """Built-in defaults, overridden by config-file keys, overridden by flags."""
        known = {f.name for f in fields(cls)}
        values = dict(COMMAND_DEFAULTS.get(command, {}))
        for source in (file_values or {}, flag_values or {}):
            unknown = set(source) - known
            if unknown:
                raise ValueError(f"unknown configuration keys: {sorted(unknown)}")
            values.update({key: value for key, value in source.items() if value is not None})
        values["command"] = command
        config = cls(**values)
        config.validate()
        return config

    @staticmethod
    def read_file(path):
        with open(path, "r") as f:
            try:
                document = json.load(f)
            except json.JSONDecodeError as e:
                raise ValueError(f"config file {path}: {e}") from e
        if not isinstance(document, dict):
            raise ValueError(f"config file {path} must hold a JSON object")
        return document

    @property
    def trial_count(self):
        return self.trials if self.trials is not None else DEFAULT_TRIALS.get(self.command, 1)

    def solver_config(self):
        return SolverConfig(rho=self.rho, max_iters=self.max_iters, tol_rel=self.tol)

    def validate(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        for name in ("n", "s", "r"):
            if int(getattr(self, name)) < 1:
                raise ValueError(f"--{name} must be a positive integer, got {getattr(self, name)}")
        if self.delta is not None and not 0 < self.delta < 1:
            raise ValueError(f"--delta must lie in (0, 1), got {self.delta}")
        if self.estimator not in ESTIMATORS:
            raise ValueError(f"--estimator must be one of {ESTIMATORS}, got {self.estimator!r}")
        if self.rows is not None and self.rows < 1:
            raise ValueError(f"--rows must be positive, got {self.rows}")
        if not 0 < self.grid_step < 1:
            raise ValueError(f"--grid-step must lie in (0, 1), got {self.grid_step}")
        if self.threads < 1:
            raise ValueError(f"--threads must be positive, got {self.threads}")
        Distribution.parse(self.distribution)
        self.solver_config()

        if self.command == "phase-transition":
            if self.axes is not None and (len(self.axes) != 2 or not set(self.axes) <= set(PHASE_AXES)):
                raise ValueError(f"--axes must name two of {PHASE_AXES}, got {self.axes}")
        if self.command == "snr-sweep":
            for label in self.series or ():
                parse_series(label)

    def phase_axes(self):
        names = self.axes or ["r", "s"]
        defaults = {"r": [1, 2, 4, 8], "s": [1, 2, 4, 8], "n": [16, 24, 32, 48, 64]}
        axes = tuple((name, list(getattr(self, f"{name}_values") or defaults[name])) for name in names)
        (remaining,) = set(PHASE_AXES) - set(names)
        return axes, {remaining: int(getattr(self, remaining))}

    def sweep_config(self):
        overrides = {}
        if self.snr_values is not None:
            overrides["snr_values"] = tuple(self.snr_values)
        if self.series is not None:
            overrides["series"] = tuple(self.series)
        return SnrSweepConfig(
            n=self.n, s=self.s, r=self.r,
            delta=self.delta if self.delta is not None else 1 / self.n,
            orient_law=self.law, trials=self.trial_count, metric=self.metric,
            grid_step=self.grid_step, base_seed=self.seed, **overrides,
        )
