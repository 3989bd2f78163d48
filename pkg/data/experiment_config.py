import math
from dataclasses import dataclass, field

from data.lift_shape import LiftShape
from data.solve_report import SolverConfig
from data.subspace_matrix import Distribution

PHASE_AXES = ("r", "s", "n")
SWEEP_ESTIMATORS = ("vhm", "mmv")


@dataclass(frozen=True)
class PhaseTransitionConfig:
    """Grid over two of (r, s, n); the third is held fixed."""
    axes: tuple
    fixed: dict
    trials: int = 20
    threshold: float = 1e-3
    base_seed: int = 0
    distribution: str = "gaussian"
    delta: float = None
    solver: SolverConfig = field(default_factory=SolverConfig)

    def __post_init__(self):
        names = [name for name, _ in self.axes]
        if len(names) != 2 or len(set(names)) != 2 or not set(names) <= set(PHASE_AXES):
            raise ValueError(f"need two distinct axes from {PHASE_AXES}, got {names}")
        (remaining,) = set(PHASE_AXES) - set(names)
        if remaining not in self.fixed:
            raise ValueError(f"fixed value for {remaining!r} is missing")
        for name, values in self.axes:
            if not values or any(int(value) < 1 for value in values):
                raise ValueError(f"axis {name!r} needs positive integer values, got {values}")
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if not self.threshold > 0:
            raise ValueError(f"threshold must be positive, got {self.threshold}")
        Distribution.parse(self.distribution)

    def cells(self):
        """Yield (cell_index, i, j, {r, s, n}) in row-major order."""
        (first, first_values), (second, second_values) = self.axes
        index = 0
        for i, a in enumerate(first_values):
            for j, b in enumerate(second_values):
                params = dict(self.fixed)
                params[first] = int(a)
                params[second] = int(b)
                yield index, i, j, params
                index += 1


def parse_series(label):
    """'vhm:6' -> ('vhm', 6)."""
    name, _, rows = str(label).partition(":")
    if name not in SWEEP_ESTIMATORS or not rows.isdigit():
        raise ValueError(f"series must look like '<{'|'.join(SWEEP_ESTIMATORS)}>:<rows>', got {label!r}")
    return name, int(rows)


@dataclass(frozen=True)
class SnrSweepConfig:
    snr_values: tuple = (0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0)
    series: tuple = ("vhm:1", "vhm:2", "vhm:4", "vhm:6", "mmv:6")
    n: int = 64
    s: int = 6
    r: int = 4
    delta: float = 1 / 64
    orient_law: str = "gaussian"
    amp_law: str = "spread"
    trials: int = 100
    metric: str = "plain"
    grid_step: float = 1e-4
    complex_noise: bool = True
    base_seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if not self.snr_values:
            raise ValueError("need at least one SNR value")
        if any(not (math.isfinite(snr) or snr == math.inf) for snr in self.snr_values):
            raise ValueError(f"SNR values must be finite or +inf, got {self.snr_values}")
        if self.metric not in ("plain", "wraparound"):
            raise ValueError(f"unknown metric {self.metric!r}")
        if self.r >= LiftShape.default(self.n, 1).n2:
            raise ValueError(f"r={self.r} is too large for n={self.n}")
        for label in self.series:
            name, rows = parse_series(label)
            if not 1 <= rows <= self.s:
                raise ValueError(f"series {label!r} uses {rows} rows but s={self.s}")
            if name == "mmv" and rows < self.r:
                raise ValueError(f"series {label!r}: MMV MUSIC needs rows >= r={self.r}")
