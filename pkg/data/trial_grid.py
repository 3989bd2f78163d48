from dataclasses import dataclass

import numpy as np
import pandas as pd


@dataclass
class TrialGrid:
    """Per-trial relative errors of a phase-transition experiment.

    errors[i, j, t] belongs to trial t of the cell (axes[0] = values0[i],
    axes[1] = values1[j]); a trial succeeds when its error is below the
    threshold.
    """
    axes: tuple
    fixed: dict
    trials_per_cell: int
    errors: np.ndarray
    threshold: float
    base_seed: int

    def success_counts(self, threshold=None):
        threshold = self.threshold if threshold is None else threshold
        return np.sum(self.errors < threshold, axis=-1)

    @property
    def counts(self):
        return self.success_counts()

    def to_frame(self):
        (first, first_values), (second, second_values) = self.axes
        counts = self.counts
        rows = [
            {first: a, second: b, "count": int(counts[i, j])}
            for i, a in enumerate(first_values)
            for j, b in enumerate(second_values)
        ]
        return pd.DataFrame(rows, columns=[first, second, "count"])


@dataclass
class SweepResult:
    snr_values: list
    series: list
    # errors[k, i, t]: series k, SNR i, trial t
    errors: np.ndarray
    failures: np.ndarray
    trials: int
    metric: str
    base_seed: int

    @property
    def mean_errors(self):
        return self.errors.mean(axis=-1)

    def to_frame(self):
        means = self.mean_errors
        rows = [
            {"snr": snr, "estimator": label, "mean_error": float(means[k, i])}
            for i, snr in enumerate(self.snr_values)
            for k, label in enumerate(self.series)
        ]
        return pd.DataFrame(rows, columns=["snr", "estimator", "mean_error"])
