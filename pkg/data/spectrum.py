from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class NoiseSubspace:
    U_perp: np.ndarray
    r: int

    @property
    def steering_length(self):
        return self.U_perp.shape[0]


@dataclass(frozen=True)
class PseudospectrumCurve:
    grid: np.ndarray
    values: np.ndarray


@dataclass(frozen=True)
class PickedPeaks:
    taus: np.ndarray
    # True when fewer than r strict local maxima existed and non-maxima filled the gap
    padded: bool = False


@dataclass(frozen=True)
class RecoveredSources:
    taus_hat: np.ndarray
    amps_hat: np.ndarray
    orients_hat: np.ndarray
    residual: float
    ill_conditioned: bool = False

    def coefficients(self):
        return self.orients_hat * self.amps_hat

    def to_dict(self):
        return {
            "taus_hat": [float(tau) for tau in self.taus_hat],
            "amps_hat": [float(amp) for amp in self.amps_hat],
            "orients_hat": [[[float(z.real), float(z.imag)] for z in column] for column in self.orients_hat.T],
            "residual": float(self.residual),
            "ill_conditioned": bool(self.ill_conditioned),
        }
