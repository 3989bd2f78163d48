from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class VandermondeFactors:
    E_L: np.ndarray
    E_R: np.ndarray
    E_hL: np.ndarray

    def reconstruct(self, amps):
        return (self.E_hL * amps) @ self.E_R.T


@dataclass(frozen=True)
class IncoherenceReport:
    sigma_min_left: float
    sigma_min_right: float
    mu1: float

    def to_dict(self):
        return {
            "sigma_min_left": self.sigma_min_left,
            "sigma_min_right": self.sigma_min_right,
            "mu1": self.mu1,
        }
