from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PointSourceModel:
    """Ground truth {d_k, tau_k, h_k} for r point sources."""
    taus: np.ndarray
    amps: np.ndarray
    orients: np.ndarray

    def __post_init__(self):
        taus = np.asarray(self.taus, dtype=float)
        amps = np.asarray(self.amps, dtype=complex)
        orients = np.asarray(self.orients, dtype=complex)
        if orients.ndim != 2 or orients.shape[1] != len(taus) or len(amps) != len(taus):
            raise ValueError(f"inconsistent model sizes: {len(taus)} taus, {len(amps)} amps, orients {orients.shape}")
        if np.any((taus < 0) | (taus >= 1)):
            raise ValueError("all frequencies must lie in [0, 1)")
        if np.any(amps == 0):
            raise ValueError("all amplitudes must be nonzero")
        if len(np.unique(taus)) != len(taus):
            raise ValueError("frequencies must be pairwise distinct")
        norms = np.linalg.norm(orients, axis=0)
        if not np.allclose(norms, 1, rtol=0, atol=1e-12):
            raise ValueError(f"orientations h_k must have unit norm, got norms {norms.tolist()}")
        object.__setattr__(self, "taus", taus)
        object.__setattr__(self, "amps", amps)
        object.__setattr__(self, "orients", orients)

    @property
    def r(self):
        return len(self.taus)

    @property
    def s(self):
        return self.orients.shape[0]

    def coefficients(self):
        """The s x r matrix [d_1 h_1, ..., d_r h_r]."""
        return self.orients * self.amps

    def merge(self, other):
        return PointSourceModel(
            taus=np.concatenate([self.taus, other.taus]),
            amps=np.concatenate([self.amps, other.amps]),
            orients=np.hstack([self.orients, other.orients]),
        )
