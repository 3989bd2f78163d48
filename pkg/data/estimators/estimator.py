from abc import ABC, abstractmethod

import numpy as np

from analyse.music import DEFAULT_GRID_STEP, frequency_grid, pick_peaks, pseudospectrum


class Estimator(ABC):
    """MUSIC-type frequency estimator with an oracle model order r."""

    name = None
    _registry = {}

    def __init__(self, r, grid_step=DEFAULT_GRID_STEP):
        self.r = r
        self.grid_step = grid_step

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls.name is not None:
            Estimator._registry[cls.name] = cls

    @classmethod
    def create(cls, name, r, **kwargs):
        try:
            estimator_cls = cls._registry[name]
        except KeyError:
            raise ValueError(f"unknown estimator {name!r}, expected one of {sorted(cls._registry)}") from None
        return estimator_cls(r, **kwargs)

    @abstractmethod
    def noise_subspace(self, X):
        pass

    def pseudospectrum(self, X):
        return pseudospectrum(self.noise_subspace(np.asarray(X)), frequency_grid(self.grid_step))

    def estimate(self, X):
        return pick_peaks(self.pseudospectrum(X), self.r)
