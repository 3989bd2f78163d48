from dataclasses import dataclass
from enum import Enum

import numpy as np


class Distribution(str, Enum):
    GAUSSIAN = "gaussian"
    RADEMACHER = "rademacher"
    DFT_ROWS = "dft-rows"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unsupported distribution {value!r}, expected one of {[d.value for d in cls]}") from None


@dataclass(frozen=True)
class SubspaceMatrix:
    # n x s; row j of B is the conjugate of b_j
    entries: np.ndarray
    distribution: Distribution
    seed: int = None

    @property
    def n(self):
        return self.entries.shape[0]

    @property
    def s(self):
        return self.entries.shape[1]
