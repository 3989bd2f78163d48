from dataclasses import dataclass

import numpy as np

from data.errors import ShapeMismatchError


@dataclass(frozen=True)
class LiftShape:
    """Dimensions of a vectorized Hankel lift.

    n samples of s-vectors are arranged in n1 block rows and n2 columns,
    with n1 + n2 = n + 1.
    """
    n: int
    s: int
    n1: int
    n2: int

    def __post_init__(self):
        if self.n < 1 or self.s < 1:
            raise ValueError(f"n and s must be positive, got n={self.n}, s={self.s}")
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError(f"n1 and n2 must be positive, got n1={self.n1}, n2={self.n2}")
        if self.n1 + self.n2 != self.n + 1:
            raise ValueError(f"n1 + n2 must equal n + 1, got {self.n1} + {self.n2} != {self.n + 1}")

    @classmethod
    def default(cls, n, s, n1=None):
        # Near-square split; for odd n this is n1 = n2 = (n + 1) / 2
        if n1 is None:
            n1 = (n + 1) // 2
        return cls(n=n, s=s, n1=n1, n2=n + 1 - n1)

    @property
    def lifted_rows(self):
        return self.s * self.n1

    def check_data(self, X):
        if X.ndim != 2 or X.shape != (self.s, self.n):
            raise ShapeMismatchError(f"data matrix must be {self.s}x{self.n}, got {X.shape}")

    def check_lifted(self, Z):
        if Z.ndim != 2 or Z.shape != (self.lifted_rows, self.n2):
            raise ShapeMismatchError(f"lifted matrix must be {self.lifted_rows}x{self.n2}, got {Z.shape}")


@dataclass(frozen=True)
class WeightVector:
    # w[i] counts the cells (j, k) of the n1 x n2 grid with j + k = i
    w: np.ndarray

    def __len__(self):
        return len(self.w)


@dataclass(frozen=True)
class LiftedMatrix:
    shape: LiftShape
    entries: np.ndarray

    def __post_init__(self):
        self.shape.check_lifted(self.entries)

    def block(self, j, k):
        s = self.shape.s
        return self.entries[j * s:(j + 1) * s, k]

    def blocks(self):
        """Return the entries as an (n1, s, n2) array of s-vectors."""
        return self.entries.reshape(self.shape.n1, self.shape.s, self.shape.n2)
