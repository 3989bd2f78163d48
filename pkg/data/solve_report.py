from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class SolverConfig:
    rho: float = 1.0
    max_iters: int = 5000
    tol_rel: float = 1e-7
    svt_rank_cap: int = None

    def __post_init__(self):
        if not self.rho > 0:
            raise ValueError(f"rho must be positive, got {self.rho}")
        if not self.tol_rel > 0:
            raise ValueError(f"tol_rel must be positive, got {self.tol_rel}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be at least 1, got {self.max_iters}")
        if self.svt_rank_cap is not None and self.svt_rank_cap < 1:
            raise ValueError(f"svt_rank_cap must be positive, got {self.svt_rank_cap}")


@dataclass
class SolveReport:
    X_hat: np.ndarray
    iters: int
    primal_residual: float
    dual_residual: float
    nuclear_norm: float
    converged: bool
    history: list = field(default_factory=list, repr=False)

    def to_dict(self):
        return {
            "n": int(self.X_hat.shape[1]),
            "s": int(self.X_hat.shape[0]),
            "iters": int(self.iters),
            "primal_residual": float(self.primal_residual),
            "dual_residual": float(self.dual_residual),
            "nuclear_norm": float(self.nuclear_norm),
            "converged": bool(self.converged),
            # column-major: all s entries of column 0, then column 1, ...
            "X_hat": [[float(z.real), float(z.imag)] for z in self.X_hat.flatten(order="F")],
        }
