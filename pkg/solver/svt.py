r"""Nuclear norm and its proximal operator.

The proximal operator of t ||.||_* soft-thresholds the singular values:
prox(M) = U max(Sigma - t, 0) V^*.
"""
import numpy as np
from scipy.linalg import svd, svdvals

# svd and svdvals can disagree on sigma_1 by a few ulps
_ROUNDING = 4 * np.finfo(float).eps


def svt(M, threshold, rank_cap=None):
    if threshold < 0:
        raise ValueError(f"threshold must be nonnegative, got {threshold}")

    U, sigma, Vh = svd(M, full_matrices=False)
    keep = np.count_nonzero(sigma > threshold * (1 + _ROUNDING))
    if rank_cap is not None:
        keep = min(keep, rank_cap)
    shrunk = sigma[:keep] - threshold
    return (U[:, :keep] * shrunk) @ Vh[:keep]


def nuclear_norm(Z):
    entries = getattr(Z, "entries", Z)
    if entries.size == 0:
        return 0.0
    return float(np.sum(svdvals(entries)))
