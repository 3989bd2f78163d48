import logging

import numpy as np
from scipy.linalg import lstsq, svd

from data.errors import EstimatorError, ShapeMismatchError
from data.lift_shape import LiftShape
from data.spectrum import NoiseSubspace, PickedPeaks, PseudospectrumCurve, RecoveredSources
from managers.model_maker import steering_matrix
from operators.hankel_lift import anti_diagonal_index, vec_hankel

logger = logging.getLogger(__name__)

DEFAULT_GRID_STEP = 1e-4
ILL_CONDITIONED = 1e12

_CHUNK = 2048


def frequency_grid(step=DEFAULT_GRID_STEP):
    return np.arange(int(round(1 / step))) * step


def _left_complement(M, r):
    # Left singular vectors beyond the r dominant ones
    U, _, _ = svd(M, full_matrices=True)
    return U[:, r:]


def noise_subspace_vhm(X, r, shape):
    X = np.asarray(X)
    shape.check_data(X)
    if not 0 <= r < shape.n2:
        raise EstimatorError(f"model order must satisfy 0 <= r < n2 = {shape.n2}, got {r}")
    if not np.any(X):
        raise EstimatorError("cannot estimate frequencies from a zero data matrix")
    return NoiseSubspace(U_perp=_left_complement(vec_hankel(X, shape).entries.T, r), r=r)


def noise_subspace_single(x_row, r, shape):
    x_row = np.asarray(x_row).reshape(1, -1)
    return noise_subspace_vhm(x_row, r, LiftShape(n=shape.n, s=1, n1=shape.n1, n2=shape.n2))


def noise_subspace_mmv(X, r):
    X = np.asarray(X)
    s = X.shape[0]
    if r > s:
        raise EstimatorError(f"MMV MUSIC needs at least as many snapshots as sources, got r={r} > s={s}")
    if r < 0:
        raise EstimatorError(f"model order must be nonnegative, got {r}")
    if not np.any(X):
        raise EstimatorError("cannot estimate frequencies from a zero data matrix")
    return NoiseSubspace(U_perp=_left_complement(X.T, r), r=r)


def pseudospectrum(noise, grid):
    grid = np.asarray(grid, dtype=float)
    if np.any((grid < 0) | (grid >= 1)):
        raise ValueError("grid frequencies must lie in [0, 1)")

    m = noise.steering_length
    U_h = noise.U_perp.conj().T
    denominators = np.empty(len(grid))
    # Chunked over the grid; each chunk is independent of the others
    for start in range(0, len(grid), _CHUNK):
        projections = U_h @ steering_matrix(grid[start:start + _CHUNK], m)
        denominators[start:start + _CHUNK] = np.sum(np.abs(projections) ** 2, axis=0)

    values = 1 / np.maximum(denominators, np.finfo(float).tiny)
    return PseudospectrumCurve(grid=grid, values=values)


def pick_peaks(curve, r):
    """Return the r largest strict local maxima on the circular grid.

    Ties in height go to the smaller frequency. If fewer than r maxima
    exist, the largest remaining grid values fill the gap.
    """
    values = curve.values
    if r < 1:
        raise ValueError(f"need at least one peak, got r={r}")
    if r > len(values):
        raise ValueError(f"cannot pick {r} peaks on a grid of {len(values)} points")

    order = np.lexsort((curve.grid, -values))
    maxima = (values > np.roll(values, 1)) & (values > np.roll(values, -1))
    picked = [i for i in order if maxima[i]][:r]

    padded = len(picked) < r
    if padded:
        logger.warning("only %d local maxima for %d sources; padding with non-maxima", len(picked), r)
        picked += [i for i in order if not maxima[i]][:r - len(picked)]

    return PickedPeaks(taus=curve.grid[np.array(picked)], padded=padded)


def recover_amplitudes(X, taus_hat, n):
    """Least-squares fit X ~ W A^T over the steering matrix A of taus_hat.

    Returns d_k = ||w_k|| and h_k = w_k / d_k, so amplitudes are real and
    nonnegative and every phase lives in the orientation.
    """
    X = np.asarray(X)
    taus_hat = np.asarray(taus_hat, dtype=float)
    if X.shape[1] != n:
        raise ShapeMismatchError(f"data matrix has {X.shape[1]} columns, expected {n}")
    if len(np.unique(taus_hat)) != len(taus_hat):
        raise ValueError("estimated frequencies must be distinct")
    if len(taus_hat) > n:
        raise ValueError(f"cannot fit {len(taus_hat)} sources from {n} samples")

    A = steering_matrix(taus_hat, n)
    condition = np.linalg.cond(A)
    ill_conditioned = bool(condition > ILL_CONDITIONED)
    if ill_conditioned:
        logger.warning("steering matrix is ill-conditioned (cond=%.2e)", condition)

    W = lstsq(A, X.T)[0].T
    amps = np.linalg.norm(W, axis=0)
    orients = np.zeros_like(W)
    nonzero = amps > 0
    orients[:, nonzero] = W[:, nonzero] / amps[nonzero]
    orients[0, ~nonzero] = 1

    residual = float(np.linalg.norm(X - W @ A.T))
    return RecoveredSources(taus_hat=taus_hat, amps_hat=amps, orients_hat=orients,
                            residual=residual, ill_conditioned=ill_conditioned)


def stacked_hankel(X, shape):
    """Stack the classical Hankel matrices H(x_1), ..., H(x_s) of the rows of X."""
    X = np.asarray(X)
    shape.check_data(X)
    return X[:, anti_diagonal_index(shape)].reshape(shape.lifted_rows, shape.n2)


def estimate_psfs(subspace, sources):
    """Recovered point spread functions g_hat_k = B h_hat_k, one column per source.

    Each column matches the true g_k up to a unit-modulus factor, since the
    phase of d_k is carried by h_hat_k.
    """
    B = np.asarray(getattr(subspace, "entries", subspace))
    s = sources.orients_hat.shape[0]
    if B.shape[1] != s:
        raise ShapeMismatchError(f"subspace has {B.shape[1]} columns but the sources have {s} orientation entries")
    return B @ sources.orients_hat
