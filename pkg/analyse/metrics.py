import numpy as np

from data.errors import ShapeMismatchError

METRICS = ("plain", "wraparound")


def wrap_distance(a, b):
    d = np.abs(np.asarray(a) - np.asarray(b))
    return np.minimum(d, 1 - d)


def relative_error(X_hat, X_ref):
    X_hat = np.asarray(X_hat)
    X_ref = np.asarray(X_ref)
    if X_hat.shape != X_ref.shape:
        raise ShapeMismatchError(f"cannot compare {X_hat.shape} with {X_ref.shape}")

    reference = np.linalg.norm(X_ref)
    difference = np.linalg.norm(X_hat - X_ref)
    if reference == 0:
        return 0.0 if difference == 0 else np.inf
    return float(difference / reference)


def hausdorff(taus, taus_hat, metric="plain"):
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")
    taus = np.atleast_1d(np.asarray(taus, dtype=float))
    taus_hat = np.atleast_1d(np.asarray(taus_hat, dtype=float))
    if taus.size == 0 or taus_hat.size == 0:
        raise ValueError("Hausdorff distance needs two nonempty sets")

    distances = np.abs(np.subtract.outer(taus, taus_hat))
    if metric == "wraparound":
        distances = np.minimum(distances, 1 - distances)
    return float(max(distances.min(axis=1).max(), distances.min(axis=0).max()))


def match_sources(taus, taus_hat):
    """Index of the nearest true frequency (wraparound) for every estimate."""
    taus = np.atleast_1d(np.asarray(taus, dtype=float))
    taus_hat = np.atleast_1d(np.asarray(taus_hat, dtype=float))
    return np.argmin(wrap_distance(taus_hat[:, None], taus[None, :]), axis=1)


def psf_error(g, g_hat):
    """min over phi of ||g - e^{i phi} g_hat|| / ||g||."""
    g = np.asarray(g)
    g_hat = np.asarray(g_hat)
    if g.shape != g_hat.shape:
        raise ShapeMismatchError(f"cannot compare {g_hat.shape} with {g.shape}")
    alignment = np.vdot(g_hat, g)
    phase = alignment / abs(alignment) if alignment != 0 else 1.0
    return relative_error(phase * g_hat, g)
