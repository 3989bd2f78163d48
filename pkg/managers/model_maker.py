import logging
from dataclasses import replace

import numpy as np

from analyse.metrics import wrap_distance
from data.errors import InfeasibleSeparationError
from data.point_source_model import PointSourceModel
from data.subspace_matrix import Distribution, SubspaceMatrix

logger = logging.getLogger(__name__)

DISTINCT_TOLERANCE = 1e-9

AMPLITUDE_LAWS = ("spread", "unit")
ORIENTATION_LAWS = ("gaussian", "bernoulli")

_MAX_DRAWS_PER_SOURCE = 1000
_MAX_RESTARTS = 100


def steering_matrix(taus, m):
    return np.exp(-2j * np.pi * np.outer(np.arange(m), np.atleast_1d(taus)))


def steering_vector(tau, m):
    if not 0 <= tau < 1:
        raise ValueError(f"frequency must lie in [0, 1), got {tau}")
    return steering_matrix(tau, m)[:, 0]


def _seed_value(seed):
    return seed if isinstance(seed, (int, np.integer)) else None


def _sample_taus(rng, r, min_gap):
    if r * min_gap > 1:
        raise InfeasibleSeparationError(f"cannot place {r} frequencies with separation {min_gap} on the unit circle")

    for _ in range(_MAX_RESTARTS):
        taus = []
        for _ in range(r):
            for _ in range(_MAX_DRAWS_PER_SOURCE):
                candidate = rng.uniform()
                if all(wrap_distance(candidate, tau) >= min_gap for tau in taus):
                    taus.append(candidate)
                    break
            else:
                break

        if len(taus) == r:
            return np.array(taus)

    raise InfeasibleSeparationError(f"rejection sampling could not place {r} frequencies with separation {min_gap}")


def sample_model(r, s, seed=None, amp_law="spread", delta=None, orient_law="gaussian"):
    """Draw a random point-source model.

    Frequencies are uniform on [0, 1) and rejected until their wraparound
    gaps exceed max(delta, 1e-9). Amplitudes follow d = (1 + 10^c) e^{-i psi}
    with c ~ U[0, 1], psi ~ U[0, 2 pi) ("spread") or d = e^{-i psi} ("unit").
    Orientations are Gaussian or symmetric Bernoulli vectors, normalized.
    """
    if r < 1 or s < 1:
        raise ValueError(f"r and s must be positive, got r={r}, s={s}")
    if amp_law not in AMPLITUDE_LAWS:
        raise ValueError(f"unknown amplitude law {amp_law!r}")
    if orient_law not in ORIENTATION_LAWS:
        raise ValueError(f"unknown orientation law {orient_law!r}")

    rng = np.random.default_rng(seed)
    taus = _sample_taus(rng, r, max(delta or 0.0, DISTINCT_TOLERANCE))

    psi = rng.uniform(0, 2 * np.pi, size=r)
    if amp_law == "spread":
        amps = (1 + 10 ** rng.uniform(0, 1, size=r)) * np.exp(-1j * psi)
    else:
        amps = np.exp(-1j * psi)

    if orient_law == "gaussian":
        orients = rng.standard_normal((s, r))
    else:
        orients = rng.choice([-1.0, 1.0], size=(s, r))
    orients = orients / np.linalg.norm(orients, axis=0)

    return PointSourceModel(taus=taus, amps=amps, orients=orients.astype(complex))


def sample_subspace(dist, n, s, seed=None, complex_gaussian=False):
    dist = Distribution.parse(dist)
    if not n >= s >= 1:
        raise ValueError(f"need n >= s >= 1, got n={n}, s={s}")

    rng = np.random.default_rng(seed)
    if dist is Distribution.GAUSSIAN:
        if complex_gaussian:
            entries = (rng.standard_normal((n, s)) + 1j * rng.standard_normal((n, s))) / np.sqrt(2)
        else:
            entries = rng.standard_normal((n, s)).astype(complex)
    elif dist is Distribution.RADEMACHER:
        entries = rng.choice([-1.0, 1.0], size=(n, s)).astype(complex)
    else:
        # Rows of the unitary DFT matrix rescaled by sqrt(n): unit modulus, E[b b^*] = I_s
        rows = rng.integers(0, n, size=n)
        entries = np.exp(-2j * np.pi * np.outer(rows, np.arange(s)) / n)

    return SubspaceMatrix(entries=entries, distribution=dist, seed=_seed_value(seed))


def synthesize_data_matrix(model, n):
    return model.coefficients() @ steering_matrix(model.taus, n).T


def synthesize_data_matrix_2d(taus1, taus2, amps, orients, n):
    """Target of the 2D problem: chunk l is sum_k d_k e^{-2 pi i tau2_k l} h_k a_{tau1_k}^T."""
    coefficients = np.asarray(orients) * np.asarray(amps)
    first = steering_matrix(taus1, n)
    second = steering_matrix(taus2, n)
    chunks = [(coefficients * second[ell]) @ first.T for ell in range(n)]
    return np.hstack(chunks)


def noise_level(X, snr_db):
    s, n = X.shape
    return np.linalg.norm(X) / (np.sqrt(s * n) * 10 ** (snr_db / 20))


def add_noise(X, snr_db, seed=None, complex_noise=True):
    X = np.asarray(X)
    if np.isposinf(snr_db):
        return X.copy()
    if not np.isfinite(snr_db):
        raise ValueError(f"SNR must be finite or +inf, got {snr_db}")

    rng = np.random.default_rng(seed)
    sigma = noise_level(X, snr_db)
    if complex_noise:
        E = sigma * (rng.standard_normal(X.shape) + 1j * rng.standard_normal(X.shape)) / np.sqrt(2)
    else:
        E = sigma * rng.standard_normal(X.shape)

    logger.debug("added noise at %.1f dB (sigma=%.3e)", snr_db, sigma)
    return X + E


def sample_instance(n, s, r, seed=None, distribution="gaussian", delta=None, amp_law="spread", orient_law="gaussian"):
    """Draw a model and a subspace matrix from one generator, model first."""
    rng = np.random.default_rng(seed)
    model = sample_model(r, s, rng, amp_law=amp_law, delta=delta, orient_law=orient_law)
    subspace = sample_subspace(distribution, n, s, rng)
    return model, replace(subspace, seed=_seed_value(seed))
