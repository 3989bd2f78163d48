import numpy as np
from scipy.linalg import eigvalsh, khatri_rao

from data.vandermonde_factors import IncoherenceReport, VandermondeFactors
from managers.model_maker import steering_matrix

# Gram eigenvalues below this fraction of the dimension count as rank loss
_RANK_TOLERANCE = 1e-12


def build_vandermonde_factors(model, shape):
    E_L = steering_matrix(model.taus, shape.n1)
    E_R = steering_matrix(model.taus, shape.n2)
    return VandermondeFactors(E_L=E_L, E_R=E_R, E_hL=khatri_rao(E_L, model.orients))


def smallest_gram_eigenvalue(E):
    return float(eigvalsh(E.conj().T @ E)[0])


def incoherence_diagnostic(model, shape):
    factors = build_vandermonde_factors(model, shape)
    sigma_left = smallest_gram_eigenvalue(factors.E_L)
    sigma_right = smallest_gram_eigenvalue(factors.E_R)

    if sigma_left <= _RANK_TOLERANCE * shape.n1 or sigma_right <= _RANK_TOLERANCE * shape.n2:
        mu1 = np.inf
    else:
        mu1 = max(shape.n1 / sigma_left, shape.n2 / sigma_right)
    return IncoherenceReport(sigma_min_left=sigma_left, sigma_min_right=sigma_right, mu1=float(mu1))
