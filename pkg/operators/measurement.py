import numpy as np

from data.errors import ShapeMismatchError


# b_j is column j of B^*, i.e. the conjugate of row j of B, so b_j^* x_j = B[j, :] @ x_j


def _check(B, n):
    if B.ndim != 2 or B.shape[0] != n:
        raise ShapeMismatchError(f"subspace matrix must have {n} rows, got {B.shape}")


def apply_A(X, B):
    X = np.asarray(X)
    B = np.asarray(B)
    _check(B, X.shape[1])
    if B.shape[1] != X.shape[0]:
        raise ShapeMismatchError(f"subspace dimension {B.shape[1]} does not match data rows {X.shape[0]}")
    return np.einsum("jl,lj->j", B, X)


def apply_A_adjoint(y, B):
    y = np.asarray(y)
    B = np.asarray(B)
    _check(B, len(y))
    return (np.conj(B) * y[:, None]).T


def row_norms_squared(B):
    return np.sum(np.abs(B) ** 2, axis=1)
