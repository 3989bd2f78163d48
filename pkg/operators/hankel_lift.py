r"""Vectorized Hankel lift and the operators built on it.

The lift maps an s x n matrix X with columns x_0, ..., x_{n-1} to the
(s n1) x n2 matrix whose (j, k) block is the s-vector x_{j+k}. Its adjoint
sums the blocks along each anti-diagonal, so H* H is the diagonal weight
operator D^2 with D = diag(sqrt(w_0), ..., sqrt(w_{n-1})). The normalized
lift G = H D^{-1} is an isometry.
"""
import numpy as np

from data.errors import ShapeMismatchError
from data.lift_shape import LiftedMatrix, WeightVector

_D_POWERS = (1, -1, 2, -2)


def hankel_weights(shape):
    i = np.arange(shape.n)
    w = np.minimum.reduce([i + 1, np.full(shape.n, shape.n1), np.full(shape.n, shape.n2), shape.n - i])
    return WeightVector(w=w.astype(np.int64))


def anti_diagonal_index(shape):
    return np.add.outer(np.arange(shape.n1), np.arange(shape.n2))


def vec_hankel(X, shape):
    X = np.asarray(X)
    shape.check_data(X)
    # (s, n1, n2) -> (n1, s, n2) so that rows j*s .. (j+1)*s hold block row j
    cells = X[:, anti_diagonal_index(shape)]
    entries = cells.transpose(1, 0, 2).reshape(shape.lifted_rows, shape.n2)
    return LiftedMatrix(shape=shape, entries=entries)


def vec_hankel_adjoint(Z):
    shape = Z.shape
    blocks = Z.blocks()
    out = np.zeros((shape.s, shape.n), dtype=np.result_type(Z.entries.dtype, np.complex128))
    for j in range(shape.n1):
        out[:, j:j + shape.n2] += blocks[j]
    return out


def apply_D(X, w, power):
    if power not in _D_POWERS:
        raise ValueError(f"power must be one of {_D_POWERS}, got {power}")
    X = np.asarray(X)
    if X.shape[-1] != len(w):
        raise ShapeMismatchError(f"weight vector has length {len(w)} but X has {X.shape[-1]} columns")
    return X * (w.w.astype(float) ** (power / 2))


def apply_G(X, shape):
    return vec_hankel(apply_D(X, hankel_weights(shape), -1), shape)


def apply_G_adjoint(Z, shape):
    shape.check_lifted(Z.entries)
    return apply_D(vec_hankel_adjoint(Z), hankel_weights(shape), -1)


def hankel_basis(i, shape):
    if not 0 <= i < shape.n:
        raise ValueError(f"basis index must lie in [0, {shape.n - 1}], got {i}")
    w = hankel_weights(shape).w[i]
    return (anti_diagonal_index(shape) == i) / np.sqrt(w)