import numpy as np

from data.errors import ShapeMismatchError
from operators.hankel_lift import vec_hankel


def split_chunks(X, n):
    X = np.asarray(X)
    if X.ndim != 2 or X.shape[1] != n * n:
        raise ShapeMismatchError(f"two-fold lift needs n^2 = {n * n} columns, got {X.shape}")
    return [X[:, ell * n:(ell + 1) * n] for ell in range(n)]


def two_fold_lift(X, shape):
    """Block-Hankel arrangement of the vectorized Hankel matrices of the chunks of X.

    X is s x n^2 and is cut into n chunks X_0 .. X_{n-1} of n columns each.
    Block (a, b) of the result is H(X_{a+b}), with the same n1 x n2 split
    used on both axes, so the result is (s n1 n1) x (n2 n2).
    """
    chunks = [vec_hankel(chunk, shape).entries for chunk in split_chunks(X, shape.n)]
    return np.block([[chunks[a + b] for b in range(shape.n2)] for a in range(shape.n1)])
