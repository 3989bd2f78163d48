import logging

import numpy as np

from data.errors import DegenerateMeasurementError, ShapeMismatchError
from data.lift_shape import LiftedMatrix
from data.solve_report import SolveReport, SolverConfig
from operators.hankel_lift import hankel_weights, vec_hankel, vec_hankel_adjoint
from operators.measurement import apply_A, apply_A_adjoint, row_norms_squared
from solver.svt import nuclear_norm, svt

logger = logging.getLogger(__name__)

_LOG_EVERY = 500


class VhlSolver:
    """ADMM for min ||H(X)||_* subject to A(X) = y.

    The splitting is min ||Z||_* s.t. Z = H(X), A(X) = y with augmented
    Lagrangian ||Z||_* + <Lam, Z - H(X)> + rho/2 ||Z - H(X)||_F^2. Lam is kept
    unscaled; Lam / rho is the scaled dual that enters the X and Z updates.
    """

    def __init__(self, config=None):
        self.config = config if config is not None else SolverConfig()

    @staticmethod
    def _validate(y, B, shape):
        y = np.asarray(y, dtype=complex)
        B = np.asarray(getattr(B, "entries", B), dtype=complex)
        if y.shape != (shape.n,):
            raise ShapeMismatchError(f"measurement vector must have length {shape.n}, got {y.shape}")
        if B.shape != (shape.n, shape.s):
            raise ShapeMismatchError(f"subspace matrix must be {shape.n}x{shape.s}, got {B.shape}")

        norms = row_norms_squared(B)
        degenerate = np.flatnonzero(norms == 0)
        if degenerate.size:
            raise DegenerateMeasurementError(f"b_j has zero norm for j in {degenerate.tolist()}")
        return y, B, norms

    @staticmethod
    def _project(M, y, B, norms):
        # Per column: x_j = m_j + b_j (y_j - b_j^* m_j) / ||b_j||^2
        return M + apply_A_adjoint((y - apply_A(M, B)) / norms, B)

    def solve(self, y, B, shape):
        y, B, norms = self._validate(y, B, shape)

        if shape.s == 1:
            # Each constraint b_j x_j = y_j pins a scalar column: nothing to optimize
            X = self._project(np.zeros((1, shape.n), dtype=complex), y, B, norms)
            return SolveReport(X_hat=X, iters=1, primal_residual=0.0, dual_residual=0.0,
                               nuclear_norm=nuclear_norm(vec_hankel(X, shape)), converged=True,
                               history=[(0.0, 0.0)])

        rho = self.config.rho
        weights = hankel_weights(shape).w.astype(float)

        X = self._project(np.zeros((shape.s, shape.n), dtype=complex), y, B, norms)
        HX = vec_hankel(X, shape).entries
        Z = HX.copy()
        Lam = np.zeros_like(Z)

        history = []
        primal = dual = np.inf
        converged = False
        iteration = 0
        for iteration in range(1, self.config.max_iters + 1):
            X_prev = X

            # Unconstrained minimizer of ||Z + Lam/rho - H(X)||_F is H^*(.) / w column-wise
            target = vec_hankel_adjoint(LiftedMatrix(shape=shape, entries=Z + Lam / rho)) / weights
            X = self._project(target, y, B, norms)
            HX = vec_hankel(X, shape).entries

            Z = svt(HX - Lam / rho, 1 / rho, self.config.svt_rank_cap)
            Lam = Lam + rho * (Z - HX)

            # ||H(dX)||_F = ||D dX||_F
            step = np.sqrt(np.sum(weights * np.sum(np.abs(X - X_prev) ** 2, axis=0)))
            primal = np.linalg.norm(Z - HX) / max(1.0, np.linalg.norm(HX))
            dual = rho * step / max(1.0, np.linalg.norm(Lam))
            history.append((primal, dual))

            if iteration % _LOG_EVERY == 0:
                logger.debug("iteration %d: primal %.3e, dual %.3e", iteration, primal, dual)

            if primal <= self.config.tol_rel and dual <= self.config.tol_rel:
                converged = True
                break

        if not converged:
            logger.warning("no convergence after %d iterations (primal %.3e, dual %.3e)",
                           iteration, primal, dual)

        return SolveReport(X_hat=X, iters=iteration, primal_residual=float(primal), dual_residual=float(dual),
                           nuclear_norm=nuclear_norm(HX), converged=converged, history=history)


def solve_vhl(y, B, shape, config=None):
    return VhlSolver(config).solve(y, B, shape)
