from analyse.music import DEFAULT_GRID_STEP, noise_subspace_vhm
from data.estimators.estimator import Estimator
from data.lift_shape import LiftShape


class VhmEstimator(Estimator):
    name = "vhm"

    def __init__(self, r, grid_step=DEFAULT_GRID_STEP, n1=None):
        super().__init__(r, grid_step)
        self.n1 = n1

    def shape_for(self, X):
        s, n = X.shape
        return LiftShape.default(n, s, self.n1)

    def noise_subspace(self, X):
        return noise_subspace_vhm(X, self.r, self.shape_for(X))
