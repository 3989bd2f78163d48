from analyse.music import noise_subspace_mmv
from data.estimators.estimator import Estimator


class MmvEstimator(Estimator):
    name = "mmv"

    def noise_subspace(self, X):
        return noise_subspace_mmv(X, self.r)
