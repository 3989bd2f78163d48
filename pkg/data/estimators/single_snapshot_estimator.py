from analyse.music import DEFAULT_GRID_STEP, noise_subspace_single
from data.estimators.vhm_estimator import VhmEstimator


class SingleSnapshotEstimator(VhmEstimator):
    name = "single"

    def __init__(self, r, grid_step=DEFAULT_GRID_STEP, n1=None, row=0):
        super().__init__(r, grid_step, n1)
        self.row = row

    def noise_subspace(self, X):
        if not 0 <= self.row < X.shape[0]:
            raise ValueError(f"row {self.row} out of range for {X.shape[0]} snapshots")
        return noise_subspace_single(X[self.row], self.r, self.shape_for(X))
