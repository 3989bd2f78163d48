from data.estimators.estimator import Estimator
from data.estimators.mmv_estimator import MmvEstimator
from data.estimators.single_snapshot_estimator import SingleSnapshotEstimator
from data.estimators.vhm_estimator import VhmEstimator
