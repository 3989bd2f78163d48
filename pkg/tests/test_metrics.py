import numpy as np
import pytest

from analyse.metrics import hausdorff, match_sources, psf_error, relative_error, wrap_distance
from data.errors import ShapeMismatchError


def test_relative_error_examples():
    X = np.array([[1.0, 2.0j], [3.0, -1.0]])
    assert relative_error(X, X) == 0
    assert relative_error(2 * X, X) == pytest.approx(1)
    assert relative_error(np.zeros_like(X), X) == pytest.approx(1)


def test_relative_error_against_zero_reference():
    zero = np.zeros((2, 3))
    assert relative_error(zero, zero) == 0
    assert relative_error(np.ones((2, 3)), zero) == np.inf


def test_relative_error_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        relative_error(np.zeros((2, 3)), np.zeros((3, 2)))


def test_wrap_distance():
    assert wrap_distance(0.05, 0.95) == pytest.approx(0.1)
    assert wrap_distance(0.2, 0.4) == pytest.approx(0.2)


@pytest.mark.parametrize("metric", ["plain", "wraparound"])
def test_hausdorff_basic(metric):
    assert hausdorff([0.1, 0.5], [0.5, 0.1], metric) == 0
    assert hausdorff([0.1], [0.2], metric) == pytest.approx(0.1)


def test_hausdorff_on_the_circle():
    assert hausdorff([0.05, 0.95], [0.05], "plain") == pytest.approx(0.9)
    assert hausdorff([0.05, 0.95], [0.05], "wraparound") == pytest.approx(0.1)


def test_hausdorff_is_symmetric():
    a, b = [0.1, 0.4, 0.8], [0.12, 0.7]
    assert hausdorff(a, b) == hausdorff(b, a)


def test_hausdorff_rejects_empty_sets_and_unknown_metrics():
    with pytest.raises(ValueError):
        hausdorff([], [0.1])
    with pytest.raises(ValueError):
        hausdorff([0.1], [0.1], "euclid")


def test_match_sources_wraps_around():
    assert list(match_sources([0.02, 0.5, 0.9], [0.99, 0.49, 0.93])) == [0, 1, 2]


def test_psf_error_ignores_a_global_phase():
    g = np.array([1.0, 2.0j, -0.5, 3.0 - 1.0j])
    assert psf_error(g, np.exp(0.7j) * g) == pytest.approx(0, abs=1e-15)
    assert psf_error(g, 1.1 * g) == pytest.approx(0.1)
    assert psf_error(g, np.zeros_like(g)) == pytest.approx(1)
    with pytest.raises(ShapeMismatchError):
        psf_error(g, g[:3])
