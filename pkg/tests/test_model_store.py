import json

import numpy as np
import pytest
from numpy.testing import assert_array_equal

from analyse.metrics import relative_error
from data.errors import FormatError
from data.solve_report import SolveReport
from data.spectrum import PseudospectrumCurve, RecoveredSources
from managers.model_maker import sample_instance
from managers.model_store import ModelStore
from tests.conftest import random_complex


def test_model_round_trip_is_bit_exact(tmp_path):
    for distribution in ("gaussian", "rademacher", "dft-rows"):
        model, subspace = sample_instance(24, 3, 4, 9, distribution=distribution)
        path = tmp_path / f"{distribution}.json"
        ModelStore.save_model(path, model, subspace, 24)

        loaded, loaded_subspace, n = ModelStore.load_model(path)
        assert n == 24
        assert_array_equal(loaded.taus, model.taus)
        assert_array_equal(loaded.amps, model.amps)
        assert_array_equal(loaded.orients, model.orients)
        assert_array_equal(loaded_subspace.entries, subspace.entries)
        assert loaded_subspace.distribution == subspace.distribution
        assert loaded_subspace.seed == 9


def test_model_document_fields(tmp_path):
    model, subspace = sample_instance(8, 2, 1, 0)
    document = ModelStore.model_to_dict(model, subspace, 8)
    assert set(document) == {"n", "s", "r", "taus", "amps", "orients", "B", "distribution", "seed"}
    assert len(document["B"]) == 16
    # column-major: B[0, 0], B[1, 0], ...
    assert document["B"][1] == [subspace.entries[1, 0].real, subspace.entries[1, 0].imag]


def test_malformed_model_document(tmp_path):
    path = tmp_path / "model.json"
    path.write_text(json.dumps({"n": 4, "s": 1}))
    with pytest.raises(FormatError):
        ModelStore.load_model(path)

    path.write_text("{\"n\": 4,")
    with pytest.raises(FormatError):
        ModelStore.load_model(path)


def test_non_unit_orientations_are_rejected(tmp_path):
    model, subspace = sample_instance(8, 2, 1, 0)
    document = ModelStore.model_to_dict(model, subspace, 8)
    document["orients"] = [[3.0, 0.0], [4.0, 0.0]]
    path = tmp_path / "model.json"
    ModelStore.write_json(path, document)
    with pytest.raises(FormatError):
        ModelStore.load_model(path)


def test_matrix_csv_round_trip(tmp_path, rng):
    X = random_complex(rng, 3, 10)
    path = tmp_path / "X.csv"
    ModelStore.write_matrix(path, X, "x")
    assert path.read_text().splitlines()[0] == "re_x0,im_x0,re_x1,im_x1,re_x2,im_x2"
    assert_array_equal(ModelStore.read_matrix(path), X)


def test_vector_csv_round_trip(tmp_path, rng):
    y = random_complex(rng, 7)
    path = tmp_path / "y.csv"
    ModelStore.write_matrix(path, y, "y")
    assert path.read_text().splitlines()[0] == "re_y,im_y"
    assert_array_equal(ModelStore.read_vector(path), y)


def test_truncated_csv_is_a_format_error(tmp_path, rng):
    path = tmp_path / "y.csv"
    ModelStore.write_matrix(path, random_complex(rng, 6), "y")
    text = path.read_text()
    path.write_text(text[:text.rindex(",")] + "\n")
    with pytest.raises(FormatError):
        ModelStore.read_vector(path)


def test_csv_needs_paired_columns(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("re_x0,im_x1\n1,2\n")
    with pytest.raises(FormatError):
        ModelStore.read_matrix(path)

    path.write_text("")
    with pytest.raises(FormatError):
        ModelStore.read_matrix(path)


def test_pseudospectrum_and_sources_files(tmp_path):
    curve = PseudospectrumCurve(grid=np.array([0.0, 0.5]), values=np.array([1.0, 2.0]))
    ModelStore.write_pseudospectrum(tmp_path / "f.csv", curve)
    assert (tmp_path / "f.csv").read_text().splitlines()[0] == "tau,f"

    sources = RecoveredSources(taus_hat=np.array([0.25]), amps_hat=np.array([2.0]),
                               orients_hat=np.array([[1j], [0]]), residual=0.0)
    ModelStore.write_sources(tmp_path / "sources.json", sources)
    document = ModelStore.read_json(tmp_path / "sources.json")
    assert document["taus_hat"] == [0.25]
    assert document["orients_hat"] == [[[0.0, 1.0], [0.0, 0.0]]]
    assert document["ill_conditioned"] is False


def test_infinite_relative_error_is_written_as_a_string(tmp_path):
    report = SolveReport(X_hat=np.ones((1, 3), dtype=complex), iters=1, primal_residual=0.0,
                         dual_residual=0.0, nuclear_norm=1.0, converged=True)
    path = tmp_path / "report.json"
    ModelStore.write_report(path, report, relative_error(report.X_hat, np.zeros((1, 3))))
    assert "Infinity" not in path.read_text()
    assert ModelStore.read_json(path)["relative_error"] == "inf"

    ModelStore.write_report(path, report, 0.25)
    assert ModelStore.read_json(path)["relative_error"] == 0.25
