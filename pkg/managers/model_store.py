import json

import numpy as np
import pandas as pd

from data.errors import FormatError
from data.point_source_model import PointSourceModel
from data.subspace_matrix import Distribution, SubspaceMatrix


def _pairs(values):
    return [[float(z.real), float(z.imag)] for z in np.asarray(values, dtype=complex).ravel(order="F")]


def _complex(pairs, shape=None):
    array = np.asarray(pairs, dtype=float)
    if array.ndim != 2 or array.shape[1] != 2:
        raise FormatError("complex values must be stored as [re, im] pairs")
    values = array[:, 0] + 1j * array[:, 1]
    return values if shape is None else values.reshape(shape, order="F")


class ModelStore:
    """Reads and writes models, matrices, reports and curves."""

    @staticmethod
    def model_to_dict(model, subspace, n):
        return {
            "n": int(n),
            "s": int(model.s),
            "r": int(model.r),
            "taus": [float(tau) for tau in model.taus],
            "amps": _pairs(model.amps),
            # column-major: h_1 first, then h_2, ...
            "orients": _pairs(model.orients),
            "B": _pairs(subspace.entries),
            "distribution": subspace.distribution.value,
            "seed": subspace.seed,
        }

    @staticmethod
    def model_from_dict(document):
        try:
            n, s, r = int(document["n"]), int(document["s"]), int(document["r"])
            model = PointSourceModel(
                taus=np.asarray(document["taus"], dtype=float),
                amps=_complex(document["amps"]),
                orients=_complex(document["orients"], (s, r)),
            )
            subspace = SubspaceMatrix(
                entries=_complex(document["B"], (n, s)),
                distribution=Distribution.parse(document["distribution"]),
                seed=document.get("seed"),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError(f"malformed model document: {e}") from e
        return model, subspace, n

    @classmethod
    def save_model(cls, path, model, subspace, n):
        cls.write_json(path, cls.model_to_dict(model, subspace, n))

    @classmethod
    def load_model(cls, path):
        return cls.model_from_dict(cls.read_json(path))

    @staticmethod
    def write_json(path, document):
        with open(path, "w") as f:
            json.dump(document, f, indent=2, allow_nan=False)
            f.write("\n")

    @staticmethod
    def read_json(path):
        with open(path, "r") as f:
            try:
                return json.load(f)
            except json.JSONDecodeError as e:
                raise FormatError(f"{path}: {e}") from e

    @staticmethod
    def write_csv(path, frame):
        frame.to_csv(path, index=False)

    @staticmethod
    def read_csv(path):
        try:
            return pd.read_csv(path, float_precision="round_trip")
        except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
            raise FormatError(f"{path}: {e}") from e

    @staticmethod
    def matrix_frame(X, name):
        """One CSV row per sample index j; row l of X becomes columns re_<name><l>, im_<name><l>."""
        X = np.atleast_2d(X)
        columns = {}
        for ell, row in enumerate(X):
            label = name if X.shape[0] == 1 else f"{name}{ell}"
            columns[f"re_{label}"] = row.real
            columns[f"im_{label}"] = row.imag
        return pd.DataFrame(columns)

    @classmethod
    def write_matrix(cls, path, X, name):
        cls.write_csv(path, cls.matrix_frame(X, name))

    @classmethod
    def read_matrix(cls, path):
        frame = cls.read_csv(path)
        columns = list(frame.columns)
        if not columns or len(columns) % 2:
            raise FormatError(f"{path}: expected re_/im_ column pairs, got {columns}")

        rows = []
        for re_name, im_name in zip(columns[0::2], columns[1::2]):
            if not (re_name.startswith("re_") and im_name == "im_" + re_name[3:]):
                raise FormatError(f"{path}: columns {re_name!r}, {im_name!r} are not a re_/im_ pair")
            try:
                re = frame[re_name].to_numpy(dtype=float)
                im = frame[im_name].to_numpy(dtype=float)
            except ValueError as e:
                raise FormatError(f"{path}: non-numeric entries in {re_name!r}/{im_name!r}") from e
            rows.append(re + 1j * im)

        X = np.vstack(rows)
        if X.size == 0 or not np.all(np.isfinite(X)):
            raise FormatError(f"{path}: missing or non-finite entries (truncated file?)")
        return X

    @classmethod
    def read_vector(cls, path):
        X = cls.read_matrix(path)
        if X.shape[0] != 1:
            raise FormatError(f"{path}: expected a single complex column pair, got {X.shape[0]}")
        return X[0]

    @classmethod
    def write_report(cls, path, report, relative_error=None):
        document = report.to_dict()
        if relative_error is not None:
            # zero truth with a nonzero estimate
            document["relative_error"] = float(relative_error) if np.isfinite(relative_error) else "inf"
        cls.write_json(path, document)

    @classmethod
    def write_sources(cls, path, sources, psfs=None, psfs_true=None, psf_errors=None):
        document = sources.to_dict()
        if psfs is not None:
            document["psfs_hat"] = [_pairs(column) for column in np.asarray(psfs).T]
        if psfs_true is not None:
            document["psfs_true"] = [_pairs(column) for column in np.asarray(psfs_true).T]
            document["psf_errors"] = [float(error) for error in psf_errors]
        cls.write_json(path, document)

    @classmethod
    def write_pseudospectrum(cls, path, curve):
        cls.write_csv(path, pd.DataFrame({"tau": curve.grid, "f": curve.values}))
