import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import Pipeline

from schurweyl.estimator import SchurWeylTransform, validate_state_array


def test_get_set_params_and_clone():
    sw = SchurWeylTransform(n=3, num_nodes=2, size_cap=100)
    params = sw.get_params()
    assert params == {"n": 3, "num_nodes": 2, "size_cap": 100}
    sw.set_params(num_nodes=3)
    assert sw.num_nodes == 3
    cloned = clone(sw)
    assert cloned.get_params() == sw.get_params()


def test_fit_sets_attributes():
    sw = SchurWeylTransform(n=2, num_nodes=2).fit()
    assert sw.n_features_in_ == 4
    assert sw.basis_.shape == (4, 4)
    assert np.allclose(sw.basis_.T @ sw.basis_, np.eye(4), atol=1e-12)


def test_transform_matches_matrix_columns():
    sw = SchurWeylTransform(n=2, num_nodes=2).fit()
    out = sw.transform(np.eye(4))
    assert np.allclose(out, sw.basis_)


def test_round_trip_and_norm():
    sw = SchurWeylTransform(n=2, num_nodes=3).fit()
    rng = np.random.default_rng(5)
    X = rng.normal(size=(10, 8)) + 1j * rng.normal(size=(10, 8))
    W = sw.transform(X)
    assert np.allclose(np.linalg.norm(W, axis=1), np.linalg.norm(X, axis=1))
    assert np.allclose(sw.inverse_transform(W), X, atol=1e-12)


def test_single_vector_accepted():
    sw = SchurWeylTransform(n=2, num_nodes=2).fit()
    w = sw.transform([0.0, 1.0, 0.0, 0.0])
    assert w.shape == (1, 4)


def test_fit_transform_mixin():
    sw = SchurWeylTransform(n=2, num_nodes=2)
    out = sw.fit_transform(np.eye(4))
    assert out.shape == (4, 4)


def test_not_fitted_errors():
    sw = SchurWeylTransform()
    with pytest.raises(NotFittedError):
        sw.transform(np.zeros(4))
    with pytest.raises(NotFittedError):
        sw.get_feature_names_out()


def test_validation_errors():
    sw = SchurWeylTransform(n=2, num_nodes=2).fit()
    with pytest.raises(ValueError):
        sw.transform(np.zeros(5))
    with pytest.raises(ValueError):
        sw.transform(np.zeros((2, 2, 2)))
    with pytest.raises(ValueError):
        sw.transform(np.array([np.nan, 0.0, 0.0, 0.0]))
    with pytest.raises(ValueError):
        validate_state_array(np.array(["a", "b"], dtype=object), 2)


def test_feature_names():
    sw = SchurWeylTransform(n=2, num_nodes=2).fit()
    names = sw.get_feature_names_out()
    assert list(names) == ["2|2,2|1,2", "2|1,2|1,2", "2|1,1|1,2", "1,1|1/2|1/2"]


def test_composes_in_pipeline():
    pipe = Pipeline([("schur", SchurWeylTransform(n=2, num_nodes=2))])
    out = pipe.fit_transform(np.eye(4))
    assert out.shape == (4, 4)
