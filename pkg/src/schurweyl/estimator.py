"""Scikit-learn style front end for the transform.

The change of basis is a fixed orthogonal matrix determined by the chain
shape, so ``fit`` assembles it once and ``transform``/``inverse_transform``
apply it to batches of state vectors.  The estimator follows the sklearn
contract (``get_params``/``set_params``/``clone``/``fit_transform``) so it
drops into pipelines next to ordinary preprocessing steps.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .tableaux import SystemShape
from .transform import DEFAULT_SIZE_CAP, assemble


def validate_state_array(X, dim: int) -> np.ndarray:
    """Coerce a batch of state vectors to a 2d complex-capable array.

    Accepts a single vector (1d) or a stack of vectors (2d, one state per
    row); rejects wrong dimensions and non-finite coefficients.
    """
    arr = np.asarray(X)
    if arr.dtype.kind not in "biufc":
        raise ValueError(f"state vectors must be numeric, got dtype {arr.dtype}")
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"expected a vector or a stack of vectors, got ndim={arr.ndim}")
    if arr.shape[1] != dim:
        raise ValueError(f"state vectors have dimension {arr.shape[1]}, expected {dim}")
    if not np.all(np.isfinite(arr.real)) or (arr.dtype.kind == "c" and not np.all(np.isfinite(arr.imag))):
        raise ValueError("state vectors must have finite coefficients")
    return arr


class SchurWeylTransform(TransformerMixin, BaseEstimator):
    """Change of basis from product states to irreducible (lambda, t, y) labels.

    Parameters
    ----------
    n : int, default=2
        Single-node dimension (n = 2s + 1 for spin s).
    num_nodes : int, default=2
        Number of chain nodes N.
    size_cap : int or None, default=4096
        Maximum allowed number of basis states n**N; ``fit`` raises
        :class:`~schurweyl.transform.SizeCapExceeded` beyond it.

    Attributes
    ----------
    matrix_ : SchurWeylMatrix
        The exact assembled transform.
    basis_ : ndarray of shape (n**N, n**N)
        Floating-point view of the matrix (rows: configurations, columns:
        irreducible labels).
    n_features_in_ : int
        Dimension of the product space, n**N.

    Examples
    --------
    >>> sw = SchurWeylTransform(n=2, num_nodes=2).fit()
    >>> sw.transform([[0.0, 1.0, 0.0, 0.0]]).shape
    (1, 4)
    """

    def __init__(self, n: int = 2, num_nodes: int = 2, size_cap: int | None = DEFAULT_SIZE_CAP):
        self.n = n
        self.num_nodes = num_nodes
        self.size_cap = size_cap

    def fit(self, X=None, y=None):
        """Assemble the exact transform for the configured shape.

        ``X`` is accepted for pipeline compatibility and is only used to
        cross-check dimensions when provided.
        """
        shape = SystemShape(self.n, self.num_nodes)
        self.matrix_ = assemble(shape, size_cap=self.size_cap)
        self.basis_ = self.matrix_.to_array()
        self.n_features_in_ = shape.dim
        if X is not None:
            validate_state_array(X, self.n_features_in_)
        return self

    def _check_fitted(self):
        if not hasattr(self, "matrix_"):
            raise NotFittedError("this SchurWeylTransform instance is not fitted yet; call fit first")

    def transform(self, X):
        """Coefficients of each state in the irreducible basis (rows of X are
        product-basis state vectors)."""
        self._check_fitted()
        arr = validate_state_array(X, self.n_features_in_)
        return arr @ self.basis_

    def inverse_transform(self, X):
        """Expand irreducible-basis coefficient vectors back over product
        configurations."""
        self._check_fitted()
        arr = validate_state_array(X, self.n_features_in_)
        return arr @ self.basis_.T

    def get_feature_names_out(self, input_features=None):
        """Column labels ``lambda|t|y`` in the text formats."""
        self._check_fitted()
        return np.asarray([key.label() for key in self.matrix_.columns], dtype=object)
