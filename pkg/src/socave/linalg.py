"""Dense linear algebra helpers: structured constructors and extremal singular values.

Matrices and vectors are plain float64 numpy arrays throughout the package.
"""

from __future__ import annotations

import numpy as np


def as_matrix(A) -> np.ndarray:
    """Validate and return a finite 2-d float64 matrix."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={A.ndim}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    return A


def as_vector(x, dim: int | None = None) -> np.ndarray:
    """Validate and return a finite 1-d float64 vector, optionally of fixed dim."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise ValueError(f"expected a vector, got ndim={x.ndim}")
    if dim is not None and x.shape[0] != dim:
        raise ValueError(f"expected dimension {dim}, got {x.shape[0]}")
    if not np.all(np.isfinite(x)):
        raise ValueError("vector entries must be finite")
    return x


def build_tridiag(n: int, sub: float, diag: float, sup: float) -> np.ndarray:
    """n-by-n matrix with constant sub-, main and super-diagonal entries."""
    if n < 1:
        raise ValueError("n must be >= 1")
    A = np.zeros((n, n))
    np.fill_diagonal(A, diag)
    if n > 1:
        idx = np.arange(n - 1)
        A[idx + 1, idx] = sub
        A[idx, idx + 1] = sup
    return A


def spectral_norm(A) -> float:
    """Largest singular value (operator 2-norm) via dense SVD."""
    A = as_matrix(A)
    if A.size == 0:
        return 0.0
    return float(np.linalg.svd(A, compute_uv=False)[0])


def min_singular_value(A) -> float:
    """Smallest singular value; 0 for singular matrices."""
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    return float(np.linalg.svd(A, compute_uv=False)[-1])
