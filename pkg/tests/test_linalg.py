import math

import numpy as np
import pytest

from socave.linalg import build_tridiag, min_singular_value, spectral_norm


class TestBuildTridiag:
    def test_three_by_three(self):
        expected = [[4, -1, 0], [-1, 4, -1], [0, -1, 4]]
        assert build_tridiag(3, -1, 4, -1).tolist() == expected

    def test_size_one_has_no_off_diagonals(self):
        assert build_tridiag(1, -1, 4, -1).tolist() == [[4]]

    def test_identity_case(self):
        assert build_tridiag(2, 0, 1, 0).tolist() == [[1, 0], [0, 1]]

    def test_rejects_zero_size(self):
        with pytest.raises(ValueError):
            build_tridiag(0, 1, 1, 1)


class TestSpectralNorm:
    def test_identity(self):
        assert spectral_norm(np.eye(3)) == pytest.approx(1.0, rel=1e-12)

    def test_tridiag_known_eigenvalues(self):
        # eigenvalues of tridiag(-1,4,-1), n=3 are 4 - 2cos(k*pi/4)
        A = build_tridiag(3, -1, 4, -1)
        assert spectral_norm(A) == pytest.approx(4 + math.sqrt(2), rel=1e-10)

    def test_sign_diagonal(self):
        assert spectral_norm(np.diag([1.0, -1.0])) == pytest.approx(1.0, rel=1e-12)

    def test_zero_matrix(self):
        assert spectral_norm(np.zeros((4, 4))) == 0.0


class TestMinSingularValue:
    def test_tridiag_known_eigenvalues(self):
        A = build_tridiag(3, -1, 4, -1)
        assert min_singular_value(A) == pytest.approx(4 - math.sqrt(2), rel=1e-10)

    def test_sign_diagonal(self):
        assert min_singular_value(np.diag([1.0, -1.0])) == pytest.approx(1.0, rel=1e-12)

    def test_singular_matrix(self):
        assert min_singular_value(np.zeros((2, 2))) == 0.0


class TestExtremalProperties:
    def test_norm_dominates_random_products(self):
        rng = np.random.default_rng(7)
        A = rng.standard_normal((12, 12))
        bound = spectral_norm(A)
        for _ in range(1000):
            x = rng.standard_normal(12)
            assert bound * np.linalg.norm(x) >= np.linalg.norm(A @ x) * (1 - 1e-8)

    def test_min_le_max(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            A = rng.standard_normal((6, 6))
            assert min_singular_value(A) <= spectral_norm(A)

    def test_orthogonal_diagonal_construction(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            n = int(rng.integers(2, 10))
            q, _ = np.linalg.qr(rng.standard_normal((n, n)))
            d = rng.uniform(0.1, 5.0, n)
            A = (q * d) @ q.T
            assert spectral_norm(A) == pytest.approx(d.max(), rel=1e-8)
            assert min_singular_value(A) == pytest.approx(d.min(), rel=1e-8)
