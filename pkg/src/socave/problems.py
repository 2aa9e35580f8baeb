"""Benchmark problem constructors: the four reference instances and seeded
random instances with certified unique solvability."""

from __future__ import annotations

import math

import numpy as np

from .linalg import build_tridiag
from .model import AveProblem
from .rng import SplitMix64
from .soc import ConeStructure, soc_abs

TOY_RHS = {
    "multi": (0.0, 0.0),
    "unique": (-1.0, -1.0),
    "none": (1.0, 1.0),
}


def example_tridiag(n: int) -> tuple[AveProblem, np.ndarray]:
    """tridiag(-1, 4, -1) instance with known solution (-1, 1, -1, 1, ...).

    b is built as A x* - |x*| so the residual at x* vanishes by
    construction. The whole space is one SOC block.
    """
    if n < 2 or n % 2 != 0:
        raise ValueError("n must be even and >= 2")
    A = build_tridiag(n, -1.0, 4.0, -1.0)
    x_star = np.tile([-1.0, 1.0], n // 2)
    cone = ConeStructure((n,))
    b = A @ x_star - soc_abs(x_star, cone)
    return AveProblem(A, b, cone, name=f"tridiag(n={n})"), x_star


def example_toy(name: str) -> AveProblem:
    """2-d instances with A = diag(1, -1): infinitely many solutions
    ('multi'), the unique solution (0, 1) ('unique'), or none ('none')."""
    if name not in TOY_RHS:
        raise ValueError(f"unknown toy problem {name!r}")
    A = np.diag([1.0, -1.0])
    b = np.array(TOY_RHS[name])
    return AveProblem(A, b, ConeStructure((2,)), name=name)


def _qr_orthogonal(rng: SplitMix64, n: int) -> np.ndarray:
    """Orthogonal factor of a seeded gaussian matrix, sign-fixed for determinism."""
    G = np.array(rng.gaussians(n * n)).reshape(n, n)
    Q, R = np.linalg.qr(G)
    return Q * np.sign(np.diag(R))


def random_unique(n: int, blocks: ConeStructure, margin: float,
                  seed: int) -> tuple[AveProblem, np.ndarray]:
    """Seeded instance with sigma_min(A) >= 1 + margin and known solution.

    A = Q1 D Q2^T with orthogonal factors from gaussian QR and singular
    values uniform in [1 + margin, 3 + margin]; x* is standard gaussian and
    b = A x* - |x*|.
    """
    if margin <= 0:
        raise ValueError("margin must be > 0")
    if blocks.dim != n:
        raise ValueError("blocks must partition R^n")
    rng = SplitMix64(seed)
    q1 = _qr_orthogonal(rng, n)
    q2 = _qr_orthogonal(rng, n)
    d = np.array([rng.uniform(1.0 + margin, 3.0 + margin) for _ in range(n)])
    A = (q1 * d) @ q2.T
    x_star = np.array(rng.gaussians(n))
    b = A @ x_star - soc_abs(x_star, blocks)
    p = AveProblem(A, b, blocks, name=f"random_unique(n={n},seed={seed})")
    return p, x_star


def initial_grid(center, k: int, radius: float = 3.0, seed: int = 12345) -> np.ndarray:
    """k deterministic start points on the sphere of given radius about center.

    In 2-d the points are equally spaced on the circle starting at angle 0;
    in higher dimensions directions come from a fixed seeded gaussian
    stream, normalized.
    """
    center = np.asarray(center, dtype=float)
    n = center.shape[0]
    if k < 1:
        raise ValueError("k must be >= 1")
    pts = np.empty((k, n))
    if n == 2:
        for j in range(k):
            theta = 2.0 * math.pi * j / k
            pts[j] = center + radius * np.array([math.cos(theta), math.sin(theta)])
    else:
        rng = SplitMix64(seed)
        for j in range(k):
            d = np.array(rng.gaussians(n))
            d /= np.linalg.norm(d)
            pts[j] = center + radius * d
    return pts
