"""Right-hand side and stability diagnostics of the projection dynamical system.

The flow is dx/dt = gamma * A^T (b + |x| - Ax), whose equilibria coincide
with the roots of Ax - |x| - b when A is nonsingular. The Lyapunov
diagnostics monitor V(x) = exp(||x - x*||^2) - 1 along trajectories; they
are never used to step the ODE.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import as_vector, spectral_norm
from .model import AveProblem, is_solution, residual

# exp() overflows shortly past 709 in double precision
EXP_OVERFLOW = 700.0


@dataclass(frozen=True)
class DynamicsConfig:
    gamma: float

    def __post_init__(self):
        if not (self.gamma > 0):
            raise ValueError("gamma must be > 0")


def rhs(p: AveProblem, cfg: DynamicsConfig, x) -> np.ndarray:
    """gamma * A^T (b + |x| - Ax), computed as -gamma * A^T r(x)."""
    return -cfg.gamma * (p.A.T @ residual(p, x))


def lipschitz_bound(p: AveProblem, cfg: DynamicsConfig) -> float:
    """Global Lipschitz constant gamma*||A||*(||A|| + 1) of the vector field."""
    norm_a = spectral_norm(p.A)
    return cfg.gamma * norm_a * (norm_a + 1.0)


def lyapunov_value(x, x_star) -> float:
    """exp(||x - x*||^2) - 1; +inf once the exponent would overflow."""
    x = as_vector(x)
    x_star = as_vector(x_star, x.shape[0])
    d2 = float(np.sum((x - x_star) ** 2))
    if d2 > EXP_OVERFLOW:
        return math.inf
    return math.expm1(d2)


def lyapunov_rate(p: AveProblem, cfg: DynamicsConfig, x, x_star) -> float:
    """dV/dt along the flow: -2*gamma*exp(||x - x*||^2)*(x - x*)^T A^T r(x)."""
    x = as_vector(x, p.n)
    x_star = as_vector(x_star, p.n)
    if not is_solution(p, x_star, 1e-8):
        raise ValueError("x_star is not a solution of the problem")
    d = x - x_star
    d2 = float(d @ d)
    inner = float(d @ (p.A.T @ residual(p, x)))
    if d2 > EXP_OVERFLOW:
        return -math.inf if inner > 0 else (math.inf if inner < 0 else 0.0)
    return -2.0 * cfg.gamma * math.exp(d2) * inner
