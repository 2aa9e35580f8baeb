"""SOCAVE problem object: residual maps, solution tests and solvability certificate.

The equation is A x - |x| - b = 0 with the Jordan-algebra absolute value
over a product of second-order cones. The same root set is reachable
through the complementarity pair Q(x) = Ax + x - b, F(x) = Ax - x - b and
the projection residual Q(x) - P_K[Q(x) - F(x)]; both residual forms are
exposed so they can cross-check each other.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, as_vector, build_tridiag, min_singular_value
from .soc import ConeStructure, project_cone, soc_abs

CERT_EPS = 1e-10


@dataclass(frozen=True)
class AveProblem:
    A: np.ndarray
    b: np.ndarray
    cone: ConeStructure
    name: str = ""

    def __post_init__(self):
        A = as_matrix(self.A)
        if A.shape[0] != A.shape[1]:
            raise ValueError("A must be square")
        b = as_vector(self.b, A.shape[0])
        if self.cone.dim != A.shape[0]:
            raise ValueError("cone dimension must match A")
        A.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.A.shape[0]


class Solvability(enum.Enum):
    UNIQUE_GUARANTEED = "UniqueGuaranteed"
    BOUNDARY_REGIME = "BoundaryRegime"
    NOT_CERTIFIED = "NotCertified"


@dataclass(frozen=True)
class SolvabilityCertificate:
    sigma_min: float
    verdict: Solvability


def residual(p: AveProblem, x) -> np.ndarray:
    """r(x) = Ax - |x| - b."""
    x = as_vector(x, p.n)
    return p.A @ x - soc_abs(x, p.cone) - p.b


def qf_maps(p: AveProblem, x) -> tuple[np.ndarray, np.ndarray]:
    """(Q(x), F(x)) = (Ax + x - b, Ax - x - b)."""
    x = as_vector(x, p.n)
    q = p.A @ x - p.b + x
    return q, q - 2.0 * x  # F built from Q so Q - F = 2x holds exactly


def residual_projection_form(p: AveProblem, x) -> np.ndarray:
    """Q(x) - P_K[Q(x) - F(x)]; provably identical to residual()."""
    q, f = qf_maps(p, x)
    return q - project_cone(q - f, p.cone)


def is_solution(p: AveProblem, x, tol: float) -> bool:
    if tol <= 0:
        raise ValueError("tol must be > 0")
    return float(np.linalg.norm(residual(p, x))) <= tol


def solvability_certificate(p: AveProblem) -> SolvabilityCertificate:
    """Classify by sigma_min(A): > 1 guarantees a unique solution."""
    sigma = min_singular_value(p.A)
    if sigma > 1.0 + CERT_EPS:
        verdict = Solvability.UNIQUE_GUARANTEED
    elif sigma < 1.0 - CERT_EPS:
        verdict = Solvability.NOT_CERTIFIED
    else:
        verdict = Solvability.BOUNDARY_REGIME
    return SolvabilityCertificate(sigma, verdict)


def contraction_gap(p: AveProblem, x, x_star) -> float:
    """(x - x*)^T A^T r(x) - 0.5*||r(x)||^2; nonnegative when sigma_min(A) >= 1.

    x_star is re-verified as a solution rather than trusted.
    """
    x = as_vector(x, p.n)
    x_star = as_vector(x_star, p.n)
    if not is_solution(p, x_star, 1e-8):
        raise ValueError("x_star is not a solution of the problem")
    r = residual(p, x)
    return float((x - x_star) @ (p.A.T @ r) - 0.5 * (r @ r))


# -- problem JSON schema ------------------------------------------------------


def problem_to_dict(p: AveProblem, x_star=None) -> dict:
    d = {
        "n": p.n,
        "cone_blocks": list(p.cone.blocks),
        "A": {"kind": "dense", "entries": p.A.tolist()},
        "b": p.b.tolist(),
    }
    if p.name:
        d["name"] = p.name
    if x_star is not None:
        d["x_star"] = np.asarray(x_star, dtype=float).tolist()
    return d


def problem_from_dict(d: dict) -> tuple[AveProblem, np.ndarray | None]:
    """Build a problem (and optional known solution) from the JSON schema."""
    try:
        n = int(d["n"])
        cone = ConeStructure(tuple(d["cone_blocks"]))
        spec = d["A"]
        kind = spec["kind"]
        if kind == "dense":
            A = np.asarray(spec["entries"], dtype=float)
        elif kind == "tridiag":
            A = build_tridiag(n, float(spec["sub"]), float(spec["diag"]), float(spec["sup"]))
        else:
            raise ValueError(f"unknown matrix kind {kind!r}")
        b = np.asarray(d["b"], dtype=float)
        x_star = None
        if d.get("x_star") is not None:
            x_star = as_vector(np.asarray(d["x_star"], dtype=float), n)
        p = AveProblem(A, b, cone, name=str(d.get("name", "")))
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed problem description: {e}") from e
    return p, x_star


def load_problem(path) -> tuple[AveProblem, np.ndarray | None]:
    with open(path) as fh:
        try:
            d = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError(f"invalid JSON in {path}: {e}") from e
    return problem_from_dict(d)


def save_problem(path, p: AveProblem, x_star=None) -> None:
    with open(path, "w") as fh:
        json.dump(problem_to_dict(p, x_star), fh, indent=2)
        fh.write("\n")
