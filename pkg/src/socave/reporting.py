"""Trajectory CSV serialization and solve reports.

CSV schema: header ``t,x_1,...,x_n,residual_norm``; values printed with 17
significant digits so doubles round-trip losslessly.
"""

from __future__ import annotations

import csv
from dataclasses import asdict, dataclass

import numpy as np

from .integrator import Termination, Trajectory


def _fmt(v: float) -> str:
    return format(v, ".17g")


def write_trajectory_csv(path, traj: Trajectory) -> None:
    n = traj.states.shape[1]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t"] + [f"x_{i + 1}" for i in range(n)] + ["residual_norm"])
        for t, x, r in zip(traj.times, traj.states, traj.residual_norms):
            writer.writerow([_fmt(t)] + [_fmt(v) for v in x] + [_fmt(r)])


def read_trajectory_csv(path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(times, states, residual_norms) as stored; termination is not persisted."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        n = len(header) - 2
        times, states, res = [], [], []
        for row in reader:
            times.append(float(row[0]))
            states.append([float(v) for v in row[1 : n + 1]])
            res.append(float(row[-1]))
    return np.asarray(times), np.asarray(states), np.asarray(res)


@dataclass
class SolveReport:
    problem: str
    certificate: dict
    gamma: float
    tspan: tuple[float, float]
    termination: str
    final_state: list[float]
    final_residual_norm: float
    time_to_tolerance: dict[str, float | None]
    wall_time_s: float
    n_accepted: int
    n_rejected: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["tspan"] = list(self.tspan)
        return d


def termination_ok(term: Termination) -> bool:
    return term in (Termination.REACHED_TF, Termination.RESIDUAL_EVENT)
