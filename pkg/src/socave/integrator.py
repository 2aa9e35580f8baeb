"""Adaptive embedded Runge-Kutta 2(3) initial-value solver.

Uses the Bogacki-Shampine 3(2) pair (the method behind MATLAB's ode23)
with standard proportional step control: accept when the scaled error
estimate is <= 1, step factor 0.9 * err^(-1/3) clamped to [0.2, 5].
Trajectories record every accepted step and can stop early on a residual
event.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .dynamics import DynamicsConfig, rhs
from .model import AveProblem, residual


class Termination(enum.Enum):
    REACHED_TF = "ReachedTf"
    RESIDUAL_EVENT = "ResidualEvent"
    MAX_STEPS = "MaxSteps"
    STEP_UNDERFLOW = "StepUnderflow"


@dataclass(frozen=True)
class IntegratorOptions:
    rtol: float = 1e-6
    atol: float = 1e-9
    h_init: float | None = None
    h_min: float = 1e-14
    h_max: float | None = None
    max_steps: int = 1_000_000
    stop_on_residual: float | None = None
    record_stride: int = 1

    def __post_init__(self):
        if self.rtol <= 0 or self.atol <= 0:
            raise ValueError("rtol and atol must be > 0")
        if self.h_init is not None and self.h_init <= 0:
            raise ValueError("h_init must be > 0")
        if self.record_stride < 1:
            raise ValueError("record_stride must be >= 1")


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray  # shape (len(times), n)
    residual_norms: np.ndarray
    termination: Termination
    n_accepted: int
    n_rejected: int

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]


def rk23_step(f, t, x, h, rtol=1e-6, atol=1e-9, k1=None):
    """One Bogacki-Shampine step: (3rd-order state, scaled error estimate).

    The error estimate is the infinity norm of (x_high - x_low) divided
    componentwise by atol + rtol * max(|x|, |x_high|). Non-finite stage
    values yield an infinite estimate so the caller rejects the step.
    """
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        if k1 is None:
            k1 = f(t, x)
        k2 = f(t + 0.5 * h, x + (0.5 * h) * k1)
        k3 = f(t + 0.75 * h, x + (0.75 * h) * k2)
        # integer-weight forms keep the estimate exactly zero when all stages agree
        x_high = x + h * ((2.0 * k1 + 3.0 * k2 + 4.0 * k3) / 9.0)
        k4 = f(t + h, x_high)
        err_vec = (h / 72.0) * (-5.0 * k1 + 6.0 * k2 + 8.0 * k3 - 9.0 * k4)
    if not (np.all(np.isfinite(x_high)) and np.all(np.isfinite(err_vec))):
        return x_high, math.inf
    scale = atol + rtol * np.maximum(np.abs(x), np.abs(x_high))
    err = float(np.max(np.abs(err_vec) / scale)) if x.size else 0.0
    return x_high, err


def _step_factor(err: float) -> float:
    if err == 0.0:
        return 5.0
    return min(5.0, max(0.2, 0.9 * err ** (-1.0 / 3.0)))


def integrate_ode(f, x0, tspan, opts: IntegratorOptions = IntegratorOptions(),
                  residual_fn=None) -> Trajectory:
    """Integrate dx/dt = f(t, x) over tspan with adaptive stepping.

    residual_fn(x), when given, supplies the recorded residual norms and
    drives the stop_on_residual event; otherwise the norm of the vector
    field itself is recorded.
    """
    t0, tf = float(tspan[0]), float(tspan[1])
    if not t0 < tf:
        raise ValueError("tspan must satisfy t0 < tf")
    x = np.array(x0, dtype=float)

    h = opts.h_init if opts.h_init is not None else 0.01 * (tf - t0)
    if opts.h_max is not None:
        h = min(h, opts.h_max)
    h = max(h, opts.h_min)

    fx = f(t0, x)

    def res_norm(state, field_val):
        if residual_fn is not None:
            return float(residual_fn(state))
        return float(np.linalg.norm(field_val))

    t = t0
    times = [t0]
    states = [x.copy()]
    res_norms = [res_norm(x, fx)]
    n_accepted = 0
    n_rejected = 0
    termination = None

    if opts.stop_on_residual is not None and res_norms[0] <= opts.stop_on_residual:
        termination = Termination.RESIDUAL_EVENT

    while termination is None:
        if n_accepted + n_rejected >= opts.max_steps:
            termination = Termination.MAX_STEPS
            break
        h_trial = min(h, tf - t)
        x_new, err = rk23_step(f, t, x, h_trial, opts.rtol, opts.atol, k1=fx)
        if err <= 1.0:
            t = t + h_trial
            x = x_new
            fx = f(t, x)
            n_accepted += 1
            rnorm = res_norm(x, fx)
            event = (opts.stop_on_residual is not None
                     and rnorm <= opts.stop_on_residual)
            # robust endpoint test: floating accumulation can leave t a few
            # ulps short of tf after the final truncated step
            done = (tf - t) <= 1e-13 * (tf - t0)
            if event:
                termination = Termination.RESIDUAL_EVENT
            elif done:
                termination = Termination.REACHED_TF
            if termination is not None or n_accepted % opts.record_stride == 0:
                times.append(t)
                states.append(x.copy())
                res_norms.append(rnorm)
        else:
            n_rejected += 1
        h = h_trial * _step_factor(err)
        if opts.h_max is not None:
            h = min(h, opts.h_max)
        if termination is None and h < opts.h_min:
            termination = Termination.STEP_UNDERFLOW

    if times[-1] < t:  # make sure the last accepted state is recorded
        times.append(t)
        states.append(x.copy())
        res_norms.append(res_norm(x, fx))

    return Trajectory(
        times=np.asarray(times),
        states=np.asarray(states),
        residual_norms=np.asarray(res_norms),
        termination=termination,
        n_accepted=n_accepted,
        n_rejected=n_rejected,
    )


def integrate(p: AveProblem, cfg: DynamicsConfig, x0, tspan,
              opts: IntegratorOptions = IntegratorOptions()) -> Trajectory:
    """Integrate the projection dynamical system for a SOCAVE problem."""
    def f(t, x):
        return rhs(p, cfg, x)

    def res(x):
        return float(np.linalg.norm(residual(p, x)))

    return integrate_ode(f, x0, tspan, opts, residual_fn=res)


def time_to_tolerance(traj: Trajectory, tol: float) -> float | None:
    """First recorded time with residual norm <= tol, or None."""
    if tol <= 0:
        raise ValueError("tol must be > 0")
    hits = np.nonzero(traj.residual_norms <= tol)[0]
    if hits.size == 0:
        return None
    return float(traj.times[hits[0]])
