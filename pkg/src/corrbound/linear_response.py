"""First-order response of a stationary Markov process to weak drives.

A perturbation ``chi * F * f(t)`` added to the generator shifts an
observable mean away from its stationary value. To first order in
``chi`` the shift is the convolution of the drive with the response
kernel, and for the canonical perturbation ``F = W diag(S)`` that
kernel coincides with the time derivative of the two-time correlation
<S(0) G(t)>. Pulse and step drives therefore have closed-form shifts
(``chi dC/dt`` and ``chi (C(t) - C(0))``) and are never convolved
numerically; sampled drives use trapezoidal convolution.

An independent fixed-step Runge-Kutta integrator of the fully
perturbed master equation is provided as the oracle for all of the
above. A true delta drive is ill-posed in a fixed-step scheme, so
pulse drives enter the oracle as narrow unit-area rectangles; the
integrator splits steps at drive discontinuities so each sub-step sees
smooth (for rectangles, constant) coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import BoundReport, _ratio, activity_rate
from .correlation import correlation_derivative, two_point
from .errors import (
    NonFiniteError,
    NonPositiveTimeError,
    NotSteadyStateError,
    StepTooLargeError,
)
from .markov import (
    ProbVector,
    RateMatrix,
    ScoreVector,
    _check_dims,
    _check_time,
    propagator,
    steady_state,
)

_STEADY_ATOL = 1e-8


@dataclass(frozen=True)
class StepDrive:
    """Unit drive switched on at time zero and held."""

    piecewise_constant = True

    def value(self, t: float) -> float:
        return 1.0 if t >= 0.0 else 0.0

    def breakpoints(self) -> tuple:
        return (0.0,)


@dataclass(frozen=True)
class PulseDrive:
    """Unit-area rectangle on [0, width): a delta-sequence member."""

    width: float = 1e-4

    piecewise_constant = True

    def __post_init__(self):
        if not self.width > 0.0:
            raise NonPositiveTimeError("pulse width must be > 0")

    def value(self, t: float) -> float:
        return 1.0 / self.width if 0.0 <= t < self.width else 0.0

    def breakpoints(self) -> tuple:
        return (0.0, self.width)


@dataclass(frozen=True, eq=False)
class SampledDrive:
    """Piecewise-linear drive through (time, value) samples, zero outside."""

    times: np.ndarray
    values: np.ndarray

    piecewise_constant = False

    def __post_init__(self):
        ts = np.asarray(self.times, dtype=float)
        vs = np.asarray(self.values, dtype=float)
        if ts.ndim != 1 or ts.shape != vs.shape or ts.size < 2:
            raise NonFiniteError("sampled drive needs matching 1-d time/value arrays")
        if np.any(np.diff(ts) <= 0.0):
            raise NonFiniteError("sampled drive times must be strictly increasing")
        if not (np.all(np.isfinite(ts)) and np.all(np.isfinite(vs))):
            raise NonFiniteError("sampled drive contains non-finite entries")
        ts.setflags(write=False)
        vs.setflags(write=False)
        object.__setattr__(self, "times", ts)
        object.__setattr__(self, "values", vs)

    def value(self, t: float) -> float:
        return float(np.interp(t, self.times, self.values, left=0.0, right=0.0))

    def breakpoints(self) -> tuple:
        return tuple(self.times)


@dataclass(frozen=True, eq=False)
class Perturbation:
    """Validated perturbation: generator direction, strength, drive."""

    F: np.ndarray
    chi: float
    drive: object

    def __post_init__(self):
        F = np.asarray(self.F, dtype=float)
        if F.ndim != 2 or F.shape[0] != F.shape[1]:
            raise NonFiniteError("perturbation matrix must be square")
        if not np.all(np.isfinite(F)):
            raise NonFiniteError("perturbation matrix contains non-finite entries")
        if self.chi == 0.0 or not np.isfinite(self.chi):
            raise NonFiniteError("perturbation strength chi must be finite and nonzero")
        F = F.copy()
        F.setflags(write=False)
        object.__setattr__(self, "F", F)


def canonical_perturbation(W: RateMatrix, S: ScoreVector) -> np.ndarray:
    """The column-rescaled generator W diag(S); columns sum to zero."""
    _check_dims(W, S)
    return W.w * S.s[None, :]


def _check_steady(W: RateMatrix, Pst: ProbVector) -> None:
    _check_dims(W, Pst)
    resid = float(np.abs(W.w @ Pst.p).max())
    if resid > _STEADY_ATOL:
        raise NotSteadyStateError(
            f"baseline is not stationary: max |W P| = {resid:.3e}"
        )


def response_function(
    W: RateMatrix,
    Pst: ProbVector,
    F: np.ndarray,
    G: ScoreVector,
    t: float,
) -> float:
    """Response kernel 1 G e^{Wt} F P_st for t >= 0, exactly 0 for t < 0."""
    _check_steady(W, Pst)
    _check_dims(W, G)
    if t < 0.0:
        return 0.0
    F = np.asarray(F, dtype=float)
    v = propagator(W, float(t)) @ (F @ Pst.p)
    return float(G.s @ v)


def pulse_shift(
    W: RateMatrix,
    Pst: ProbVector,
    S: ScoreVector,
    T: ScoreVector,
    chi: float,
    t: float,
) -> float:
    """First-order shift of <T> after a delta kick: chi * dC/dt."""
    if t <= 0.0:
        raise NonPositiveTimeError(f"pulse response needs t > 0, got {t}")
    _check_steady(W, Pst)
    return chi * correlation_derivative(W, Pst, S, T, t)


def step_shift(
    W: RateMatrix,
    Pst: ProbVector,
    S: ScoreVector,
    T: ScoreVector,
    chi: float,
    t: float,
) -> float:
    """First-order shift of <T> under a held drive: chi * (C(t) - C(0))."""
    t = _check_time(t)
    _check_steady(W, Pst)
    return chi * (
        two_point(W, Pst, S, T, t) - two_point(W, Pst, S, T, 0.0)
    )


def bound_pulse(
    W: RateMatrix,
    Pst: ProbVector,
    S: ScoreVector,
    T: ScoreVector,
    chi: float,
    t: float,
) -> BoundReport:
    """Pulse-shift magnitude against chi S_max T_max sqrt(a / t)."""
    lhs = abs(pulse_shift(W, Pst, S, T, chi, t))
    rate = activity_rate(W, Pst)
    rhs = abs(chi) * S.max_abs * T.max_abs * math.sqrt(rate / t)
    return BoundReport(
        bound_id="PULSE_EQ11",
        t1=t,
        t2=t,
        lhs=lhs,
        rhs=rhs,
        ratio=_ratio(lhs, rhs),
        in_validity_domain=True,
        cmax_mode="standard",
    )


def bound_step(
    W: RateMatrix,
    Pst: ProbVector,
    S: ScoreVector,
    T: ScoreVector,
    chi: float,
    t: float,
) -> BoundReport:
    """Step-shift magnitude against 2 chi S_max T_max sin(sqrt(a t)).

    For sqrt(a t) beyond pi/2 the report substitutes the trivial bound
    2 chi S_max T_max with the domain flag cleared.
    """
    lhs = abs(step_shift(W, Pst, S, T, chi, t))
    arg = math.sqrt(activity_rate(W, Pst) * t)
    in_domain = arg <= math.pi / 2.0
    pref = 2.0 * abs(chi) * S.max_abs * T.max_abs
    rhs = pref * math.sin(arg) if in_domain else pref
    return BoundReport(
        bound_id="STEP_EQ12",
        t1=0.0,
        t2=t,
        lhs=lhs,
        rhs=rhs,
        ratio=_ratio(lhs, rhs),
        in_validity_domain=in_domain,
        cmax_mode="standard",
        geodesic_arg=arg,
    )


def convolved_shift(
    W: RateMatrix,
    Pst: ProbVector,
    F: np.ndarray,
    G: ScoreVector,
    chi: float,
    drive: SampledDrive,
    t: float,
    dt: float,
) -> float:
    """Trapezoidal convolution of the response kernel with a sampled drive."""
    t = _check_time(t)
    if dt <= 0.0:
        raise StepTooLargeError("convolution step must be > 0")
    grid = np.arange(0.0, t + 0.5 * dt, dt)
    kernel = np.array([response_function(W, Pst, F, G, t - tp) for tp in grid])
    fvals = np.array([drive.value(tp) for tp in grid])
    return chi * float(np.trapezoid(kernel * fvals, grid))


@dataclass(frozen=True, eq=False)
class OracleSeries:
    """Fixed-grid solution of the perturbed master equation."""

    times: np.ndarray
    probs: tuple

    def shift(self, G: ScoreVector) -> np.ndarray:
        """Series of <G> displacements from the initial (stationary) value."""
        means = np.array([float(G.s @ pv.p) for pv in self.probs])
        return means - means[0]


def _rk4_step(W, chi, F, drive, a: float, h: float, P: np.ndarray) -> np.ndarray:
    if drive.piecewise_constant:
        f_lo = f_mid = f_hi = drive.value(a + 0.5 * h)
    else:
        f_lo, f_mid, f_hi = drive.value(a), drive.value(a + 0.5 * h), drive.value(a + h)

    def rhs(fval, vec):
        return W.w @ vec + (chi * fval) * (F @ vec)

    k1 = rhs(f_lo, P)
    k2 = rhs(f_mid, P + 0.5 * h * k1)
    k3 = rhs(f_mid, P + 0.5 * h * k2)
    k4 = rhs(f_hi, P + h * k3)
    return P + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def perturbed_oracle(
    W: RateMatrix,
    F: np.ndarray,
    chi: float,
    drive,
    t_end: float,
    dt: float,
) -> OracleSeries:
    """Integrate dP/dt = (W + chi F f(t)) P from the stationary state.

    Fixed-step classical Runge-Kutta on the output grid, with steps
    split internally at drive discontinuities. Requires the step to
    resolve the fastest escape rate (dt <= 1e-3 / max R). Probability
    is conserved exactly when the columns of F sum to zero, which the
    canonical perturbation guarantees.
    """
    pert = Perturbation(F, chi, drive)
    t_end = _check_time(t_end)
    max_rate = float(W.escape.max())
    if dt <= 0.0:
        raise StepTooLargeError("dt must be > 0")
    if max_rate > 0.0 and dt > 1e-3 / max_rate:
        raise StepTooLargeError(
            f"dt = {dt} exceeds 1e-3 / max escape rate = {1e-3 / max_rate:.3e}"
        )
    Pst = steady_state(W)
    n_steps = max(int(math.ceil(t_end / dt - 1e-12)), 0) if t_end > 0 else 0
    times = np.minimum(np.arange(n_steps + 1) * dt, t_end)
    cuts = sorted(b for b in drive.breakpoints() if 0.0 < b < t_end)
    P = Pst.p.copy()
    out = [ProbVector(P)]
    for k in range(n_steps):
        a, b = times[k], times[k + 1]
        mesh = [a] + [c for c in cuts if a < c < b] + [b]
        for lo, hi in zip(mesh[:-1], mesh[1:]):
            P = _rk4_step(W, pert.chi, pert.F, drive, lo, hi - lo, P)
        if (
            not np.all(np.isfinite(P))
            or abs(P.sum() - 1.0) > 1e-6
            or P.min() < -1e-6
        ):
            raise NonFiniteError(f"integration diverged at t = {b}")
        out.append(ProbVector(P))
    return OracleSeries(times=times, probs=tuple(out))
