"""Finite-state Markov jump processes: generators, exact propagation, steady states.

Conventions used throughout the library:

* A generator ``W`` acts on column probability vectors, ``dP/dt = W P``.
  ``w[nu, mu]`` is the jump rate from state ``mu`` to state ``nu`` (units
  1/time), so every column of ``W`` sums to zero and the diagonal is the
  negative escape rate, ``w[mu, mu] = -R(mu)``.
* The diagonal of user-supplied rate matrices is never trusted: it is
  recomputed from the off-diagonal entries on construction.
* All value types are immutable after construction and safe to share
  across threads; the operations below are pure functions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np
import scipy.linalg

from .errors import (
    BadDimensionError,
    DimensionMismatchError,
    NegativeProbabilityError,
    NegativeRateError,
    NegativeTimeError,
    NoConvergenceError,
    NonFiniteError,
    NonSquareError,
    NonUniqueSteadyStateError,
    NotNormalizedError,
)

# Eigenvector-basis propagation is used only when the basis is this
# well conditioned and reproduces W to near machine precision.
_EIG_COND_LIMIT = 1e8
_EIG_RECON_RTOL = 1e-12

# Acceptance tolerances for probability vectors: sums may drift by the
# propagator's column-sum error; genuine negative mass is a bug.
_PROB_SUM_ATOL = 1e-10
_PROB_NEG_DEFICIT = 1e-12


def _as_float_array(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError(f"{name} contains non-finite entries")
    return arr


class _Spectral:
    """Eigendecomposition W = V diag(lam) V^{-1}, kept only if trustworthy."""

    __slots__ = ("lam", "V", "Vinv")

    def __init__(self, lam: np.ndarray, V: np.ndarray, Vinv: np.ndarray):
        self.lam = lam
        self.V = V
        self.Vinv = Vinv

    def expm_t(self, t: float) -> np.ndarray:
        return np.real((self.V * np.exp(self.lam * t)) @ self.Vinv)

    def phi_t(self, t) -> np.ndarray:
        """(e^{lam t} - 1)/lam elementwise, series near lam*t = 0.

        Accepts scalar or array ``t``; result broadcasts t against lam.
        """
        t = np.asarray(t, dtype=float)
        z = np.multiply.outer(t, self.lam)
        small = np.abs(z) < 1e-4
        # e^z - 1 without cancellation: expm1(x) cos y - 2 sin^2(y/2) + i e^x sin y
        x, y = z.real, z.imag
        expm1_z = (np.expm1(x) * np.cos(y) - 2.0 * np.sin(y / 2.0) ** 2) + 1j * np.exp(x) * np.sin(y)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.where(small, 0.0, expm1_z) / np.where(small, 1.0, z)
        series = 1.0 + z / 2.0 + z**2 / 6.0 + z**3 / 24.0
        out = np.where(small, series, out)
        return out * t[..., None] if t.ndim else out * t


@dataclass(frozen=True, eq=False)
class RateMatrix:
    """Generator of a continuous-time Markov chain over ``n >= 2`` states.

    Construct through :func:`validate_rate_matrix`; the raw constructor
    also validates and recomputes the diagonal.
    """

    w: np.ndarray

    def __post_init__(self):
        w = _as_float_array(self.w, "rate matrix")
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise NonSquareError(f"rate matrix must be square, got shape {w.shape}")
        n = w.shape[0]
        if n < 2:
            raise BadDimensionError(f"need at least 2 states, got {n}")
        off = w.copy()
        np.fill_diagonal(off, 0.0)
        neg = np.argwhere(off < 0.0)
        if neg.size:
            nu, mu = neg[0]
            raise NegativeRateError(
                f"negative rate {w[nu, mu]!r} at (row {nu + 1}, col {mu + 1})"
            )
        np.fill_diagonal(off, -off.sum(axis=0))
        off.setflags(write=False)
        object.__setattr__(self, "w", off)

    @property
    def n(self) -> int:
        return self.w.shape[0]

    @cached_property
    def escape(self) -> np.ndarray:
        """Escape rate R(mu) = total rate of leaving state mu."""
        r = -np.diag(self.w).copy()
        r[r < 0.0] = 0.0
        r.setflags(write=False)
        return r

    @cached_property
    def _spectral(self) -> _Spectral | None:
        lam, V = np.linalg.eig(self.w)
        try:
            cond = np.linalg.cond(V)
            if not np.isfinite(cond) or cond >= _EIG_COND_LIMIT:
                return None
            Vinv = np.linalg.inv(V)
        except np.linalg.LinAlgError:
            return None
        recon = np.real(V @ np.diag(lam) @ Vinv)
        scale = max(np.abs(self.w).max(), 1.0)
        if np.abs(recon - self.w).max() > _EIG_RECON_RTOL * scale:
            return None
        return _Spectral(lam, V, Vinv)

    def scaled(self, factor: float) -> "RateMatrix":
        """Generator with all rates multiplied by ``factor >= 0``."""
        if factor < 0.0:
            raise NegativeRateError("scale factor must be >= 0")
        return RateMatrix(self.w * factor)


@dataclass(frozen=True, eq=False)
class ProbVector:
    """Probability distribution over ``n`` states.

    Entries are clamped to zero when the total negative mass is roundoff
    sized (< 1e-12) and the vector is renormalized exactly; anything
    larger is rejected as a genuine bug rather than noise.
    """

    p: np.ndarray

    def __post_init__(self):
        p = _as_float_array(self.p, "probability vector")
        if p.ndim != 1:
            raise BadDimensionError("probability vector must be one-dimensional")
        deficit = float(-p[p < 0.0].sum())
        if deficit > _PROB_NEG_DEFICIT:
            raise NegativeProbabilityError(
                f"negative probability mass {deficit:.3e} exceeds roundoff tolerance"
            )
        total = float(p.sum())
        if abs(total - 1.0) > _PROB_SUM_ATOL:
            raise NotNormalizedError(f"probabilities sum to {total!r}, expected 1")
        q = np.clip(p, 0.0, None)
        q /= q.sum()
        q.setflags(write=False)
        object.__setattr__(self, "p", q)

    @property
    def n(self) -> int:
        return self.p.shape[0]


@dataclass(frozen=True, eq=False)
class ScoreVector:
    """Real-valued score over states; ``max_abs`` is the sup norm."""

    s: np.ndarray

    def __post_init__(self):
        s = _as_float_array(self.s, "score vector")
        if s.ndim != 1:
            raise BadDimensionError("score vector must be one-dimensional")
        s = s.copy()
        s.setflags(write=False)
        object.__setattr__(self, "s", s)

    @property
    def n(self) -> int:
        return self.s.shape[0]

    @cached_property
    def max_abs(self) -> float:
        return float(np.abs(self.s).max()) if self.s.size else 0.0


def validate_rate_matrix(w) -> RateMatrix:
    """Validate a raw square matrix of jump rates and wrap it.

    The diagonal of ``w`` is ignored and recomputed as the negative
    column escape rate; off-diagonal entries must be finite and >= 0.
    """
    return RateMatrix(np.asarray(w, dtype=float))


def _check_dims(W: RateMatrix, *others) -> None:
    for o in others:
        if o.n != W.n:
            raise DimensionMismatchError(f"expected dimension {W.n}, got {o.n}")


def _check_time(t: float) -> float:
    t = float(t)
    if not np.isfinite(t):
        raise NonFiniteError("time must be finite")
    if t < 0.0:
        raise NegativeTimeError(f"time must be >= 0, got {t}")
    return t


def propagator(W: RateMatrix, t: float) -> np.ndarray:
    """Transition-probability matrix e^{W t}; column ``mu`` is the law at
    time ``t`` started from state ``mu``.

    Uses the eigenvector basis when it is well conditioned, otherwise
    falls back to scaling-and-squaring.
    """
    t = _check_time(t)
    if t == 0.0:
        return np.eye(W.n)
    sd = W._spectral
    if sd is not None:
        return sd.expm_t(t)
    return scipy.linalg.expm(W.w * t)


def propagate(W: RateMatrix, p0: ProbVector, t: float) -> ProbVector:
    """Evolve an initial distribution: P(t) = e^{W t} P(0)."""
    _check_dims(W, p0)
    return ProbVector(propagator(W, t) @ p0.p)


def propagator_integral(W: RateMatrix, t: float) -> np.ndarray:
    """Time-integrated propagator: the matrix ``int_0^t e^{W s} ds``.

    Computed in the eigenvector basis when available; otherwise as the
    upper-right block of the exponential of ``[[W, I], [0, 0]] * t``.
    """
    t = _check_time(t)
    n = W.n
    if t == 0.0:
        return np.zeros((n, n))
    sd = W._spectral
    if sd is not None:
        return np.real((sd.V * sd.phi_t(t)) @ sd.Vinv)
    block = np.zeros((2 * n, 2 * n))
    block[:n, :n] = W.w
    block[:n, n:] = np.eye(n)
    return scipy.linalg.expm(block * t)[:n, n:]


def _integral_apply(W: RateMatrix, vec: np.ndarray, times: np.ndarray) -> np.ndarray:
    """Rows ``[int_0^t e^{W s} ds] @ vec`` for a whole array of times.

    Quadratures over the dynamical activity call this in batch; the
    eigenvector path evaluates all times in one shot.
    """
    times = np.asarray(times, dtype=float)
    sd = W._spectral
    if sd is not None:
        coeff = sd.Vinv @ vec
        return np.real(sd.phi_t(times) * coeff @ sd.V.T)
    return np.stack([propagator_integral(W, float(t)) @ vec for t in times])


def steady_state(W: RateMatrix) -> ProbVector:
    """Stationary distribution P_st with W P_st = 0, when it is unique.

    The kernel of W is extracted by SVD; a kernel of dimension > 1 (within
    tolerance) means the chain decomposes and no unique stationary law
    exists.
    """
    try:
        _, sing, vt = np.linalg.svd(W.w)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"SVD of generator failed: {exc}") from exc
    tol = max(float(sing.max(initial=0.0)), 1.0) * W.n * 1e-13
    kernel_dim = int(np.sum(sing <= tol))
    if kernel_dim != 1:
        raise NonUniqueSteadyStateError(
            f"generator kernel has dimension {kernel_dim}; need exactly 1"
        )
    v = vt[-1]
    if v.sum() < 0.0:
        v = -v
    if v.min() < -1e-9:
        raise NoConvergenceError("kernel vector has genuinely negative entries")
    v = np.clip(v, 0.0, None)
    pst = ProbVector(v / v.sum())
    if np.abs(W.w @ pst.p).max() > 1e-10 * max(np.abs(W.w).max(), 1.0):
        raise NoConvergenceError("candidate steady state does not satisfy W P = 0")
    return pst


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based generator (Philox); identical streams on every platform."""
    if not 0 <= int(seed) < 2**64:
        raise BadDimensionError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.Philox(key=np.uint64(seed)))


def random_model(n: int, seed: int) -> tuple[RateMatrix, ProbVector, ScoreVector]:
    """Seeded random test model.

    Distributions (recorded here because they are a choice, not a given):
    off-diagonal rates i.i.d. uniform on (0, 1]; initial probabilities
    uniform on the simplex via normalized exponentials; scores i.i.d.
    uniform on [-1, 1]. Same ``(n, seed)`` always yields bitwise-identical
    output.
    """
    if n < 2:
        raise BadDimensionError(f"need at least 2 states, got {n}")
    rng = make_rng(seed)
    rates = 1.0 - rng.random((n, n))  # uniform on (0, 1]
    np.fill_diagonal(rates, 0.0)
    W = RateMatrix(rates)
    p0 = ProbVector(_normalized_exponentials(rng, n))
    scores = ScoreVector(rng.uniform(-1.0, 1.0, size=n))
    return W, p0, scores


def _normalized_exponentials(rng: np.random.Generator, n: int) -> np.ndarray:
    e = rng.exponential(1.0, size=n)
    return e / e.sum()


RANDOM_MODEL_METADATA = {
    "generator": "philox",
    "rates": "iid uniform (0,1] off-diagonal",
    "p0": "uniform on simplex (normalized exponentials)",
    "scores": "iid uniform [-1,1]",
}


def load_model(source) -> tuple[RateMatrix, ProbVector, ScoreVector, ScoreVector]:
    """Read a model description from a JSON file, path, or plain dict.

    Schema: ``{"n": int, "rates": n x n (diagonal ignored), "p0": [...],
    "S": [...], "T": [...]}`` with ``T`` optional (defaults to ``S``).
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = source
    if not isinstance(data, dict):
        raise BadDimensionError("model description must be a JSON object")
    try:
        n = int(data["n"])
        rates = data["rates"]
        p0 = data["p0"]
        s = data["S"]
    except KeyError as exc:
        raise BadDimensionError(f"model file missing required field {exc}") from exc
    W = validate_rate_matrix(rates)
    if W.n != n:
        raise DimensionMismatchError(f"'n'={n} but rates are {W.n}x{W.n}")
    pv = ProbVector(np.asarray(p0, dtype=float))
    sv = ScoreVector(np.asarray(s, dtype=float))
    tv = ScoreVector(np.asarray(data.get("T", s), dtype=float))
    _check_dims(W, pv, sv, tv)
    return W, pv, sv, tv
