"""Statistical distances between distributions over finite outcome spaces.

Outcome keys are opaque; two distributions are comparable only when
their key sets are identical, with no implicit zero padding: a silent
support mismatch is the classic bug in path-space distances. Keys are
kept in sorted order so every pairwise quantity is evaluated in a fixed
order and the distances are exactly symmetric. Sums are accumulated
with compensated summation (``math.fsum``) because path spaces grow to
~1e5 outcomes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import KeyMismatchError, NegativeProbabilityError, NotNormalizedError

_SUM_ATOL = 1e-10


@dataclass(frozen=True, eq=False)
class FiniteDistribution:
    """Probability weights over an arbitrary finite outcome set."""

    keys: tuple
    probs: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=float)
        if len(self.keys) != probs.shape[0]:
            raise KeyMismatchError("keys and probabilities differ in length")
        if probs.size and probs.min() < 0.0:
            worst = float(probs.min())
            if worst < -1e-12:
                raise NegativeProbabilityError(f"negative weight {worst!r}")
            probs = np.clip(probs, 0.0, None)
        total = math.fsum(probs.tolist())
        if abs(total - 1.0) > _SUM_ATOL:
            raise NotNormalizedError(f"weights sum to {total!r}, expected 1")
        probs = probs.copy()
        probs.setflags(write=False)
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "keys", tuple(self.keys))

    @classmethod
    def from_weights(cls, weights: dict) -> "FiniteDistribution":
        keys = sorted(weights)
        return cls(tuple(keys), np.array([weights[k] for k in keys], dtype=float))

    @classmethod
    def from_sorted(cls, keys, probs) -> "FiniteDistribution":
        """Trusted constructor for keys already in canonical sorted order."""
        return cls(tuple(keys), np.asarray(probs, dtype=float))

    def weight(self, key) -> float:
        return float(self.probs[self.keys.index(key)])


def _aligned(p: FiniteDistribution, q: FiniteDistribution):
    if p.keys != q.keys:
        raise KeyMismatchError("distributions defined over different outcome sets")
    return p.probs, q.probs


def tvd(p: FiniteDistribution, q: FiniteDistribution) -> float:
    """Total variation distance, (1/2) sum |p - q|, in [0, 1]."""
    a, b = _aligned(p, q)
    return 0.5 * math.fsum(np.abs(a - b).tolist())


def bhattacharyya(p: FiniteDistribution, q: FiniteDistribution) -> float:
    """Bhattacharyya coefficient, sum sqrt(p q), in [0, 1]."""
    a, b = _aligned(p, q)
    return math.fsum(np.sqrt(a * b).tolist())


def hellinger_sq(p: FiniteDistribution, q: FiniteDistribution) -> float:
    """Squared Hellinger distance, (1/2) sum (sqrt p - sqrt q)^2.

    Equals ``1 - bhattacharyya(p, q)`` up to roundoff.
    """
    a, b = _aligned(p, q)
    return 0.5 * math.fsum(((np.sqrt(a) - np.sqrt(b)) ** 2).tolist())
