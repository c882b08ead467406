"""Building Markov jump processes and propagating them exactly.

Walks through the core value types (rate matrix, probability vector,
score vector), exact evolution via the matrix exponential, steady
states, and the seeded random-model generator.
"""

import numpy as np

from corrbound import (
    ProbVector,
    ScoreVector,
    propagate,
    propagator,
    propagator_integral,
    random_model,
    steady_state,
    validate_rate_matrix,
)

# A two-state chain: state 2 decays into state 1 at unit rate. Columns
# index the source state; the diagonal is filled in automatically.
W = validate_rate_matrix([[0.0, 1.0], [0.0, -1.0]])
print("generator:\n", W.w)
print("escape rates:", W.escape)

# Start fully in the decaying state and watch the mass transfer.
p0 = ProbVector(np.array([0.0, 1.0]))
for t in (0.0, 0.5, 1.0, 3.0):
    print(f"P({t}) = {propagate(W, p0, t).p}   (survivor fraction e^-t = {np.exp(-t):.6f})")

# The propagator itself is a column-stochastic matrix e^{Wt}.
P = propagator(W, 1.0)
print("\npropagator at t=1:\n", P)
print("column sums:", P.sum(axis=0))

# Its running time integral shows up in the dynamical activity later.
M = propagator_integral(W, 1.0)
print("\nintegrated propagator at t=1:\n", M)
print("entry (2,2) equals 1 - e^-1 =", 1.0 - np.exp(-1.0))

# Steady states: the decay chain funnels everything into state 1.
print("\nsteady state of the decay chain:", steady_state(W).p)

sym = validate_rate_matrix([[0.0, 1.0], [1.0, 0.0]])
print("steady state of the symmetric chain:", steady_state(sym).p)

# Random test models are fully reproducible: same (n, seed), same model.
W_r, p0_r, scores = random_model(3, seed=42)
W_r2, _, _ = random_model(3, seed=42)
print("\nrandom 3-state generator (seed 42):\n", np.round(W_r.w, 4))
print("identical on replay:", np.array_equal(W_r.w, W_r2.w))
print("initial law:", np.round(p0_r.p, 4), " scores:", np.round(scores.s, 4))
print("score sup-norm:", scores.max_abs)

# Scores are plain labels on states; nothing stops integer-valued ones.
spin = ScoreVector(np.array([-1.0, 0.0, 1.0]))
print("a trichotomous score:", spin.s)
