import numpy as np
import pytest

from corrbound import (
    ProbVector,
    ScoreVector,
    Trajectory,
    correlation_derivative,
    make_rng,
    mc_two_point,
    multipoint,
    sample_trajectory,
    two_point,
    validate_rate_matrix,
)
from corrbound.errors import (
    BadIntervalError,
    DimensionMismatchError,
    TimesNotSortedError,
    TooFewSamplesError,
)
from conftest import model_sweep


class TestTwoPoint:
    def test_decay_closed_form(self, decay_model):
        W, p0, S, T = decay_model
        assert two_point(W, p0, S, T, 0.0) == pytest.approx(1.0, abs=1e-14)
        assert two_point(W, p0, S, T, 1.0) == pytest.approx(
            2.0 * np.exp(-1.0) - 1.0, abs=1e-13
        )
        for t in np.linspace(0.0, 8.0, 33):
            assert two_point(W, p0, S, T, float(t)) == pytest.approx(
                2.0 * np.exp(-t) - 1.0, abs=1e-12
            )

    def test_zero_time_equal_time_product(self):
        for W, p0, S in model_sweep(10):
            expect = float(np.sum(S.s * S.s * p0.p))
            assert two_point(W, p0, S, S, 0.0) == pytest.approx(expect, abs=1e-14)

    def test_symmetric_stationary_closed_form(self, symmetric_model):
        W, pst, S, T = symmetric_model
        for t in (0.0, 0.5, 1.0, 3.0):
            assert two_point(W, pst, S, T, t) == pytest.approx(
                np.exp(-2.0 * t), abs=1e-13
            )

    def test_bounded_by_score_product(self):
        for W, p0, S in model_sweep(100):
            cap = S.max_abs * S.max_abs
            for t in np.arange(0.0, 10.01, 0.25):
                assert abs(two_point(W, p0, S, S, float(t))) <= cap + 1e-12

    def test_dimension_mismatch(self, decay_model):
        W, p0, S, T = decay_model
        with pytest.raises(DimensionMismatchError):
            two_point(W, p0, ScoreVector(np.ones(3)), T, 1.0)


class TestCorrelationDerivative:
    def test_decay_closed_form(self, decay_model):
        W, p0, S, T = decay_model
        for t in (0.0, 0.7, 2.0):
            assert correlation_derivative(W, p0, S, T, t) == pytest.approx(
                -2.0 * np.exp(-t), abs=1e-13
            )

    def test_frozen_process_zero(self, frozen_model):
        W, p0, S, T = frozen_model
        assert correlation_derivative(W, p0, S, T, 3.0) == 0.0

    def test_symmetric_closed_form(self, symmetric_model):
        W, pst, S, T = symmetric_model
        for t in (0.1, 1.0):
            assert correlation_derivative(W, pst, S, T, t) == pytest.approx(
                -2.0 * np.exp(-2.0 * t), abs=1e-13
            )

    def test_matches_finite_difference(self):
        h = 1e-5
        for W, p0, S in model_sweep(30):
            for t in (0.3, 1.2, 4.0):
                fd = (
                    two_point(W, p0, S, S, t + h) - two_point(W, p0, S, S, t - h)
                ) / (2.0 * h)
                assert correlation_derivative(W, p0, S, S, t) == pytest.approx(
                    fd, abs=1e-6
                )


class TestMultipoint:
    def test_two_point_reduction(self, decay_model):
        W, p0, S, T = decay_model
        for t in (0.0, 0.4, 1.0, 5.0):
            assert abs(
                multipoint(W, p0, [S, T], (0.0, t)) - two_point(W, p0, S, T, t)
            ) < 1e-12

    def test_two_point_reduction_random(self):
        for W, p0, S in model_sweep(25):
            for t in (0.5, 2.0):
                assert abs(
                    multipoint(W, p0, [S, S], (0.0, t)) - two_point(W, p0, S, S, t)
                ) < 1e-12

    def test_equal_times_product(self):
        for W, p0, S in model_sweep(5):
            expect = float(np.sum(S.s**3 * p0.p))
            got = multipoint(W, p0, [S, S, S], (0.0, 0.0, 0.0))
            assert got == pytest.approx(expect, abs=1e-14)

    def test_three_point_enumeration_oracle(self, symmetric_model):
        # independent oracle: explicit 8-term sum with closed-form
        # propagator entries of the symmetric two-state chain
        W, pst, S, _ = symmetric_model
        times = (0.0, 0.5, 1.0)

        def step(dt):
            e = np.exp(-2.0 * dt)
            return 0.5 * np.array([[1.0 + e, 1.0 - e], [1.0 - e, 1.0 + e]])

        m1, m2 = step(0.5), step(0.5)
        expect = 0.0
        for x0 in range(2):
            for x1 in range(2):
                for x2 in range(2):
                    expect += (
                        S.s[x0]
                        * S.s[x1]
                        * S.s[x2]
                        * pst.p[x0]
                        * m1[x1, x0]
                        * m2[x2, x1]
                    )
        got = multipoint(W, pst, [S, S, S], times)
        assert got == pytest.approx(expect, abs=1e-12)

    def test_single_point_is_mean(self, decay_model):
        W, p0, S, _ = decay_model
        assert multipoint(W, p0, [S], (0.0,)) == pytest.approx(
            float(np.dot(S.s, p0.p)), abs=1e-15
        )

    def test_unsorted_times_rejected(self, decay_model):
        W, p0, S, T = decay_model
        with pytest.raises(TimesNotSortedError):
            multipoint(W, p0, [S, T], (0.0, 1.0, 0.5))
        with pytest.raises(TimesNotSortedError):
            multipoint(W, p0, [S, T], (0.5, 1.0))
        with pytest.raises(TimesNotSortedError):
            multipoint(W, p0, [S, T, T], (0.0, 1.0))


class TestTrajectory:
    def test_invariants_enforced(self):
        with pytest.raises(BadIntervalError):
            Trajectory(0, ((0.5, 0), (0.4, 1)), 1.0)  # times not increasing
        with pytest.raises(BadIntervalError):
            Trajectory(0, ((0.5, 0),), 1.0)  # self-jump
        with pytest.raises(BadIntervalError):
            Trajectory(0, ((1.5, 1),), 1.0)  # beyond horizon

    def test_state_tracking(self):
        traj = Trajectory(0, ((0.25, 1), (0.75, 0)), 1.0)
        assert traj.state_at(0.1) == 0
        assert traj.state_at(0.5) == 1
        assert traj.state_at(0.9) == 0
        assert traj.final_state == 0
        assert traj.n_jumps == 2


class TestSampleTrajectory:
    def test_frozen_process_never_jumps(self, frozen_model):
        W, p0, _, _ = frozen_model
        rng = make_rng(3)
        for _ in range(50):
            assert sample_trajectory(W, p0, 5.0, rng).n_jumps == 0

    def test_seed_determinism(self, symmetric_model):
        W, pst, _, _ = symmetric_model
        a = sample_trajectory(W, pst, 4.0, make_rng(99))
        b = sample_trajectory(W, pst, 4.0, make_rng(99))
        assert a.initial_state == b.initial_state
        assert a.jumps == b.jumps

    def test_survival_fraction_matches_exponential(self, decay_model):
        # survival of the decaying state: P(no jump by t) = e^-t
        W, p0, _, _ = decay_model
        rng = make_rng(2024)
        t = 1.0
        n = 100_000
        none = sum(
            1 for _ in range(n) if sample_trajectory(W, p0, t, rng).n_jumps == 0
        )
        frac = none / n
        expect = np.exp(-t)
        se = np.sqrt(expect * (1.0 - expect) / n)
        assert abs(frac - expect) < 3.0 * se

    def test_jump_targets_follow_rates(self):
        # 3-state star: from state 0, rates 2:1 to states 1 and 2
        W = validate_rate_matrix([[0.0, 0, 0], [2.0, 0, 0], [1.0, 0, 0]])
        p0 = ProbVector(np.array([1.0, 0.0, 0.0]))
        rng = make_rng(77)
        hits = np.zeros(3)
        n = 20_000
        for _ in range(n):
            traj = sample_trajectory(W, p0, 50.0, rng)
            hits[traj.final_state] += 1
        assert hits[0] == 0
        frac = hits[1] / n
        se = np.sqrt((2 / 3) * (1 / 3) / n)
        assert abs(frac - 2.0 / 3.0) < 4.0 * se


class TestMcTwoPoint:
    def test_decay_model_consistent_with_exact(self, decay_model):
        W, p0, S, T = decay_model
        est, se = mc_two_point(W, p0, S, T, 1.0, 100_000, seed=15)
        exact = 2.0 * np.exp(-1.0) - 1.0
        assert se > 0.0
        assert abs(est - exact) < 3.0 * se

    def test_zero_time_matches_product(self):
        W, p0, S = model_sweep(1, seed=400)[0]
        est, se = mc_two_point(W, p0, S, S, 0.0, 50_000, seed=6)
        exact = float(np.sum(S.s * S.s * p0.p))
        assert abs(est - exact) < 3.0 * se + 1e-12

    def test_frozen_degenerate_start_exact_zero_error(self, decay_model):
        _, p0, S, T = decay_model
        W0 = validate_rate_matrix(np.zeros((2, 2)))
        est, se = mc_two_point(W0, p0, S, T, 2.0, 1_000, seed=1)
        assert est == S.s[1] * T.s[1]
        assert se == 0.0

    def test_frozen_process_error_from_score_variance_only(self, frozen_model):
        W, p0, S, T = frozen_model
        n = 10_000
        est, se = mc_two_point(W, p0, S, T, 5.0, n, seed=8)
        exact = float(np.sum(S.s * T.s * p0.p))
        var = float(np.sum((S.s * T.s) ** 2 * p0.p)) - exact**2
        assert se == pytest.approx(np.sqrt(var / n), rel=0.1)
        assert abs(est - exact) < 4.0 * np.sqrt(var / n)

    def test_determinism(self, symmetric_model):
        W, pst, S, T = symmetric_model
        assert mc_two_point(W, pst, S, T, 1.0, 2_000, seed=5) == mc_two_point(
            W, pst, S, T, 1.0, 2_000, seed=5
        )

    def test_too_few_samples(self, decay_model):
        W, p0, S, T = decay_model
        with pytest.raises(TooFewSamplesError):
            mc_two_point(W, p0, S, T, 1.0, 99, seed=0)

    def test_consistency_smoke_sweep(self):
        hits = 0
        cases = []
        for W, p0, S in model_sweep(6, seed=1_234):
            for t in (0.5, 2.0):
                cases.append((W, p0, S, t))
        for i, (W, p0, S, t) in enumerate(cases):
            exact = two_point(W, p0, S, S, t)
            est, se = mc_two_point(W, p0, S, S, t, 20_000, seed=9_000 + i)
            if abs(est - exact) < 4.0 * se:
                hits += 1
        assert hits >= len(cases) - 1
