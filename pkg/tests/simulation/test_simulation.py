import unittest
from unittest import mock

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from leaguerank import exceptions, profile, simulation, uncertainty
from leaguerank.models import FUNDING, MEAN, Model, SimulationConfig, TiePolicy
from tests import make_group
from tests.strategies import groups

HALF = [0.5, 0, 0, 0, 0.5]


def total_variation(a, b):
    ranks = set(a.ranks) | set(b.ranks)
    return 0.5 * sum(abs(a.probability(r) - b.probability(r)) for r in ranks)


def config(**kwargs):
    kwargs.setdefault("iterations", 10000)
    return SimulationConfig(**kwargs)


class SingleOutputTest(unittest.TestCase):
    def test_deterministic_pair(self):
        a = make_group("A", [1, 0, 0, 0, 0])
        b = make_group("B", [0, 1, 0, 0, 0])

        dist_a, dist_b = simulation.simulate_single_output_ranks(
            [a, b], config()
        )

        assert dist_a.histogram == {1.0: 10000}
        assert dist_b.histogram == {2.0: 10000}

    def test_counts_sum_to_iterations(self):
        gs = [make_group(name, [0.2] * 5) for name in "ABC"]

        for dist in simulation.simulate_single_output_ranks(
            gs, config(iterations=1234, shard_size=500)
        ):
            assert dist.total == 1234
            assert 1 <= dist.interval_low <= dist.median
            assert dist.median <= dist.interval_high <= 3

    def test_matches_enumerated_examples(self):
        cases = [
            [make_group("A", [1, 0, 0, 0, 0]), make_group("B", [0, 1, 0, 0, 0])],
            [make_group("A", HALF), make_group("B", [0, 1, 0, 0, 0])],
            [make_group("A", HALF), make_group("B", HALF)],
        ]
        for gs in cases:
            exact = simulation.exact_single_output_rank_distribution(gs)
            simulated = simulation.simulate_single_output_ranks(gs, config())
            for e, s in zip(exact, simulated):
                assert total_variation(e, s) < 0.02

    def test_minrank_policy(self):
        gs = [make_group("A", HALF), make_group("B", HALF)]

        dist_a, _ = simulation.simulate_single_output_ranks(
            gs, config(tie_policy=TiePolicy.MINRANK)
        )

        assert set(dist_a.ranks) == {1.0, 2.0}
        assert dist_a.probability(1) == pytest.approx(0.75, abs=0.02)

    def test_unclassified_outputs_are_drawn(self):
        a = make_group("A", [0, 0, 0, 0, 1])
        b = make_group("B", [0, 0, 0, 1, 0])

        dist_a, _ = simulation.simulate_single_output_ranks([a, b], config())

        assert dist_a.histogram == {2.0: 10000}

    def test_default_config(self):
        gs = [make_group("A", [1, 0, 0, 0, 0]), make_group("B", HALF)]

        dists = simulation.simulate_single_output_ranks(gs)

        assert dists[0].total == SimulationConfig().iterations

    def test_needs_two_groups(self):
        with pytest.raises(exceptions.SimulationError):
            simulation.simulate_single_output_ranks(
                [make_group("A", HALF)], config()
            )

    def test_draws_of_degenerate_profiles(self):
        gs = [
            make_group("A", [1, 0, 0, 0, 0]),
            make_group("B", [0, 0, 0, 0, 1]),
        ]

        draws = simulation.draw_single_outputs(gs, 3, 0, 50)

        assert draws.shape == (50, 2)
        assert (draws[:, 0] == 4).all()
        assert (draws[:, 1] == 0).all()

    def test_draws_do_not_depend_on_slicing(self):
        gs = [make_group("A", HALF), make_group("B", [0.2] * 5)]

        whole = simulation.draw_single_outputs(gs, 11, 0, 100)
        parts = np.vstack(
            [
                simulation.draw_single_outputs(gs, 11, 0, 37),
                simulation.draw_single_outputs(gs, 11, 37, 100),
            ]
        )

        np.testing.assert_array_equal(whole, parts)

    def test_draw_frequencies_follow_profile(self):
        gs = [make_group("A", HALF), make_group("B", [0, 0, 1, 0, 0])]

        draws = simulation.draw_single_outputs(gs, 5, 0, 20000)

        assert set(np.unique(draws[:, 0])) == {0, 4}
        assert np.mean(draws[:, 0] == 4) == pytest.approx(0.5, abs=0.02)
        assert (draws[:, 1] == 2).all()


@settings(
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
@given(groups(min_size=2, max_size=4), st.integers(0, 2**64 - 1))
def test_single_output_matches_enumeration(gs, seed):
    exact = simulation.exact_single_output_rank_distribution(gs)
    simulated = simulation.simulate_single_output_ranks(
        gs, config(iterations=200000, seed=seed, shard_size=50000)
    )

    for e, s in zip(exact, simulated):
        assert total_variation(e, s) < 0.01


class TrueScoreTest(unittest.TestCase):
    def test_zero_variance_pair(self):
        a = make_group("A", [1, 0, 0, 0, 0])
        b = make_group("B", [0, 0, 0, 1, 0])

        dist_a, dist_b = simulation.simulate_true_score_ranks(
            [a, b], FUNDING, config()
        )

        assert dist_a.histogram == {1.0: 10000}
        assert dist_b.histogram == {2.0: 10000}

    def test_exchangeable_pair(self):
        a = make_group("A", [0.2] * 5)
        b = make_group("B", [0.2] * 5)

        dist_a, dist_b = simulation.simulate_true_score_ranks(
            [a, b], FUNDING, config()
        )

        assert dist_a.probability(1) == pytest.approx(0.5, abs=0.02)
        assert dist_b.probability(2) == pytest.approx(0.5, abs=0.02)

    def test_well_separated_scores_never_swap(self):
        a = make_group("A", [0.2] * 5)
        b = make_group("B", [0.2] * 5)
        moments = (np.array([3.0, 2.0]), np.array([0.1, 0.1]))

        with mock.patch.object(
            simulation, "_score_moments", return_value=moments
        ):
            dist_a, dist_b = simulation.simulate_true_score_ranks(
                [a, b], FUNDING, config()
            )

        assert dist_a.histogram == {1.0: 10000}
        assert dist_b.histogram == {2.0: 10000}

    def test_empirical_mean_is_close_to_estimate(self):
        rng = np.random.default_rng(20081218)
        gs = [
            make_group(
                f"G{i}",
                rng.dirichlet(np.ones(5)),
                fte_staff=float(rng.uniform(1, 50)),
            )
            for i in range(10)
        ]
        n = 100000

        draws = simulation.draw_true_scores(gs, FUNDING, 7, 0, n)

        violations = 0
        for g, column in zip(gs, draws.T):
            estimate = profile.weighted_score(g.profile, FUNDING)
            se = uncertainty.standard_error(g.profile, FUNDING, g.fte_staff)
            if abs(column.mean() - estimate) >= 4 * se / np.sqrt(n):
                violations += 1
        assert violations <= 1

    def test_needs_two_groups(self):
        with pytest.raises(exceptions.SimulationError):
            simulation.simulate_true_score_ranks([], FUNDING, config())


@settings(max_examples=10, deadline=None)
@given(
    groups(min_size=2, max_size=6),
    st.floats(0.1, 10),
    st.floats(-5, 5),
)
def test_true_score_ranks_ignore_positive_affine_weights(gs, scale, shift):
    plain = simulation.simulate_true_score_ranks(
        gs, MEAN, config(iterations=2000)
    )
    transformed = simulation.simulate_true_score_ranks(
        gs, MEAN.affine(scale, shift), config(iterations=2000)
    )

    for a, b in zip(plain, transformed):
        assert total_variation(a, b) < 0.01


class DeterminismTest(unittest.TestCase):
    def setUp(self):  # noqa: N802
        self.groups = [
            make_group("A", [0.25, 0.4, 0.3, 0.05, 0], fte_staff=35),
            make_group("B", [0.2, 0.45, 0.3, 0.05, 0], fte_staff=28.5),
            make_group("C", [0.1, 0.4, 0.4, 0.1, 0], fte_staff=12),
            make_group("D", [0.05, 0.35, 0.45, 0.15, 0], fte_staff=8),
        ]

    def test_same_seed_same_result(self):
        first = simulation.simulate_true_score_ranks(
            self.groups, FUNDING, config(seed=99)
        )
        second = simulation.simulate_true_score_ranks(
            self.groups, FUNDING, config(seed=99)
        )

        assert first == second

    def test_result_does_not_depend_on_shards_or_workers(self):
        expected = simulation.simulate_single_output_ranks(
            self.groups, config(seed=3)
        )

        for workers, shard_size in [(1, 999), (2, 1000), (3, 777)]:
            result = simulation.simulate_single_output_ranks(
                self.groups,
                config(seed=3, workers=workers, shard_size=shard_size),
            )
            assert result == expected

    def test_different_seeds_differ(self):
        a = simulation.simulate_true_score_ranks(
            self.groups, FUNDING, config(seed=1)
        )
        b = simulation.simulate_true_score_ranks(
            self.groups, FUNDING, config(seed=2)
        )

        assert a != b


class SimulateRanksTest(unittest.TestCase):
    def test_dispatches_on_model(self):
        gs = [make_group("A", HALF), make_group("B", HALF)]
        single = config(model=Model.SINGLE_OUTPUT)
        true_score = config(model=Model.TRUE_SCORE)

        with mock.patch.object(
            simulation, "simulate_single_output_ranks"
        ) as single_mock, mock.patch.object(
            simulation, "simulate_true_score_ranks"
        ) as true_score_mock:
            simulation.simulate_ranks(gs, FUNDING, single)
            simulation.simulate_ranks(gs, FUNDING, true_score)

        single_mock.assert_called_once_with(gs, single)
        true_score_mock.assert_called_once_with(gs, FUNDING, true_score)

    def test_median_rank_discordance(self):
        gs = [make_group("A", HALF), make_group("B", HALF)]

        dists = simulation.simulate_single_output_ranks(gs, config())
        by_id = {d.group_id: d for d in dists}

        # Both medians are 1.5, so neither matches positions 1 and 2.
        assert simulation.median_rank_discordance(gs, by_id) == 2
