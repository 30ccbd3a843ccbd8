"""Monte Carlo rank distributions under the single-output and true-score
models.

Both models rank the groups once per iteration, 1 being best, and
summarize each group's ranks as a :class:`~leaguerank.models.RankDistribution`.
Iterations are processed in shards of ``config.shard_size``; with more than
one worker the shards run on :class:`~leaguerank.simulation.actor.ShardWorker`
actors. The random streams are keyed per group and iteration, so the output
is identical for any shard size and worker count.
"""

import functools
import logging

import numpy as np
from scipy import special

from leaguerank import exceptions
from leaguerank.internal import timer, validation
from leaguerank.models import (
    STAR_LEVELS,
    GroupSubmission,
    Model,
    SimulationConfig,
    TiePolicy,
)
from leaguerank.profile import weighted_score
from leaguerank.simulation import actor, streams
from leaguerank.simulation.oracle import exact_single_output_rank_distribution
from leaguerank.simulation.ranking import (
    check_rank_sums,
    column_histograms,
    empirical_quantile,
    merge_histograms,
    rank_rows,
    rank_with_ties,
    summarize_histogram,
)
from leaguerank.uncertainty import standard_error

__all__ = [
    "draw_single_outputs",
    "draw_true_scores",
    "empirical_quantile",
    "exact_single_output_rank_distribution",
    "median_rank_discordance",
    "merge_histograms",
    "rank_with_ties",
    "simulate_ranks",
    "simulate_single_output_ranks",
    "simulate_true_score_ranks",
    "summarize_histogram",
]

logger = logging.getLogger(__name__)

_STAR_VALUES = np.array([int(level) for level in STAR_LEVELS])

# Keeps ndtri finite when a stream yields exactly 0.0.
_SMALLEST_UNIFORM = np.nextafter(0.0, 1.0)


def _check_groups(groups):
    groups = list(groups)
    validation.check_instances(groups, GroupSubmission)
    if len(groups) < 2:
        raise exceptions.SimulationError(
            f"Ranking needs at least 2 groups, got {len(groups)}"
        )
    return groups


def draw_single_outputs(groups, seed, start, stop):
    """Star value of one random output per group and iteration.

    Each group draws a star level from its own profile, all five levels
    included, by inverting the cumulative profile at the stream's uniform.

    :rtype: integer array shaped ``(stop - start, len(groups))``
    """
    proportions = np.array([g.profile.proportions for g in groups])
    cumulative = np.cumsum(proportions, axis=1)
    # Guards against a cumulative sum that falls just short of one.
    last_possible = np.array(
        [np.flatnonzero(p > 0)[-1] for p in proportions]
    )
    u = streams.uniform_matrix(seed, len(groups), start, stop)

    levels = np.empty(u.shape, dtype=int)
    for g in range(len(groups)):
        index = np.searchsorted(cumulative[g], u[:, g], side="right")
        levels[:, g] = np.minimum(index, last_possible[g])
    return _STAR_VALUES[levels]


def draw_true_scores(groups, weights, seed, start, stop):
    """Normal draws around each group's weighted score.

    Uses the inverse normal CDF of the stream's uniform, scaled by the
    group's standard error.

    :rtype: float array shaped ``(stop - start, len(groups))``
    """
    estimates, errors = _score_moments(groups, weights)
    u = streams.uniform_matrix(seed, len(groups), start, stop)
    z = special.ndtri(np.maximum(u, _SMALLEST_UNIFORM))
    return estimates + errors * z


def _score_moments(groups, weights):
    estimates = np.array([weighted_score(g.profile, weights) for g in groups])
    errors = np.array(
        [standard_error(g.profile, weights, g.fte_staff) for g in groups]
    )
    return estimates, errors


def _rank_shard(draw, tie_policy, start, stop):
    ranks = rank_rows(draw(start, stop), tie_policy)
    if tie_policy is TiePolicy.MIDRANK:
        check_rank_sums(ranks)
    return column_histograms(ranks)


def _shards(config):
    return [
        (start, min(start + config.shard_size, config.iterations))
        for start in range(0, config.iterations, config.shard_size)
    ]


def _simulate(groups, draw, config, label):
    task = functools.partial(_rank_shard, draw, config.tie_policy)
    shards = _shards(config)
    logger.info(
        "Simulating %s ranks of %d groups: %d iterations in %d shard(s)",
        label,
        len(groups),
        config.iterations,
        len(shards),
    )

    with timer.time_logger(f"{label} simulation", level=logging.DEBUG):
        if config.workers > 1 and len(shards) > 1:
            results = actor.run_sharded(task, shards, config.workers)
        else:
            results = [task(start, stop) for start, stop in shards]

    histograms = functools.reduce(merge_histograms, results)
    return [
        summarize_histogram(g.group_id, h, config.level)
        for g, h in zip(groups, histograms)
    ]


def simulate_single_output_ranks(groups, config=None):
    """Rank distribution of a random future output of each group.

    Per iteration every group draws one star level from its profile and the
    groups are ranked on the drawn star value. ``config.model`` is not
    consulted; see :func:`simulate_ranks`.

    :param groups: at least two submissions
    :type groups: list of :class:`~leaguerank.models.GroupSubmission`
    :param config: iterations, seed, tie policy, level and parallelism
    :type config: :class:`~leaguerank.models.SimulationConfig`
    :rtype: list of :class:`~leaguerank.models.RankDistribution`
    """
    groups = _check_groups(groups)
    config = config or SimulationConfig(model=Model.SINGLE_OUTPUT)
    draw = functools.partial(draw_single_outputs, groups, config.seed)
    return _simulate(groups, draw, config, "single-output")


def simulate_true_score_ranks(groups, weights, config=None):
    """Rank distribution of each group's underlying weighted score.

    Per iteration every group draws a score from a normal distribution with
    its weighted score as mean and its standard error as spread, and the
    groups are ranked on the drawn scores.

    :rtype: list of :class:`~leaguerank.models.RankDistribution`
    """
    groups = _check_groups(groups)
    config = config or SimulationConfig(model=Model.TRUE_SCORE)
    draw = functools.partial(draw_true_scores, groups, weights, config.seed)
    return _simulate(groups, draw, config, "true-score")


def simulate_ranks(groups, weights, config):
    """Run the model selected by ``config.model``."""
    if config.model is Model.SINGLE_OUTPUT:
        return simulate_single_output_ranks(groups, config)
    return simulate_true_score_ranks(groups, weights, config)


def median_rank_discordance(league, distributions):
    """Groups whose median rank differs from their league table position.

    :param league: groups in league table order
    :param distributions: rank distributions keyed by group id
    :type distributions: dict
    :rtype: int
    """
    return sum(
        1
        for position, group in enumerate(league, start=1)
        if distributions[group.group_id].median != position
    )
