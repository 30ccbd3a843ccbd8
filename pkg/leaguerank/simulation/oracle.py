"""Exact rank distributions of the single-output model by enumeration.

Serves as a reference for the Monte Carlo simulation on small instances.
"""

import logging

import numpy as np

from leaguerank import exceptions
from leaguerank.internal import validation
from leaguerank.models import STAR_LEVELS, GroupSubmission, TiePolicy
from leaguerank.simulation.ranking import (
    column_histograms,
    rank_rows,
    summarize_histogram,
)

logger = logging.getLogger(__name__)

#: Largest instance enumerated, ``5 ** 8 = 390625`` joint outcomes.
MAX_GROUPS = 8

_STAR_VALUES = np.array([int(level) for level in STAR_LEVELS])


def exact_single_output_rank_distribution(
    groups, tie_policy=TiePolicy.MIDRANK, level=0.95
):
    """Enumerate every joint star-level outcome of the groups.

    Each outcome is weighted by the product of the groups' profile
    probabilities; only levels with positive probability are visited. The
    returned histograms hold probabilities summing to one.

    :param groups: between 2 and :data:`MAX_GROUPS` submissions
    :type groups: list of :class:`~leaguerank.models.GroupSubmission`
    :rtype: list of :class:`~leaguerank.models.RankDistribution`
    """
    groups = list(groups)
    validation.check_instances(groups, GroupSubmission)
    if not 2 <= len(groups) <= MAX_GROUPS:
        raise exceptions.SimulationError(
            f"Exact enumeration needs 2 to {MAX_GROUPS} groups, "
            f"got {len(groups)}"
        )

    proportions = np.array([g.profile.proportions for g in groups])
    supports = [np.flatnonzero(p > 0) for p in proportions]
    grids = np.meshgrid(*supports, indexing="ij")
    outcomes = np.stack([grid.ravel() for grid in grids], axis=1)
    logger.debug(
        "Enumerating %d joint outcomes of %d groups", len(outcomes), len(groups)
    )

    probabilities = np.prod(
        proportions[np.arange(len(groups)), outcomes], axis=1
    )
    probabilities = probabilities / probabilities.sum()

    ranks = rank_rows(_STAR_VALUES[outcomes], TiePolicy(tie_policy))
    histograms = column_histograms(ranks, weights=probabilities)
    return [
        summarize_histogram(g.group_id, h, level)
        for g, h in zip(groups, histograms)
    ]
