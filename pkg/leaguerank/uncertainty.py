"""Standard errors, normal intervals and the overall-mean overlap check."""

import logging
import math

from scipy import special

from leaguerank import exceptions
from leaguerank.internal import validation
from leaguerank.models import (
    BaselineMode,
    GroupSubmission,
    OverlapSummary,
    ScoreEstimate,
)
from leaguerank.profile import pooled_profile, score_variance, weighted_score

logger = logging.getLogger(__name__)

#: Each staff member contributes 4 outputs which make up 70% of a profile,
#: giving roughly 6 outputs' worth of information per FTE.
OUTPUTS_PER_FTE = 6


def effective_sample_size(fte_staff):
    """Effective number of outputs behind a profile, ``6 * fte_staff``."""
    validation.check_positive(
        fte_staff, msg="Expected a positive FTE staff count, not {arg!r}"
    )
    return OUTPUTS_PER_FTE * fte_staff


def standard_error(profile, weights, fte_staff):
    """Standard error of the weighted score of a group.

    The variance of one output's weight divided by the effective sample
    size, under a normal approximation.
    """
    n = effective_sample_size(fte_staff)
    return math.sqrt(score_variance(profile, weights) / n)


def normal_quantile(level):
    """Two-sided standard normal quantile, 1.959964 for ``level=0.95``."""
    validation.check_level(level)
    return float(special.ndtri((1 + level) / 2))


def confidence_interval(estimate, std_error, level=0.95, effective_n=None):
    """Normal-theory interval ``estimate +- z(level) * std_error``.

    :rtype: :class:`~leaguerank.models.ScoreEstimate`
    """
    validation.check_finite(estimate)
    validation.check_finite(std_error)
    if std_error < 0:
        raise exceptions.ValidationError(
            f"Expected a non-negative standard error, not {std_error!r}"
        )
    half_width = normal_quantile(level) * std_error
    return ScoreEstimate(
        estimate=estimate,
        std_error=std_error,
        effective_n=effective_n,
        interval_low=estimate - half_width,
        interval_high=estimate + half_width,
        level=level,
    )


def estimate_score(group, weights, level=0.95):
    """Point estimate and interval of one group's weighted score."""
    return confidence_interval(
        weighted_score(group.profile, weights),
        standard_error(group.profile, weights, group.fte_staff),
        level=level,
        effective_n=effective_sample_size(group.fte_staff),
    )


def overall_mean(groups, weights, baseline=BaselineMode.FTE_WEIGHTED):
    """The baseline score for all groups together.

    ``fte-weighted`` scores the pooled profile, i.e. the expected weight of
    an output drawn from the whole unit; ``unweighted`` averages the group
    scores.
    """
    baseline = BaselineMode(baseline)
    if baseline is BaselineMode.FTE_WEIGHTED:
        return weighted_score(pooled_profile(groups), weights)
    return math.fsum(weighted_score(g.profile, weights) for g in groups) / len(
        groups
    )


def count_overall_mean_overlaps(
    groups, weights, level=0.95, baseline=BaselineMode.FTE_WEIGHTED
):
    """Flag the groups whose score interval contains the overall mean.

    Intervals are closed, so touching the baseline counts as overlap.

    :rtype: :class:`~leaguerank.models.OverlapSummary`
    """
    groups = list(groups)
    if not groups:
        raise exceptions.ProfileError("Cannot compare zero groups")
    validation.check_instances(groups, GroupSubmission)

    baseline = BaselineMode(baseline)
    mean = overall_mean(groups, weights, baseline)
    overlaps = tuple(
        estimate_score(g, weights, level).contains(mean) for g in groups
    )
    logger.debug(
        "%d of %d intervals overlap the %s overall mean %.6g",
        sum(overlaps),
        len(groups),
        baseline.value,
        mean,
    )
    return OverlapSummary(
        overall_mean=mean, overlaps=overlaps, baseline=baseline
    )
