"""Deterministic scoring arithmetic on quality profiles."""

import logging
import math

import numpy as np

from leaguerank import exceptions
from leaguerank.internal import validation
from leaguerank.models import MEAN, GroupSubmission, QualityProfile

logger = logging.getLogger(__name__)


def weighted_score(profile, weights):
    """Expected weight of one output drawn from ``profile``.

    With the funding scheme this is ``7*p4 + 3*p3 + p2``.

    :param profile: the profile to score
    :type profile: :class:`~leaguerank.models.QualityProfile`
    :param weights: weight per star level
    :type weights: :class:`~leaguerank.models.WeightScheme`
    :rtype: float
    """
    return math.fsum(
        w * p for w, p in zip(weights.weights, profile.proportions)
    )


def mean_score(profile):
    """Average number of stars, in the range [0, 4]."""
    return weighted_score(profile, MEAN)


def score_variance(profile, weights):
    """Variance of the weight of one output drawn from ``profile``.

    Population variance, without any n/(n-1) correction. It is computed as
    the sum of squared deviations so that it is exactly zero for profiles
    whose mass sits on equally weighted levels.
    """
    mean = weighted_score(profile, weights)
    return math.fsum(
        p * (w - mean) ** 2
        for w, p in zip(weights.weights, profile.proportions)
    )


def pooled_profile(groups):
    """FTE-weighted average of the groups' profiles.

    :param groups: the submissions to pool
    :type groups: list of :class:`~leaguerank.models.GroupSubmission`
    :rtype: :class:`~leaguerank.models.QualityProfile`
    """
    groups = list(groups)
    if not groups:
        raise exceptions.ProfileError("Cannot pool profiles of zero groups")
    validation.check_instances(groups, GroupSubmission)
    if all(g.profile == groups[0].profile for g in groups):
        return groups[0].profile

    proportions = np.array([g.profile.proportions for g in groups])
    fte = np.array([g.fte_staff for g in groups])
    pooled = np.average(proportions, axis=0, weights=fte)
    # Absorb rounding so the pooled profile sums to one.
    return QualityProfile(proportions=pooled / pooled.sum())


def league_table(groups):
    """Groups ordered by descending mean score, ties by institution."""
    return sorted(
        groups, key=lambda g: (-mean_score(g.profile), g.institution, g.unit)
    )
