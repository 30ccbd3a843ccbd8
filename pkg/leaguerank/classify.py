"""Three-way allocation of groups from their rank intervals."""

import collections
import logging

from leaguerank import exceptions
from leaguerank.internal import validation
from leaguerank.models import Band, BandAssignment, RankDistribution

logger = logging.getLogger(__name__)


def band_for_interval(low, high, n_groups):
    """Band of a single rank interval among ``n_groups`` groups.

    The top half is ranks ``[1, N/2]``. For odd ``N`` the middle rank
    ``(N+1)/2`` belongs to neither half, so an interval reaching it is
    uncertain. Half-integer midranks are compared without rounding.
    """
    half = n_groups / 2
    if high <= half:
        return Band.TOP
    bottom_from = half if n_groups % 2 == 0 else (n_groups + 1) / 2
    if low > bottom_from:
        return Band.BOTTOM
    return Band.UNCERTAIN


def classify_by_rank_interval(rank_dists, n_groups):
    """Allocate every group to the top half, the bottom half, or neither.

    :param rank_dists: one rank distribution per group
    :type rank_dists: list of :class:`~leaguerank.models.RankDistribution`
    :param n_groups: number of ranked groups
    :type n_groups: int
    :returns: the assignments in input order and the number of groups not
        left uncertain
    :rtype: (list of :class:`~leaguerank.models.BandAssignment`, int)
    """
    rank_dists = list(rank_dists)
    validation.check_instances(rank_dists, RankDistribution)
    validation.check_integer(n_groups, min=2)
    if len(rank_dists) != n_groups:
        raise exceptions.ValidationError(
            f"Expected {n_groups} rank distributions, got {len(rank_dists)}"
        )

    assignments = [
        BandAssignment(
            group_id=dist.group_id,
            band=band_for_interval(
                dist.interval_low, dist.interval_high, n_groups
            ),
            rank_low=dist.interval_low,
            rank_high=dist.interval_high,
        )
        for dist in rank_dists
    ]
    decided = sum(1 for a in assignments if a.band is not Band.UNCERTAIN)
    logger.debug("%d of %d groups lie in one half", decided, n_groups)
    return assignments, decided


def tally_bands(assignments):
    """Number of groups in each band, every band present."""
    counts = collections.Counter(a.band for a in assignments)
    return {band: counts[band] for band in Band}
