"""Tie-aware ranking and histogram summaries of simulated ranks."""

import collections
import logging

import numpy as np
from scipy import stats

from leaguerank import exceptions
from leaguerank.models import RankDistribution, TiePolicy

logger = logging.getLogger(__name__)

_RANK_METHODS = {TiePolicy.MIDRANK: "average", TiePolicy.MINRANK: "min"}

# Slack on cumulative weights when locating quantiles, relative to the total.
_QUANTILE_SLACK = 1e-9


def rank_with_ties(scores, policy=TiePolicy.MIDRANK):
    """Rank scores with 1 for the highest.

    ``midrank`` gives tied scores the average of the ranks they span,
    ``minrank`` the smallest of them.

    :param scores: scores to rank
    :type scores: list of float
    :rtype: list of float
    """
    scores = np.asarray(scores, dtype=float)
    if scores.ndim != 1 or scores.size == 0:
        raise exceptions.ValidationError("Expected a non-empty list of scores")
    return [float(r) for r in rank_rows(scores[np.newaxis, :], policy)[0]]


def rank_rows(scores, policy=TiePolicy.MIDRANK):
    """Rank every row of a ``(iterations, groups)`` score matrix."""
    method = _RANK_METHODS[TiePolicy(policy)]
    return stats.rankdata(-scores, method=method, axis=1)


def check_rank_sums(ranks):
    """Midranks of ``n`` groups always sum to ``n * (n + 1) / 2``.

    Every row is checked unless Python runs optimized, then only the first.
    """
    n = ranks.shape[1]
    rows = ranks if __debug__ else ranks[:1]
    bad = np.flatnonzero(rows.sum(axis=1) != n * (n + 1) / 2)
    if bad.size:
        raise exceptions.SimulationError(
            f"Rank sum check failed for {bad.size} iteration(s), "
            f"first at row {bad[0]}"
        )


def column_histograms(ranks, weights=None):
    """One ``{rank: weight}`` counter per column of a rank matrix.

    Without ``weights`` each row counts once.
    """
    histograms = []
    for column in ranks.T:
        values, inverse = np.unique(column, return_inverse=True)
        totals = np.bincount(inverse, weights=weights)
        if weights is None:
            totals = totals.astype(int)
        histograms.append(
            collections.Counter(
                {float(v): t.item() for v, t in zip(values, totals)}
            )
        )
    return histograms


def merge_histograms(a, b):
    """Merge two lists of per-group histograms. Associative."""
    if len(a) != len(b):
        raise exceptions.SimulationError(
            "Cannot merge histograms of unequal size"
        )
    return [x + y for x, y in zip(a, b)]


def empirical_quantile(histogram, q):
    """Inverse-CDF quantile of a weighted histogram.

    For ``m`` equally weighted sorted samples this is sample number
    ``ceil(q * m)``.
    """
    items = sorted(histogram.items())
    total = sum(w for _, w in items)
    threshold = q * total - _QUANTILE_SLACK * total
    cumulative = 0
    for rank, weight in items:
        cumulative += weight
        if cumulative >= threshold and cumulative > 0:
            return rank
    return items[-1][0]


def summarize_histogram(group_id, histogram, level=0.95):
    """Build a :class:`~leaguerank.models.RankDistribution`.

    The median and the central ``level`` interval are empirical quantiles.
    """
    items = sorted((r, w) for r, w in histogram.items() if w > 0)
    if not items:
        raise exceptions.SimulationError(f"Empty rank histogram for {group_id}")
    tail = (1 - level) / 2
    return RankDistribution(
        group_id=group_id,
        ranks=[r for r, _ in items],
        weights=[w for _, w in items],
        total=sum(w for _, w in items),
        median=empirical_quantile(histogram, 0.5),
        interval_low=empirical_quantile(histogram, tail),
        interval_high=empirical_quantile(histogram, 1 - tail),
        level=level,
    )
