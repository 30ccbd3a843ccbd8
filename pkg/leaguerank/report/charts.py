"""Static SVG charts of a league report.

Charts are drawn with matplotlib's object oriented API, without pyplot, so
no GUI backend is involved. Text is rendered as paths and the SVG ids are
salted with a fixed string, so the files are self-contained and identical
for identical reports.
"""

import logging

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from leaguerank.models import STAR_LEVELS, Band

logger = logging.getLogger(__name__)

#: Bar colours of 4* down to unclassified.
STAR_COLORS = ("#08306b", "#2171b5", "#6baed6", "#c6dbef", "#d9d9d9")

BAND_COLORS = {
    Band.TOP: "#1a9850",
    Band.BOTTOM: "#d73027",
    Band.UNCERTAIN: "#525252",
}

_SVG_RC = {
    "svg.hashsalt": "leaguerank",
    "svg.fonttype": "path",
    "font.family": "DejaVu Sans",
    "font.size": 8,
}


def _figure(n_groups):
    height = max(3.0, 0.28 * n_groups + 1.4)
    return Figure(figsize=(8.0, height))


def _label_groups(ax, league_report):
    positions = np.arange(len(league_report.groups))
    ax.set_yticks(positions)
    ax.set_yticklabels([g.group_id for g in league_report.groups])
    # Best group at the top.
    ax.set_ylim(len(positions) - 0.5, -0.5)
    return positions


def _save(fig, path):
    with matplotlib.rc_context(_SVG_RC):
        fig.savefig(path, format="svg", metadata={"Date": None})
    logger.debug("Wrote %s", path)


def write_profiles_chart(league_report, path):
    """Stacked horizontal bars of every group's quality profile.

    Groups are in league table order and each bar is annotated with the
    group's FTE staff count.
    """
    with matplotlib.rc_context(_SVG_RC):
        fig = _figure(len(league_report.groups))
        ax = fig.add_subplot()
        positions = _label_groups(ax, league_report)
        proportions = np.array(
            [g.profile.proportions for g in league_report.groups]
        )

        left = np.zeros(len(positions))
        for i, level in enumerate(STAR_LEVELS):
            ax.barh(
                positions,
                100 * proportions[:, i],
                left=left,
                height=0.7,
                color=STAR_COLORS[i],
                label=level.label,
            )
            left += 100 * proportions[:, i]

        for y, group in zip(positions, league_report.groups):
            ax.text(
                101,
                y,
                f"{group.fte_staff:g} FTE",
                va="center",
                ha="left",
            )
        ax.set_xlim(0, 112)
        ax.set_xlabel("Percentage of outputs")
        ax.set_title("Quality profiles, ordered by mean score")
        ax.legend(loc="lower center", bbox_to_anchor=(0.5, 1.06), ncol=5)
        fig.tight_layout()
    _save(fig, path)


def write_ranks_chart(league_report, path):
    """Median rank and rank interval of every group, coloured by band."""
    n = len(league_report.groups)
    with matplotlib.rc_context(_SVG_RC):
        fig = _figure(n)
        ax = fig.add_subplot()
        positions = _label_groups(ax, league_report)

        for y, ranks, band in zip(
            positions, league_report.ranks, league_report.bands
        ):
            ax.errorbar(
                x=[ranks.median],
                y=[y],
                xerr=[
                    [ranks.median - ranks.interval_low],
                    [ranks.interval_high - ranks.median],
                ],
                fmt="o",
                markersize=4,
                capsize=2,
                color=BAND_COLORS[band.band],
            )
        ax.axvline(n / 2 + 0.5, color="#969696", linestyle="--", linewidth=1)
        ax.set_xlim(0.5, n + 0.5)
        ax.set_xlabel(
            f"Rank (1 is best), median and {_percent(league_report)} interval"
        )
        ax.set_title(
            f"Simulated ranks, {league_report.config.model.value} model"
        )
        fig.tight_layout()
    _save(fig, path)


def write_scores_chart(league_report, path):
    """Weighted score and interval of every group and the overall mean."""
    with matplotlib.rc_context(_SVG_RC):
        fig = _figure(len(league_report.groups))
        ax = fig.add_subplot()
        positions = _label_groups(ax, league_report)

        estimates = np.array([e.estimate for e in league_report.estimates])
        low = np.array([e.interval_low for e in league_report.estimates])
        high = np.array([e.interval_high for e in league_report.estimates])
        ax.errorbar(
            x=estimates,
            y=positions,
            xerr=[estimates - low, high - estimates],
            fmt="o",
            markersize=4,
            capsize=2,
            color="#08306b",
        )
        ax.axvline(
            league_report.overlaps.overall_mean,
            color="#d73027",
            linewidth=1,
            label="overall mean",
        )
        ax.set_xlabel(
            f"{league_report.config.weights.name} score and "
            f"{_percent(league_report)} interval"
        )
        ax.set_title("Weighted scores")
        ax.legend(loc="lower right")
        fig.tight_layout()
    _save(fig, path)


def _percent(league_report):
    return f"{league_report.config.level * 100:g}%"
