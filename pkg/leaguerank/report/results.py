"""The ``results.csv`` table and the ``summary.txt`` counts."""

import csv

from leaguerank import classify, profile
from leaguerank.models import Band

COLUMNS = (
    "institution",
    "unit",
    "fte",
    "mean_score",
    "weighted_score",
    "std_error",
    "score_low",
    "score_high",
    "rank_median",
    "rank_low",
    "rank_high",
    "band",
    "overlaps_overall_mean",
)


def format_number(value):
    """Six significant digits, the same on every platform.

    ``format`` with ``g`` is correctly rounded everywhere; only a negative
    zero needs normalizing.
    """
    text = f"{value:.6g}"
    if text == "-0":
        return "0"
    return text


def result_rows(league_report):
    """Yield one dict per group, keyed by :data:`COLUMNS`."""
    overlaps = league_report.overlaps.overlaps
    for group, estimate, ranks, band, overlap in zip(
        league_report.groups,
        league_report.estimates,
        league_report.ranks,
        league_report.bands,
        overlaps,
    ):
        yield {
            "institution": group.institution,
            "unit": group.unit,
            "fte": format_number(group.fte_staff),
            "mean_score": format_number(profile.mean_score(group.profile)),
            "weighted_score": format_number(estimate.estimate),
            "std_error": format_number(estimate.std_error),
            "score_low": format_number(estimate.interval_low),
            "score_high": format_number(estimate.interval_high),
            "rank_median": format_number(ranks.median),
            "rank_low": format_number(ranks.interval_low),
            "rank_high": format_number(ranks.interval_high),
            "band": band.band.value,
            "overlaps_overall_mean": "true" if overlap else "false",
        }


def write_results(league_report, fp):
    """Write the per-group table in league table order."""
    writer = csv.DictWriter(fp, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(result_rows(league_report))


def summary_lines(league_report):
    config = league_report.config
    n = len(league_report.groups)
    tally = classify.tally_bands(league_report.bands)
    weights = ",".join(format_number(w) for w in config.weights.weights)

    yield f"groups: {n}"
    yield f"weights: {config.weights.name} ({weights})"
    yield f"model: {config.model.value}"
    yield f"iterations: {config.iterations}"
    yield f"seed: {config.seed}"
    yield f"tie policy: {config.tie_policy.value}"
    yield f"level: {format_number(config.level)}"
    yield f"baseline: {league_report.overlaps.baseline.value}"
    yield f"overall mean: {format_number(league_report.overlaps.overall_mean)}"
    yield f"overlapping overall mean: {league_report.overlaps.count} of {n}"
    yield f"top: {tally[Band.TOP]}"
    yield f"bottom: {tally[Band.BOTTOM]}"
    yield f"uncertain: {tally[Band.UNCERTAIN]}"
    yield f"top or bottom: {league_report.decided} of {n}"
    yield (
        f"median rank differs from league position: "
        f"{league_report.discordant} of {n}"
    )
    if league_report.ingest is not None:
        ingest_report = league_report.ingest
        yield f"rows accepted: {ingest_report.accepted}"
        yield f"rows rejected: {ingest_report.rejected}"
        yield f"warnings: {len(ingest_report.warnings)}"


def write_summary(league_report, fp):
    for line in summary_lines(league_report):
        fp.write(line + "\n")
