"""Run the whole pipeline on one league table and write the report files.

The files written to the output directory are ``results.csv``,
``profiles.svg``, ``ranks.svg``, ``scores.svg`` and ``summary.txt``.
"""

import logging

from leaguerank import (
    classify,
    exceptions,
    ingest,
    profile,
    simulation,
    uncertainty,
)
from leaguerank.internal import path, timer
from leaguerank.models import LeagueReport, RunConfig
from leaguerank.report import charts, results

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT_NOT_FOUND = 3
EXIT_PARSE_ERROR = 4
EXIT_TOO_FEW_GROUPS = 5
EXIT_UNWRITABLE_OUTPUT = 6

RESULTS_FILE = "results.csv"
PROFILES_FILE = "profiles.svg"
RANKS_FILE = "ranks.svg"
SCORES_FILE = "scores.svg"
SUMMARY_FILE = "summary.txt"


def run_config_from(config):
    """Build a :class:`~leaguerank.models.RunConfig` from a loaded config.

    :raises leaguerank.exceptions.ReportError: if no input is configured
    """
    report_config = config["report"]
    simulation_config = config["simulation"]
    if not report_config["input"]:
        raise exceptions.ReportError(
            "No league table given; use --input or report/input",
            exit_code=EXIT_USAGE,
        )
    return RunConfig(
        input_path=str(report_config["input"]),
        out_dir=str(report_config["out_dir"]),
        weights=report_config["weights"],
        iterations=report_config["iterations"],
        seed=report_config["seed"],
        model=report_config["model"],
        tie_policy=report_config["tie_policy"],
        level=report_config["level"],
        baseline=report_config["baseline"],
        workers=simulation_config["workers"],
        shard_size=simulation_config["shard_size"],
    )


def read_groups(config):
    """Load and check the input league table.

    :rtype: (list of :class:`~leaguerank.models.GroupSubmission`,
        :class:`~leaguerank.models.IngestReport`)
    """
    try:
        groups, ingest_report = ingest.load_league_table(config.input_path)
    except FileNotFoundError:
        raise exceptions.ReportError(
            f"Input {config.input_path} not found",
            exit_code=EXIT_INPUT_NOT_FOUND,
        )
    except OSError as exc:
        raise exceptions.ReportError(
            f"Input {config.input_path} could not be read: {exc}",
            exit_code=EXIT_INPUT_NOT_FOUND,
        )
    except exceptions.IngestError as exc:
        raise exceptions.ReportError(
            f"Input {config.input_path} could not be parsed: {exc.message}",
            exit_code=EXIT_PARSE_ERROR,
        )

    ingest_report = ingest_report.merge(ingest.validate_groups(groups))
    if len(groups) < 2:
        raise exceptions.ReportError(
            f"Ranking needs at least 2 groups, {config.input_path} "
            f"has {len(groups)} valid row(s)",
            exit_code=EXIT_TOO_FEW_GROUPS,
        )
    return groups, ingest_report


def build_report(groups, config, ingest_report=None):
    """Score, simulate and classify ``groups``.

    :rtype: :class:`~leaguerank.models.LeagueReport`
    """
    league = profile.league_table(groups)
    estimates = [
        uncertainty.estimate_score(g, config.weights, config.level)
        for g in league
    ]
    overlaps = uncertainty.count_overall_mean_overlaps(
        league, config.weights, config.level, config.baseline
    )
    ranks = simulation.simulate_ranks(
        league, config.weights, config.simulation
    )
    bands, decided = classify.classify_by_rank_interval(ranks, len(league))
    discordant = simulation.median_rank_discordance(
        league, {r.group_id: r for r in ranks}
    )
    logger.info(
        "%d of %d score intervals overlap the overall mean; "
        "%d groups lie in the top or bottom half",
        overlaps.count,
        len(league),
        decided,
    )
    return LeagueReport(
        groups=league,
        estimates=estimates,
        overlaps=overlaps,
        ranks=ranks,
        bands=bands,
        discordant=discordant,
        ingest=ingest_report,
        config=config,
    )


def prepare_out_dir(out_dir):
    """Create ``out_dir`` if missing and check that it is writable."""
    try:
        return path.get_or_create_dir(out_dir)
    except OSError as exc:
        raise exceptions.ReportError(
            f"Output directory {out_dir} is not writable: {exc}",
            exit_code=EXIT_UNWRITABLE_OUTPUT,
        )


def write_report(league_report, out_dir):
    """Write all report files into ``out_dir``, creating it if needed."""
    out_dir = prepare_out_dir(out_dir)
    try:
        results_path = out_dir / RESULTS_FILE
        with open(results_path, "w", encoding="utf-8", newline="") as fp:
            results.write_results(league_report, fp)
        with open(out_dir / SUMMARY_FILE, "w", encoding="utf-8") as fp:
            results.write_summary(league_report, fp)
        charts.write_profiles_chart(league_report, out_dir / PROFILES_FILE)
        charts.write_ranks_chart(league_report, out_dir / RANKS_FILE)
        charts.write_scores_chart(league_report, out_dir / SCORES_FILE)
    except OSError as exc:
        raise exceptions.ReportError(
            f"Output directory {out_dir} is not writable: {exc}",
            exit_code=EXIT_UNWRITABLE_OUTPUT,
        )
    logger.info("Report written to %s", out_dir)


def run_report(config):
    """Run the pipeline described by ``config`` and write its files.

    :param config: the run settings
    :type config: :class:`~leaguerank.models.RunConfig`
    :returns: the process exit status, :data:`EXIT_OK` on success
    :rtype: int
    """
    try:
        groups, ingest_report = read_groups(config)
        prepare_out_dir(config.out_dir)
        with timer.time_logger("Report", level=logging.DEBUG):
            league_report = build_report(groups, config, ingest_report)
        write_report(league_report, config.out_dir)
    except exceptions.ReportError as exc:
        logger.error("%s", exc.message)
        return exc.exit_code
    return EXIT_OK
