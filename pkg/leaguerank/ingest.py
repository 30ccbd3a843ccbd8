"""Reading and writing league tables in the canonical CSV format.

The format is UTF-8 text with the header
``institution,unit,fte,pct4,pct3,pct2,pct1,pct0`` and one row per
submission. Percentages are decimals in the range 0-100.
"""

import csv
import decimal
import logging
import math

from leaguerank import exceptions
from leaguerank.models import (
    SUM_TOLERANCE,
    GroupSubmission,
    IngestReport,
    QualityProfile,
    RowIssue,
)

logger = logging.getLogger(__name__)

HEADER = ("institution", "unit", "fte", "pct4", "pct3", "pct2", "pct1", "pct0")

#: Percentage sums within this distance of 100 are renormalized.
RENORMALIZE_TOLERANCE = decimal.Decimal("0.5")

#: FTE counts below this are suspicious but legal.
MINIMUM_PLAUSIBLE_FTE = 1.0


class _RowRejected(Exception):
    pass


def _parse_percentage(text):
    try:
        value = decimal.Decimal(text.strip())
    except decimal.InvalidOperation:
        raise _RowRejected(f"percentage {text!r} is not a number")
    if not value.is_finite():
        raise _RowRejected(f"percentage {text!r} is not finite")
    if not 0 <= value <= 100:
        raise _RowRejected(f"percentage {text!r} outside 0-100")
    return value


def _parse_fte(text):
    try:
        value = float(text.strip())
    except ValueError:
        raise _RowRejected(f"fte {text!r} is not a number")
    if not math.isfinite(value) or value <= 0:
        raise _RowRejected(f"fte {text!r} is not a positive number")
    return value


def _parse_row(row):
    """Returns a submission and an optional warning, or raises."""
    if len(row) != len(HEADER):
        raise _RowRejected(f"expected {len(HEADER)} fields, got {len(row)}")
    institution, unit, fte = (field.strip() for field in row[:3])
    if not institution:
        raise _RowRejected("institution is empty")
    if not unit:
        raise _RowRejected("unit is empty")

    fte_staff = _parse_fte(fte)
    percentages = [_parse_percentage(field) for field in row[3:]]

    warning = None
    total = sum(percentages)
    if abs(total - 100) <= 100 * decimal.Decimal(SUM_TOLERANCE):
        # Shifting the decimal point is exact, so "5" becomes exactly 0.05.
        proportions = [float(p.scaleb(-2)) for p in percentages]
    elif abs(total - 100) <= RENORMALIZE_TOLERANCE:
        proportions = [float(p / total) for p in percentages]
        warning = f"profile sum {total} renormalized to 100"
    else:
        raise _RowRejected("profile sum out of tolerance")

    try:
        submission = GroupSubmission(
            institution=institution,
            unit=unit,
            fte_staff=fte_staff,
            profile=QualityProfile(proportions=proportions),
        )
    except (TypeError, ValueError) as exc:
        raise _RowRejected(str(exc))
    return submission, warning


def parse_league_table(fp):
    """Parse a league table from a text stream.

    Rows that fail a hard check are rejected with a reason, everything else
    becomes a :class:`~leaguerank.models.GroupSubmission`. Blank lines are
    ignored and do not count as rows.

    :param fp: text stream, opened with ``newline=""``
    :raises leaguerank.exceptions.IngestError: if the header is missing or
        wrong, or an ``(institution, unit)`` pair occurs twice
    :rtype: (list of :class:`~leaguerank.models.GroupSubmission`,
        :class:`~leaguerank.models.IngestReport`)
    """
    reader = csv.reader(fp)
    try:
        header = next(reader)
    except StopIteration:
        raise exceptions.IngestError("unreadable header: input is empty", row=0)
    except csv.Error as exc:
        raise exceptions.IngestError(f"unreadable header: {exc}", row=0)
    if tuple(field.strip().lower() for field in header) != HEADER:
        raise exceptions.IngestError(
            f"unreadable header: expected {','.join(HEADER)}", row=0
        )

    groups = []
    seen = {}
    warnings = []
    rejections = []
    row_number = 0
    while True:
        try:
            row = next(reader)
        except StopIteration:
            break
        except csv.Error as exc:
            row_number += 1
            rejections.append(RowIssue(row=row_number, message=str(exc)))
            continue
        if not any(field.strip() for field in row):
            continue
        row_number += 1

        try:
            group, warning = _parse_row(row)
        except _RowRejected as exc:
            logger.warning("Rejected row %d: %s", row_number, exc)
            rejections.append(RowIssue(row=row_number, message=str(exc)))
            continue

        key = (group.institution, group.unit)
        if key in seen:
            raise exceptions.IngestError(
                f"duplicate submission {group.group_id} "
                f"in rows {seen[key]} and {row_number}",
                row=row_number,
            )
        seen[key] = row_number
        if warning:
            logger.warning("Row %d: %s", row_number, warning)
            warnings.append(RowIssue(row=row_number, message=warning))
        groups.append(group)

    report = IngestReport(
        accepted=len(groups),
        rejected=len(rejections),
        warnings=warnings,
        rejections=rejections,
    )
    logger.info(
        "Read %d submissions, rejected %d row(s)",
        report.accepted,
        report.rejected,
    )
    return groups, report


def validate_groups(groups):
    """Advisory checks on parsed submissions; nothing is modified.

    Warns about profiles that are not in 5% blocks and about FTE counts
    below one. Row numbers are 1-based positions in ``groups``.

    :rtype: :class:`~leaguerank.models.IngestReport`
    """
    groups = list(groups)
    warnings = []
    for row, group in enumerate(groups, start=1):
        if not group.profile.is_block_granular():
            warnings.append(
                RowIssue(
                    row=row,
                    message=f"{group.group_id}: proportions not in 5% blocks",
                )
            )
        if group.fte_staff < MINIMUM_PLAUSIBLE_FTE:
            warnings.append(
                RowIssue(row=row, message=f"{group.group_id}: FTE below 1")
            )
    for issue in warnings:
        logger.warning("%s", issue.message)
    return IngestReport(accepted=len(groups), warnings=warnings)


def _format_percentage(proportion):
    # The shortest repr of the proportion, decimal point moved two places.
    return format(decimal.Decimal(repr(proportion)).scaleb(2), "f")


def dump_league_table(groups, fp):
    """Write submissions in the format read by :func:`parse_league_table`.

    Values are written so that parsing the output gives back equal
    submissions.
    """
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(HEADER)
    for group in groups:
        writer.writerow(
            [group.institution, group.unit, repr(group.fte_staff)]
            + [_format_percentage(p) for p in group.profile.proportions]
        )


def load_league_table(path):
    """Parse the league table file at ``path``.

    A UTF-8 byte order mark is tolerated.

    :raises FileNotFoundError: if ``path`` does not exist
    :raises leaguerank.exceptions.IngestError: on a fatal parse problem,
        including text that is not UTF-8
    """
    with open(path, encoding="utf-8-sig", newline="") as fp:
        try:
            return parse_league_table(fp)
        except UnicodeDecodeError as exc:
            raise exceptions.IngestError(f"{path} is not UTF-8 text: {exc}")
