import enum
import math

from leaguerank.models import fields
from leaguerank.models.immutable import ValidatedImmutableObject

__all__ = [
    "BandAssignment",
    "Band",
    "BaselineMode",
    "GroupSubmission",
    "IngestReport",
    "LeagueReport",
    "Model",
    "OverlapSummary",
    "QualityProfile",
    "RankDistribution",
    "RowIssue",
    "RunConfig",
    "ScoreEstimate",
    "SimulationConfig",
    "STAR_LEVELS",
    "StarLevel",
    "TiePolicy",
    "ValidatedImmutableObject",
    "WeightScheme",
]

#: Absolute tolerance for a profile's proportions summing to one.
SUM_TOLERANCE = 1e-9

#: Profiles are published in blocks of this size.
BLOCK_SIZE = 0.05

#: Rounding slack of interval membership, in units in the last place.
CONTAINS_ULPS = 64


class StarLevel(enum.IntEnum):
    """Quality rating of a single assessed output."""

    FOUR = 4
    THREE = 3
    TWO = 2
    ONE = 1
    UNCLASSIFIED = 0

    @property
    def label(self):
        return _STAR_LABELS[self]


_STAR_LABELS = {
    StarLevel.FOUR: "world-leading",
    StarLevel.THREE: "internationally excellent",
    StarLevel.TWO: "internationally recognized",
    StarLevel.ONE: "nationally recognized",
    StarLevel.UNCLASSIFIED: "unclassified",
}

#: Canonical order of the star levels; every profile and weight vector is
#: indexed in this order.
STAR_LEVELS = tuple(sorted(StarLevel, reverse=True))


class TiePolicy(str, enum.Enum):
    MIDRANK = "midrank"
    MINRANK = "minrank"


class Model(str, enum.Enum):
    SINGLE_OUTPUT = "single-output"
    TRUE_SCORE = "true-score"


class BaselineMode(str, enum.Enum):
    FTE_WEIGHTED = "fte-weighted"
    UNWEIGHTED = "unweighted"


class Band(str, enum.Enum):
    TOP = "top"
    BOTTOM = "bottom"
    UNCERTAIN = "uncertain"


class QualityProfile(ValidatedImmutableObject):

    """
    Distribution of a group's assessed outputs over the five star levels.

    :param proportions: five proportions in :data:`STAR_LEVELS` order
    :type proportions: iterable of float
    """

    #: Proportions of 4*, 3*, 2*, 1* and unclassified outputs. Read-only.
    proportions = fields.Vector(length=len(STAR_LEVELS))

    def _validate(self):
        if not self.proportions:
            raise ValueError("Expected proportions to be set")
        for p in self.proportions:
            if not 0.0 <= p <= 1.0:
                raise ValueError(
                    f"Expected proportions in [0, 1], not {self.proportions}"
                )
        total = math.fsum(self.proportions)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValueError(
                f"Expected proportions to sum to 1, not {total!r}"
            )

    @classmethod
    def from_percentages(cls, percentages):
        """Create a profile from percentages in the range 0-100."""
        return cls(proportions=[float(p) / 100 for p in percentages])

    def proportion(self, level):
        """Proportion of outputs rated at ``level``."""
        return self.proportions[STAR_LEVELS.index(StarLevel(level))]

    def is_block_granular(self):
        """Whether every proportion is a multiple of :data:`BLOCK_SIZE`."""
        for p in self.proportions:
            blocks = p / BLOCK_SIZE
            if abs(blocks - round(blocks)) * BLOCK_SIZE > SUM_TOLERANCE:
                return False
        return True


class WeightScheme(ValidatedImmutableObject):

    """
    Numeric weight for each star level.

    Arbitrary finite weights are allowed; no ordering is enforced.

    :param name: name shown in reports
    :type name: string
    :param weights: five weights in :data:`STAR_LEVELS` order
    :type weights: iterable of float
    """

    #: Name of the scheme. Read-only.
    name = fields.String(default="custom")

    #: Weights of 4*, 3*, 2*, 1* and unclassified outputs. Read-only.
    weights = fields.Vector(length=len(STAR_LEVELS))

    def _validate(self):
        if not self.weights:
            raise ValueError("Expected weights to be set")

    @classmethod
    def from_spec(cls, spec):
        """Parse ``funding``, ``mean`` or five comma separated weights."""
        if isinstance(spec, WeightScheme):
            return spec
        spec = spec.strip()
        if spec.lower() in NAMED_SCHEMES:
            return NAMED_SCHEMES[spec.lower()]
        try:
            values = [float(v) for v in spec.split(",")]
        except ValueError:
            raise ValueError(
                f"weights must be 'funding', 'mean' or five numbers, not {spec!r}"
            )
        return cls(name=spec.replace(" ", ""), weights=values)

    def affine(self, scale, shift=0.0):
        """Return the scheme ``scale * w + shift`` for every star level."""
        return WeightScheme(
            name=f"{scale:g}*{self.name}+{shift:g}",
            weights=[scale * w + shift for w in self.weights],
        )

    def weight(self, level):
        return self.weights[STAR_LEVELS.index(StarLevel(level))]


#: Funding weights 7, 3, 1, 0 with unclassified at 0.
FUNDING = WeightScheme(name="funding", weights=(7, 3, 1, 0, 0))

#: Average number of stars.
MEAN = WeightScheme(name="mean", weights=(4, 3, 2, 1, 0))

NAMED_SCHEMES = {"funding": FUNDING, "mean": MEAN}


class GroupSubmission(ValidatedImmutableObject):

    """
    One institution's entry to a unit of assessment.

    :param institution: institution name
    :type institution: string
    :param unit: unit of assessment code, e.g. ``UOA22``
    :type unit: string
    :param fte_staff: full-time-equivalent staff submitted
    :type fte_staff: float
    :param profile: the group's quality profile
    :type profile: :class:`QualityProfile`
    """

    #: Institution name. Read-only.
    institution = fields.Identifier()

    #: Unit of assessment code. Read-only.
    unit = fields.Identifier()

    #: Full-time-equivalent staff count, strictly positive. Read-only.
    fte_staff = fields.Float(above=0)

    #: The :class:`QualityProfile` of the submission. Read-only.
    profile = fields.Field(type=QualityProfile)

    def _validate(self):
        for name in ("institution", "unit", "fte_staff", "profile"):
            if getattr(self, name) is None:
                raise ValueError(f"Expected {name} to be set")

    @property
    def group_id(self):
        return f"{self.institution}/{self.unit}"


class ScoreEstimate(ValidatedImmutableObject):

    """
    Point estimate, standard error and confidence interval of a weighted
    score.
    """

    #: The weighted score. Read-only.
    estimate = fields.Float()

    #: Standard error of the estimate. Read-only.
    std_error = fields.Float(min=0)

    #: Effective number of outputs behind the estimate, if known. Read-only.
    effective_n = fields.Float(above=0)

    #: Lower end of the interval. Read-only.
    interval_low = fields.Float()

    #: Upper end of the interval. Read-only.
    interval_high = fields.Float()

    #: Coverage of the interval. Read-only.
    level = fields.Float(default=0.95, above=0, below=1)

    def _validate(self):
        for name in ("estimate", "std_error", "interval_low", "interval_high"):
            if getattr(self, name) is None:
                raise ValueError(f"Expected {name} to be set")
        if not self.interval_low <= self.estimate <= self.interval_high:
            raise ValueError(
                f"Expected {self.interval_low} <= {self.estimate} "
                f"<= {self.interval_high}"
            )
        if self.std_error == 0 and self.interval_low != self.interval_high:
            raise ValueError("Expected a zero width interval for zero error")

    @property
    def width(self):
        return self.interval_high - self.interval_low

    def contains(self, value):
        """Closed interval membership.

        Endpoints are widened by :data:`CONTAINS_ULPS` units in the last
        place of the largest magnitude involved, so a value that touches an
        endpoint keeps touching it when the weights are rescaled.
        """
        magnitude = max(
            abs(value), abs(self.interval_low), abs(self.interval_high)
        )
        slack = CONTAINS_ULPS * math.ulp(magnitude)
        return (
            self.interval_low - slack <= value <= self.interval_high + slack
        )


class OverlapSummary(ValidatedImmutableObject):

    """Which groups' score intervals contain the overall mean."""

    #: The baseline every interval is compared with. Read-only.
    overall_mean = fields.Float()

    #: One flag per group, in input order. Read-only.
    overlaps = fields.Collection(type=bool)

    #: How :attr:`overall_mean` was computed. Read-only.
    baseline = fields.Enum(BaselineMode, default=BaselineMode.FTE_WEIGHTED)

    @property
    def count(self):
        return sum(self.overlaps)


class SimulationConfig(ValidatedImmutableObject):

    """Settings for a rank simulation run."""

    #: Number of iterations. Read-only.
    iterations = fields.Integer(default=10000, min=1)

    #: Seed of the random streams, an unsigned 64-bit integer. Read-only.
    seed = fields.Integer(default=0, min=0, max=2**64 - 1)

    #: How tied draws are ranked. Read-only.
    tie_policy = fields.Enum(TiePolicy, default=TiePolicy.MIDRANK)

    #: Which simulation model to run. Read-only.
    model = fields.Enum(Model, default=Model.TRUE_SCORE)

    #: Coverage of the reported rank intervals. Read-only.
    level = fields.Float(default=0.95, above=0, below=1)

    #: Number of worker actors sharing the iterations. Read-only.
    workers = fields.Integer(default=1, min=1)

    #: Iterations per unit of work. Read-only.
    shard_size = fields.Integer(default=10000, min=1)


class RankDistribution(ValidatedImmutableObject):

    """
    Distribution of one group's rank, 1 being best.

    The histogram is stored as two parallel tuples sorted by rank. Weights
    are iteration counts for simulated distributions and probabilities for
    exact ones; :attr:`total` is their sum.
    """

    #: Group the distribution belongs to. Read-only.
    group_id = fields.String()

    #: Distinct rank values, ascending. Read-only.
    ranks = fields.Vector()

    #: Count or probability of each rank value. Read-only.
    weights = fields.Vector()

    #: Sum of :attr:`weights`. Read-only.
    total = fields.Float(above=0)

    #: Median rank. Read-only.
    median = fields.Float(min=1)

    #: Lower end of the rank interval. Read-only.
    interval_low = fields.Float(min=1)

    #: Upper end of the rank interval. Read-only.
    interval_high = fields.Float(min=1)

    #: Coverage of the rank interval. Read-only.
    level = fields.Float(default=0.95, above=0, below=1)

    def _validate(self):
        if len(self.ranks) != len(self.weights):
            raise ValueError("Expected one weight per rank")
        if list(self.ranks) != sorted(self.ranks):
            raise ValueError("Expected ranks in ascending order")
        if not self.interval_low <= self.median <= self.interval_high:
            raise ValueError(
                f"Expected {self.interval_low} <= {self.median} "
                f"<= {self.interval_high}"
            )

    @property
    def histogram(self):
        return dict(zip(self.ranks, self.weights))

    def probability(self, rank):
        return self.histogram.get(float(rank), 0.0) / self.total

    @property
    def mean(self):
        return (
            math.fsum(r * w for r, w in zip(self.ranks, self.weights))
            / self.total
        )


class BandAssignment(ValidatedImmutableObject):

    """Top, bottom or uncertain allocation of one group."""

    #: Group the assignment belongs to. Read-only.
    group_id = fields.String()

    #: The allocated :class:`Band`. Read-only.
    band = fields.Enum(Band)

    #: Lower end of the rank interval used. Read-only.
    rank_low = fields.Float()

    #: Upper end of the rank interval used. Read-only.
    rank_high = fields.Float()

    @property
    def rank_interval(self):
        return (self.rank_low, self.rank_high)


class RowIssue(ValidatedImmutableObject):

    """A warning or rejection reason for one data row."""

    #: 1-based data row number; the header is row 0. Read-only.
    row = fields.Integer(min=0)

    #: Human readable message. Read-only.
    message = fields.String()


class IngestReport(ValidatedImmutableObject):

    """Outcome of parsing and validating a league table."""

    #: Number of accepted rows. Read-only.
    accepted = fields.Integer(default=0, min=0)

    #: Number of rejected rows. Read-only.
    rejected = fields.Integer(default=0, min=0)

    #: Non-fatal :class:`RowIssue` warnings. Read-only.
    warnings = fields.Collection(type=RowIssue)

    #: One :class:`RowIssue` per rejected row. Read-only.
    rejections = fields.Collection(type=RowIssue)

    @property
    def total(self):
        return self.accepted + self.rejected

    def merge(self, other):
        """Fold the warnings of ``other`` into this report."""
        return self.replace(
            warnings=self.warnings + other.warnings,
            rejections=self.rejections + other.rejections,
        )


class RunConfig(ValidatedImmutableObject):

    """Everything a report run needs."""

    #: Path of the league table to read. Read-only.
    input_path = fields.String()

    #: Directory the output files are written to. Read-only.
    out_dir = fields.String()

    #: The :class:`WeightScheme` scored. Read-only.
    weights = fields.Field(type=WeightScheme, default=FUNDING)

    #: Number of simulation iterations. Read-only.
    iterations = fields.Integer(default=10000, min=1)

    #: Seed of the random streams. Read-only.
    seed = fields.Integer(default=0, min=0, max=2**64 - 1)

    #: Simulation model. Read-only.
    model = fields.Enum(Model, default=Model.TRUE_SCORE)

    #: Tie handling in ranks. Read-only.
    tie_policy = fields.Enum(TiePolicy, default=TiePolicy.MIDRANK)

    #: Coverage of all intervals. Read-only.
    level = fields.Float(default=0.95, above=0, below=1)

    #: How the overall mean is computed. Read-only.
    baseline = fields.Enum(BaselineMode, default=BaselineMode.FTE_WEIGHTED)

    #: Number of simulation worker actors. Read-only.
    workers = fields.Integer(default=1, min=1)

    #: Iterations per unit of work. Read-only.
    shard_size = fields.Integer(default=10000, min=1)

    @property
    def simulation(self):
        return SimulationConfig(
            iterations=self.iterations,
            seed=self.seed,
            tie_policy=self.tie_policy,
            model=self.model,
            level=self.level,
            workers=self.workers,
            shard_size=self.shard_size,
        )


class LeagueReport(ValidatedImmutableObject):

    """Every computed result of one report run, in league table order."""

    #: The :class:`GroupSubmission` entries, best mean score first. Read-only.
    groups = fields.Collection(type=GroupSubmission)

    #: One :class:`ScoreEstimate` per group. Read-only.
    estimates = fields.Collection(type=ScoreEstimate)

    #: Overlap of each group's interval with the overall mean. Read-only.
    overlaps = fields.Field(type=OverlapSummary)

    #: One :class:`RankDistribution` per group. Read-only.
    ranks = fields.Collection(type=RankDistribution)

    #: One :class:`BandAssignment` per group. Read-only.
    bands = fields.Collection(type=BandAssignment)

    #: Groups whose median rank differs from their league position. Read-only.
    discordant = fields.Integer(default=0, min=0)

    #: Parse and validation outcome of the input. Read-only.
    ingest = fields.Field(type=IngestReport)

    #: The settings the report was produced with. Read-only.
    config = fields.Field(type=RunConfig)

    def _validate(self):
        n = len(self.groups)
        for name in ("estimates", "ranks", "bands"):
            if len(getattr(self, name)) != n:
                raise ValueError(f"Expected one item of {name} per group")
        if self.overlaps is not None and len(self.overlaps.overlaps) != n:
            raise ValueError("Expected one overlap flag per group")

    @property
    def decided(self):
        """Number of groups allocated to the top or bottom half."""
        return sum(1 for b in self.bands if b.band is not Band.UNCERTAIN)
