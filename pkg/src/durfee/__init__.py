"""Exact h-index range engine for citation profiles.

Models the h-index of a profile with N total citations as the Durfee-square
side of a uniform random partition of N.  Exposes exact partition counting,
the resulting h distribution with confidence intervals and tail bounds,
profile/cohort analytics, a uniform sampler, and reproduction of the
published reference tables.
"""

from .errors import CohortParseError, DegenerateDataError, ResourceLimitError
from .intervals import (
    ConfidenceInterval,
    DEFAULT_EPSILON,
    DurfeeDistribution,
    RULE_MINWIDTH,
    RULE_OF_THUMB_CONSTANT,
    RULE_SYMMETRIC,
    RuleOfThumbEstimate,
    concentration_mass,
    confidence_interval,
    durfee_distribution,
    max_h,
    mode_h,
    rule_of_thumb,
    tail_probability,
    tail_probability_exact,
)
from .partitions import (
    BoundedPartTable,
    DEFAULT_MAX_N,
    DurfeeCountRow,
    PartitionCountTable,
    bounded_part_counts,
    durfee_counts,
    hardy_ramanujan_estimate,
    partition_count,
    partition_count_table,
)
from .profiles import (
    Assessment,
    CohortReport,
    DurfeeDecomposition,
    Partition,
    ScholarRecord,
    analyze_cohort,
    assess,
    book_adjust,
    durfee_decompose,
    h_index,
    hirsch_a,
    parse_cohort_csv,
    parse_profile_file,
    pearson_r,
    recompose,
)
from .sampling import (
    EmpiricalDistribution,
    METHOD_BOLTZMANN,
    METHOD_UNRANKING,
    SamplerConfig,
    empirical_durfee_distribution,
    sample_partition,
    total_variation,
)

__version__ = "0.1.0"
