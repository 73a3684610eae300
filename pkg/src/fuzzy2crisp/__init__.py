"""Convert fuzzy rule-based classifiers into equivalent crisp rule bases."""

from .complexity import (
    ComplexityReport,
    complexity_report,
    degree_of_complexity,
    upper_bound_additive,
    upper_bound_sufficient,
)
from .fuzzy import (
    ABSTAIN,
    ADDITIVE,
    SUFFICIENT,
    FuzzyRule,
    FuzzyRuleBase,
    LinguisticVariable,
    RuleBaseError,
    TrapezoidalFuzzySet,
    classify_additive,
    classify_sufficient,
    membership,
    predict_fuzzy,
    support_of_rule,
    truth_degree,
    truth_degrees,
)
from .miner import (
    BOXES,
    REGIONS,
    ComparisonCondition,
    CompatibleSubset,
    CrispRule,
    CrispRuleBase,
    ScoreSumCondition,
    classify_crisp,
    combine_regions,
    compatible_region,
    compatible_subsets,
    coverage,
    mine,
    mine_additive,
    mine_hyperrectangles,
    mine_sufficient,
    predict_crisp,
)
from .oracle import (
    VerificationReport,
    brute_force_compatible_subsets,
    export_decision_boundary,
    subsets_agree,
    verify_grid,
    verify_random,
)
from .regions import (
    EMPTY,
    Hyperrectangle,
    Interval,
    Region,
    box_intersect,
    disjoint_decomposition,
    interval_intersect,
    region_contains,
    region_difference,
    region_intersect,
    region_is_empty,
    region_union,
    same_point_set,
)

__version__ = "0.1.0"
