"""Growth classification of products of nonnegative integer matrices."""
from .classifier import (
    GrowthClass,
    GrowthVerdict,
    check_exponential,
    classify,
    expand_witness,
    growth_degree,
    growth_pairs,
    verify_witness,
)
from .estimator import BruteForceOracle, GrowthClassifier, TrackabilityAnalyzer
from .exceptions import (
    BudgetExceeded,
    CycleDetected,
    InputError,
    InternalInconsistency,
    MatGrowthError,
    PreconditionViolated,
)
from .matrix import Matrix, MatrixSet, check_matrix_set, product_of_word, validate_set
from .oracle import agrees, classify_bruteforce, degree_bracket, max_t_exact, semigroup_closure
from .trackability import LabelledGraph, decide_trackable, matrices_from_labels

__version__ = "0.1.0"

__all__ = [
    "BruteForceOracle",
    "BudgetExceeded",
    "CycleDetected",
    "GrowthClass",
    "GrowthClassifier",
    "GrowthVerdict",
    "InputError",
    "InternalInconsistency",
    "LabelledGraph",
    "MatGrowthError",
    "Matrix",
    "MatrixSet",
    "PreconditionViolated",
    "TrackabilityAnalyzer",
    "agrees",
    "check_exponential",
    "check_matrix_set",
    "classify",
    "classify_bruteforce",
    "decide_trackable",
    "degree_bracket",
    "expand_witness",
    "growth_degree",
    "growth_pairs",
    "matrices_from_labels",
    "max_t_exact",
    "product_of_word",
    "semigroup_closure",
    "validate_set",
    "verify_witness",
]
