from .types import (
    CaseParams,
    ClusterError,
    GroundSetTooLarge,
    IdentityId,
    IndexOutOfFamily,
    Interval,
    LimitExceeded,
    NonUnitAtNegativeExponent,
    NotDivisible,
    ParseError,
    UnknownFormat,
    UnknownIdentity,
    UnsupportedCase,
    VerificationReport,
    VertexLimitExceeded,
)
from .config import ClusterConfig
from .laurent import (
    CanonicalForm,
    LaurentPolynomial,
    Monomial,
    div_exact,
    format_laurent,
    is_strictly_positive,
    parse_laurent,
    swap_vars,
)
from .recurrence import SequenceCache, check_reciprocity, detect_period, eval_at_ones, x_at
from .graphs import (
    WeightedGraph,
    build_G14,
    build_G22,
    build_G41,
    build_H,
    build_tildeG14,
    cell_counts,
    disjoint_union,
    export,
    import_graph,
)
from .matching import enumerate_matchings, match_count, match_polynomial
from .closed_forms import (
    SubsetCountQuery,
    chebyshev_s,
    explicit_x22,
    m14,
    m22,
    sq_oct,
    subset_count_bruteforce,
    subset_count_formula,
)
from .verifier import run_full_suite, verify_identity, verify_main_theorem

__all__ = [
    "CaseParams",
    "ClusterError",
    "GroundSetTooLarge",
    "IdentityId",
    "IndexOutOfFamily",
    "Interval",
    "LimitExceeded",
    "NonUnitAtNegativeExponent",
    "NotDivisible",
    "ParseError",
    "UnknownFormat",
    "UnknownIdentity",
    "UnsupportedCase",
    "VerificationReport",
    "VertexLimitExceeded",
    "ClusterConfig",
    "CanonicalForm",
    "LaurentPolynomial",
    "Monomial",
    "div_exact",
    "format_laurent",
    "is_strictly_positive",
    "parse_laurent",
    "swap_vars",
    "SequenceCache",
    "check_reciprocity",
    "detect_period",
    "eval_at_ones",
    "x_at",
    "WeightedGraph",
    "build_G14",
    "build_G22",
    "build_G41",
    "build_H",
    "build_tildeG14",
    "cell_counts",
    "disjoint_union",
    "export",
    "import_graph",
    "enumerate_matchings",
    "match_count",
    "match_polynomial",
    "SubsetCountQuery",
    "chebyshev_s",
    "explicit_x22",
    "m14",
    "m22",
    "sq_oct",
    "subset_count_bruteforce",
    "subset_count_formula",
    "run_full_suite",
    "verify_identity",
    "verify_main_theorem",
]
