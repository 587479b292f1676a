"""Minimal linear codes from functions over finite fields.

Build codes whose columns are indexed by the nonzero (or projective) points
of GF(q)^n and whose rows are a function's value row plus the coordinate
rows; test minimality by independent routes; certify blocking/cutting
properties of zero sets.
"""

from .blocking import (
    BlockingReport,
    TheoremReport,
    blocking_report,
    hyperplane_pair_oracle,
    is_blocking,
    is_cutting,
    is_ks_blocking,
    set_dimension,
    shift_vanishes_on_support,
    support_spans,
    theorem_hypotheses,
)
from .codes import (
    ABReport,
    Config,
    LinearCode,
    MinimalityReport,
    ab_check,
    ab_r_threshold,
    ab_ratio_satisfied,
    ab_zero_threshold,
    build_affine_code,
    build_projective_code,
    format_generator_matrix,
    is_minimal,
    is_minimal_bruteforce,
    is_minimal_theorem,
    is_minimal_weightsum,
    load_generator_matrix,
    minimal_codewords,
    parse_generator_matrix,
    permute_columns,
    survey_family,
    weight_distribution,
    write_generator_matrix,
)
from .errors import (
    BudgetExceeded,
    CutcodesError,
    DegenerateDimensionWarning,
    DimensionOutOfRange,
    EvenOrderWarning,
    NonCanonicalPoint,
    NonPrimeCharacteristic,
    NotScalarCompatible,
    OriginInSet,
    ParseError,
    ReducibleModulus,
    SameHyperplane,
    UnsupportedOrder,
    ZeroInverse,
    ZeroNormal,
)
from .field import Field, field_from_order
from .functions import (
    DenseTable,
    FunctionSpec,
    MonomialBlocks,
    PolynomialSpec,
    PolyZeroIndicator,
    WeightStaircase,
    format_function_table,
    is_linear,
    linear_form,
    load_function_table,
    load_polynomial,
    monomial_blocks_zero_count,
    monomial_blocks_zero_count_recursive,
    parse_function_table,
    parse_polynomial,
    save_function_table,
    scalar_compatible,
    zero_set,
)
from .geometry import (
    PointSet,
    Space,
    SubspaceBasis,
    gaussian_binomial,
    load_point_set,
    parse_point_set,
    save_point_set,
)
from .repro import ALL_CHECKS, CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "ABReport",
    "ALL_CHECKS",
    "BlockingReport",
    "BudgetExceeded",
    "CheckResult",
    "Config",
    "CutcodesError",
    "DegenerateDimensionWarning",
    "DenseTable",
    "DimensionOutOfRange",
    "EvenOrderWarning",
    "Field",
    "FunctionSpec",
    "LinearCode",
    "MinimalityReport",
    "MonomialBlocks",
    "NonCanonicalPoint",
    "NonPrimeCharacteristic",
    "NotScalarCompatible",
    "OriginInSet",
    "ParseError",
    "PointSet",
    "PolyZeroIndicator",
    "PolynomialSpec",
    "ReducibleModulus",
    "SameHyperplane",
    "Space",
    "SubspaceBasis",
    "TheoremReport",
    "UnsupportedOrder",
    "WeightStaircase",
    "ZeroInverse",
    "ZeroNormal",
    "ab_check",
    "ab_r_threshold",
    "ab_ratio_satisfied",
    "ab_zero_threshold",
    "blocking_report",
    "build_affine_code",
    "build_projective_code",
    "field_from_order",
    "format_function_table",
    "format_generator_matrix",
    "gaussian_binomial",
    "hyperplane_pair_oracle",
    "is_blocking",
    "is_cutting",
    "is_ks_blocking",
    "is_linear",
    "is_minimal",
    "is_minimal_bruteforce",
    "is_minimal_theorem",
    "is_minimal_weightsum",
    "linear_form",
    "load_function_table",
    "load_generator_matrix",
    "load_point_set",
    "load_polynomial",
    "minimal_codewords",
    "monomial_blocks_zero_count",
    "monomial_blocks_zero_count_recursive",
    "parse_function_table",
    "parse_generator_matrix",
    "parse_point_set",
    "parse_polynomial",
    "permute_columns",
    "run_all",
    "save_function_table",
    "save_point_set",
    "scalar_compatible",
    "set_dimension",
    "shift_vanishes_on_support",
    "support_spans",
    "survey_family",
    "theorem_hypotheses",
    "weight_distribution",
    "write_generator_matrix",
    "zero_set",
]
