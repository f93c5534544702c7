"""Exact truncated q-series arithmetic and congruence checking for two-color
partition counting functions."""

from .series import (
    EXACT,
    MOD64,
    CoefficientRing,
    NonUnitError,
    OrderError,
    RingMismatchError,
    Series,
    add,
    change_ring,
    congruent_to_order,
    constant_series,
    dissect,
    dump_json_dict,
    dump_text,
    equal_to_order,
    first_incongruence,
    invert,
    mod2pow,
    monomial,
    mul,
    mul_sparse_binomial,
    negate,
    one_series,
    power,
    reduce_mod,
    scalar_mul,
    shift,
    sub,
    substitute_power,
    truncate,
    zero_series,
)

from .products import (
    ProductSpec,
    eta_quotient,
    euler_fm,
    pentagonal_series,
    pochhammer_fin,
    pochhammer_inf,
)
from .mock_theta import MOCK_THETA, a_b, b_appell, b_eulerian, f3_series, omega_series
from .oracle import (
    BLUE,
    RED,
    ColoredPartition,
    OracleCount,
    count_c_limit,
    count_ck,
    enumerate_ck,
    oracle_table,
)
from .qexpr import ParseError, QExpr, evaluate, parse, to_source
from .engine import (
    CATALOGUE,
    CatalogueEntry,
    ClaimReport,
    FamilyClaim,
    ProgressionClaim,
    SuiteContext,
    all_passed,
    build_suite_context,
    check_family,
    check_progression,
    check_relation,
    paper_suite,
    run_catalogue,
    scan_progressions,
    series_c,
    series_ck,
    suite_json,
    verify_congruent,
    verify_identity,
)

__all__ = [
    "BLUE",
    "CATALOGUE",
    "EXACT",
    "MOCK_THETA",
    "MOD64",
    "RED",
    "CatalogueEntry",
    "ClaimReport",
    "CoefficientRing",
    "ColoredPartition",
    "FamilyClaim",
    "NonUnitError",
    "OracleCount",
    "OrderError",
    "ParseError",
    "ProductSpec",
    "ProgressionClaim",
    "QExpr",
    "RingMismatchError",
    "Series",
    "SuiteContext",
    "a_b",
    "add",
    "all_passed",
    "b_appell",
    "b_eulerian",
    "build_suite_context",
    "change_ring",
    "check_family",
    "check_progression",
    "check_relation",
    "congruent_to_order",
    "constant_series",
    "count_c_limit",
    "count_ck",
    "dissect",
    "dump_json_dict",
    "dump_text",
    "enumerate_ck",
    "equal_to_order",
    "eta_quotient",
    "euler_fm",
    "evaluate",
    "f3_series",
    "first_incongruence",
    "invert",
    "mod2pow",
    "monomial",
    "mul",
    "mul_sparse_binomial",
    "negate",
    "omega_series",
    "one_series",
    "oracle_table",
    "paper_suite",
    "parse",
    "pentagonal_series",
    "pochhammer_fin",
    "pochhammer_inf",
    "power",
    "reduce_mod",
    "run_catalogue",
    "scalar_mul",
    "scan_progressions",
    "series_c",
    "series_ck",
    "shift",
    "sub",
    "substitute_power",
    "suite_json",
    "to_source",
    "truncate",
    "verify_congruent",
    "verify_identity",
    "zero_series",
]

__version__ = "0.1.0"
