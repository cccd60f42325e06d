"""Minimum palindromic factorization: subquadratic computation, reference
algorithms, oracles, input generators and an instrumented bench harness."""

from .core import (
    GapList,
    GapTriple,
    GPLSlot,
    PLRecord,
    PLSequence,
    Text,
    ValidationReport,
    decode_gap_list,
    validate_gap_list,
)
from .naive import (
    ORACLE_CAP_DEFAULT,
    OracleCapError,
    PalTable,
    is_palindrome,
    pl_oracle,
    pl_quadratic,
    pl_quadratic_instrumented,
    suffix_palindrome_starts,
)
from .gaplist import empty_gap_list, extend, merge, normalize, update
from .fast import FastState, online_push, pl_fast, pl_step
from .reconstruct import Factorization, Part, factorize, parts_as_symbols, verify_factorization
from .generators import (
    RNG_ALGORITHM,
    SplitMix64,
    bitcount,
    decimal_to_text,
    random_text,
    repeated_symbol,
    text_to_decimal,
    zimin_prefix,
    zimin_recursive,
)
from .bench import (
    FamilySpec,
    RoundStats,
    RunSummary,
    ScalingReport,
    fit_scaling,
    make_text,
    run_instrumented,
)

__version__ = "0.1.0"

__all__ = [
    "Text",
    "GapTriple",
    "GapList",
    "PLRecord",
    "GPLSlot",
    "PLSequence",
    "ValidationReport",
    "decode_gap_list",
    "validate_gap_list",
    "is_palindrome",
    "suffix_palindrome_starts",
    "pl_quadratic",
    "pl_quadratic_instrumented",
    "pl_oracle",
    "PalTable",
    "OracleCapError",
    "ORACLE_CAP_DEFAULT",
    "extend",
    "normalize",
    "merge",
    "update",
    "empty_gap_list",
    "FastState",
    "pl_step",
    "pl_fast",
    "online_push",
    "Factorization",
    "Part",
    "factorize",
    "verify_factorization",
    "parts_as_symbols",
    "zimin_prefix",
    "zimin_recursive",
    "bitcount",
    "random_text",
    "repeated_symbol",
    "text_to_decimal",
    "decimal_to_text",
    "SplitMix64",
    "RNG_ALGORITHM",
    "FamilySpec",
    "RoundStats",
    "RunSummary",
    "ScalingReport",
    "run_instrumented",
    "fit_scaling",
    "make_text",
    "__version__",
]
