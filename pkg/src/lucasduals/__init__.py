"""Exact Lucas sequences, Möbius duals, and p-adic valuation laws.

The layers, bottom up: arith (factoring, μ, φ, Kronecker, exact
valuations), lucas (validated parameters, exact and modular terms),
duals (Möbius duals of U and V), valuations (closed-form valuation
laws with branch labels), explorer (scans and reports, with jitted
kernels behind an env-selected backend).
"""

from .arith import (
    Factorization,
    FactorizationOverflowError,
    divisors,
    factorize,
    is_prime,
    is_squarefree,
    kronecker,
    mobius,
    p_free_part,
    totient,
    valuation,
)
from .duals import (
    DualValue,
    InternalNonIntegralError,
    MissingDivisorError,
    ZeroTermError,
    dual_of,
    dual_u,
    dual_u_doubled,
    dual_v,
)
from .explorer import (
    ScanReport,
    ScanRow,
    characteristic_gap_scan,
    find_characteristic_factor,
    scan_integral_dual_v,
    squarefree_dual_scan,
    wss_scan,
)
from .lucas import (
    FIBONACCI,
    DegenerateError,
    InvalidParamsError,
    LucasParams,
    SequenceKind,
    ZeroDiscriminantError,
    ZeroParameterError,
    new_params,
    term,
    u,
    u_mod,
    v,
    v_mod,
)
from .valuations import (
    AnchorOverflowError,
    DegenerateRecursionError,
    EntryPoint,
    EntryPointBranch,
    ValuationResult,
    entry_point,
    v_p_dual_u,
    v_p_dual_v,
    v_p_u,
)

__version__ = "0.1.0"

__all__ = [
    "AnchorOverflowError",
    "DegenerateError",
    "DegenerateRecursionError",
    "DualValue",
    "EntryPoint",
    "EntryPointBranch",
    "FIBONACCI",
    "Factorization",
    "FactorizationOverflowError",
    "InternalNonIntegralError",
    "InvalidParamsError",
    "LucasParams",
    "MissingDivisorError",
    "ScanReport",
    "ScanRow",
    "SequenceKind",
    "ValuationResult",
    "ZeroDiscriminantError",
    "ZeroParameterError",
    "ZeroTermError",
    "characteristic_gap_scan",
    "divisors",
    "dual_of",
    "dual_u",
    "dual_u_doubled",
    "dual_v",
    "entry_point",
    "factorize",
    "find_characteristic_factor",
    "is_prime",
    "is_squarefree",
    "kronecker",
    "mobius",
    "new_params",
    "p_free_part",
    "scan_integral_dual_v",
    "squarefree_dual_scan",
    "term",
    "totient",
    "u",
    "u_mod",
    "v",
    "v_mod",
    "v_p_dual_u",
    "v_p_dual_v",
    "v_p_u",
    "valuation",
    "wss_scan",
    "__version__",
]
