"""Verification toolkit for sech-kernel integral and zeta-function identities.

The package pairs independently evaluated expressions: deterministic
tanh-sinh quadrature on one side, series and special-function closed forms
on the other, plus an exact rational path for polynomial identities.  The
built-in catalog records the identities; the verifier runs them case by
case and reports residuals against per-class tolerances and propagated
error budgets.
"""

from .catalog import (
    CatalogError,
    IdentityRecord,
    Kind,
    TOLERANCES,
    TolClass,
    builtin_identities,
    format_catalog,
    get_identity,
    parse_catalog,
)
from .evaluator import (
    EvalConfig,
    EvalError,
    ExactEvalError,
    NumericResult,
    evaluate_exact,
    evaluate_numeric,
)
from .exprlang import Node, SourceError, format_expression, parse_expression
from .quadrature import QuadratureError, QuadResult, integrate_decaying, tanh_sinh
from .specfun import SpecfunError, constants
from .verifier import (
    CaseResult,
    Status,
    SuiteResult,
    from_json,
    run_suite,
    to_csv,
    to_json,
    to_markdown,
    verify_case,
)

__version__ = "0.1.0"

__all__ = [
    "CaseResult",
    "CatalogError",
    "EvalConfig",
    "EvalError",
    "ExactEvalError",
    "IdentityRecord",
    "Kind",
    "Node",
    "NumericResult",
    "QuadResult",
    "QuadratureError",
    "SourceError",
    "SpecfunError",
    "Status",
    "SuiteResult",
    "TOLERANCES",
    "TolClass",
    "builtin_identities",
    "constants",
    "evaluate_exact",
    "evaluate_numeric",
    "format_catalog",
    "format_expression",
    "from_json",
    "get_identity",
    "integrate_decaying",
    "parse_catalog",
    "parse_expression",
    "run_suite",
    "tanh_sinh",
    "to_csv",
    "to_json",
    "to_markdown",
    "verify_case",
    "__version__",
]
