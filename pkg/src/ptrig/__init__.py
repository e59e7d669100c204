"""Generalized trigonometric and hyperbolic functions with a verification engine.

The one-parameter family sin_p, cos_p, tan_p, sinh_p, cosh_p, tanh_p (p > 1)
is evaluated from the defining integrals by singularity-aware quadrature and
safeguarded inversion, with cancellation-safe series near zero.  On top of the
evaluators sits a grid-based engine that certifies monotonicity claims and
inequality chains with explicit error budgets, plus the ``ptrig`` command line
front end.
"""

from .core import (
    DomainError,
    PoleError,
    PParam,
    TrigValue,
    arcsin_p,
    arsinh_p,
    cos_p,
    cosh_p,
    d_cos_p,
    d_cosh_p,
    d_sin_p,
    d_sinh_p,
    d_tanh_p,
    pi_p,
    sin_p,
    sinh_p,
    tan_p,
    tanh_p,
)
from .inequalities import (
    CANONICAL_DIRECTION,
    EvaluationFailed,
    FunctionId,
    GridSpec,
    SharpConstants,
    VerificationReport,
    bounds_sandwich,
    grid_points,
    is_exploratory,
    lem22_f,
    lem23_g,
    lem24_gap,
    sharp_constants,
    thm1_f,
    thm2_g,
    verify_chain,
    verify_claim,
    verify_monotone,
)
from .numerics import (
    DEFAULT_TOLERANCE,
    Evaluation,
    InvalidInterval,
    NonConvergence,
    NotBracketed,
    NumericsError,
    Tolerance,
    central_diff,
    integrate,
    invert_monotone,
)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_DIRECTION",
    "DEFAULT_TOLERANCE",
    "DomainError",
    "Evaluation",
    "EvaluationFailed",
    "FunctionId",
    "GridSpec",
    "InvalidInterval",
    "NonConvergence",
    "NotBracketed",
    "NumericsError",
    "PParam",
    "PoleError",
    "SharpConstants",
    "Tolerance",
    "TrigValue",
    "VerificationReport",
    "arcsin_p",
    "arsinh_p",
    "bounds_sandwich",
    "central_diff",
    "cos_p",
    "cosh_p",
    "d_cos_p",
    "d_cosh_p",
    "d_sin_p",
    "d_sinh_p",
    "d_tanh_p",
    "grid_points",
    "integrate",
    "invert_monotone",
    "is_exploratory",
    "lem22_f",
    "lem23_g",
    "lem24_gap",
    "pi_p",
    "sharp_constants",
    "sin_p",
    "sinh_p",
    "tan_p",
    "tanh_p",
    "thm1_f",
    "thm2_g",
    "verify_chain",
    "verify_claim",
    "verify_monotone",
    "__version__",
]
