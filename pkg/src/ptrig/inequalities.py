"""Inequality functionals for the p-trigonometric family, with a verifier.

The scalar functionals compare sin_p, sinh_p and cosh_p against the identity
near zero; each one is a ratio whose monotonicity encodes a family of sharp
exponential bounds:

    thm1_f  = log(x/sin_p(x)) / log(sinh_p(x)/x)         increasing, from 1
    thm2_g  = log(x/sin_p(x)) / log(cosh_p(x))           increasing, alpha..beta
    lem22_f = p sin_p log(x/sin_p) / (sin_p - x cos_p)   decreasing, from 1
    lem23_g = p sinh_p log(sinh_p/x) / (x cosh_p - sinh_p)  increasing, 1..p
    lem24_gap = log cosh_p - (x/p) tanh_p^(p-1)          positive for x > 0

with alpha = 1/(1+p) and beta = log(pi_p/2) / log(cosh_p(pi_p/2)).

Every numerator and denominator above vanishes like x^p or x^(p+1), so for
z = x^p below a switch point the functionals and all inequality margins are
evaluated from truncated z-series (see :mod:`.series`); adjacent chain
members whose difference loses its leading z order are differenced in
coefficient space, never in value space.  Above the switch the evaluators'
log-space primitives take over.

The verification engine samples claims on grids of strictly interior points
and certifies strict inequalities as margin > combined error budget.  A
margin inside the budget is inconclusive and fails the certificate; it is
never reported as a counterexample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from . import series
from .core import (
    DomainError,
    PoleError,
    PParam,
    _domain_upper,
    _log_cosh,
    _pval,
    _sin_state,
    _sinh_raw,
    _tols,
    cosh_p,
    pi_p,
)
from .numerics import Evaluation, NonConvergence, NotBracketed

__all__ = [
    "FunctionId",
    "GridSpec",
    "GridPoint",
    "VerificationReport",
    "SharpConstants",
    "EvaluationFailed",
    "CANONICAL_DIRECTION",
    "grid_points",
    "sharp_constants",
    "thm1_f",
    "thm2_g",
    "lem22_f",
    "lem23_g",
    "lem24_gap",
    "verify_chain",
    "verify_monotone",
    "bounds_sandwich",
    "verify_claim",
    "is_exploratory",
]

_EPS = float(np.finfo(float).eps)

# Below z = x^p of this size, series evaluation; above, log primitives.  The
# 4-term truncation bound is ~25 z^3 relative, so the switch sits where that
# drops under ~1e-6 while direct-route cancellation (~eps/z) stays above 1e-13.
_Z_SWITCH = 4e-3
# Below this z even the leading series term denormalizes; return exact limits.
_Z_FLOOR = 1e-290

_HYP_UPPER = 3.0


class FunctionId(Enum):
    """Claim identifiers: five scalar functionals and five inequality chains."""

    THM1_F = "THM1_F"
    THM2_G = "THM2_G"
    LEM22_F = "LEM22_F"
    LEM23_G = "LEM23_G"
    LEM24_GAP = "LEM24_GAP"
    COROLLARY_CHAIN = "COROLLARY_CHAIN"
    THM1_CHAIN = "THM1_CHAIN"
    THM2_CHAIN = "THM2_CHAIN"
    LEM22_CHAIN = "LEM22_CHAIN"
    LEM23_CHAIN = "LEM23_CHAIN"

    def __str__(self) -> str:
        return self.value


_CHAIN_TAGS = frozenset(
    {
        FunctionId.COROLLARY_CHAIN,
        FunctionId.THM1_CHAIN,
        FunctionId.THM2_CHAIN,
        FunctionId.LEM22_CHAIN,
        FunctionId.LEM23_CHAIN,
    }
)

# Claims sampled on (0, pi_p/2); the rest live on the hyperbolic interval.
_CIRCULAR_TAGS = frozenset(
    {
        FunctionId.THM1_F,
        FunctionId.THM2_G,
        FunctionId.LEM22_F,
        FunctionId.THM1_CHAIN,
        FunctionId.THM2_CHAIN,
        FunctionId.LEM22_CHAIN,
        FunctionId.COROLLARY_CHAIN,
    }
)

CANONICAL_DIRECTION = {
    FunctionId.THM1_F: "increasing",
    FunctionId.THM2_G: "increasing",
    FunctionId.LEM22_F: "decreasing",
    FunctionId.LEM23_G: "increasing",
    FunctionId.LEM24_GAP: "increasing",
}


class EvaluationFailed(RuntimeError):
    """A verification run hit a point the evaluators could not certify."""

    def __init__(self, claim: str, x: float, p: float, cause: BaseException) -> None:
        super().__init__(f"{claim}: evaluation failed at x={x!r}, p={p!r}: {cause}")
        self.claim = claim
        self.x = x
        self.p = p
        self.cause = cause


_CORE_ERRORS = (DomainError, PoleError, NonConvergence, NotBracketed, OverflowError)


@dataclass(frozen=True)
class GridSpec:
    """Sampling grid: n strictly interior points, offsets as interval fractions."""

    n: int = 200
    spacing: str = "cosine"
    left_offset: float = 1e-4
    right_offset: float = 1e-4

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 3:
            raise ValueError(f"GridSpec.n must be an integer >= 3, got {self.n!r}")
        if self.spacing not in ("uniform", "log", "cosine"):
            raise ValueError(f"GridSpec.spacing must be uniform|log|cosine, got {self.spacing!r}")
        for name, off in (("left_offset", self.left_offset), ("right_offset", self.right_offset)):
            if not (isinstance(off, (int, float)) and math.isfinite(off) and off >= 1e-4):
                raise ValueError(f"GridSpec.{name} must be a finite fraction >= 1e-4, got {off!r}")
        if self.left_offset + self.right_offset >= 1.0:
            raise ValueError("GridSpec offsets consume the whole interval")


def grid_points(spec: GridSpec, lo: float, hi: float) -> np.ndarray:
    """Strictly increasing points inside (lo, hi) as the GridSpec prescribes."""
    if not (math.isfinite(lo) and math.isfinite(hi)) or not hi > lo:
        raise ValueError(f"invalid interval ({lo}, {hi})")
    width = hi - lo
    a = lo + spec.left_offset * width
    b = hi - spec.right_offset * width
    if spec.spacing == "uniform":
        return np.linspace(a, b, spec.n)
    if spec.spacing == "log":
        if a <= 0.0:
            raise ValueError("log spacing requires a positive left edge")
        return np.geomspace(a, b, spec.n)
    k = np.arange(spec.n)
    t = 0.5 * (1.0 - np.cos(np.pi * k / (spec.n - 1)))
    return a + (b - a) * t


@dataclass(frozen=True)
class GridPoint:
    x: float
    values: tuple
    margin: float


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    p: float
    points: tuple
    min_margin: float
    monotone_verdict: str
    passed: bool
    error_budget: float

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "p": self.p,
            "passed": self.passed,
            "min_margin": self.min_margin,
            "monotone_verdict": self.monotone_verdict,
            "points": [
                {"x": pt.x, "margin": pt.margin, "values": list(pt.values)}
                for pt in self.points
            ],
        }


@dataclass(frozen=True)
class SharpConstants:
    """alpha = 1/(1+p) exactly; beta computed from pi_p and cosh_p."""

    alpha: float
    beta: float
    p: PParam

    def __post_init__(self) -> None:
        if self.p.p >= 2.0 and not 0.0 < self.alpha < self.beta < 1.0:
            raise ValueError(
                f"sharp constants out of order: alpha={self.alpha}, beta={self.beta}"
            )


@lru_cache(maxsize=None)
def _consts(pf: float) -> tuple:
    """(alpha, beta, beta_err, lam, lam_err) with lam = log(pi_p/2)."""
    qtol, _ = _tols(None)
    half = pi_p(pf)
    ph, ph_err = half.value / 2.0, half.abs_err / 2.0
    ch = cosh_p(ph, pf)
    lch = math.log(ch.value)
    lam = math.log(ph)
    lam_err = ph_err / ph + 2.0 * _EPS * abs(lam)
    beta = lam / lch
    beta_err = (
        lam_err / lch
        + abs(beta) * (ch.abs_err / ch.value) / lch
        + 4.0 * _EPS * abs(beta)
    )
    alpha = 1.0 / (1.0 + pf)
    return alpha, beta, beta_err, lam, lam_err


def sharp_constants(p: Union[PParam, float]) -> SharpConstants:
    pf = _pval(p)
    alpha, beta, _, _, _ = _consts(pf)
    return SharpConstants(alpha=alpha, beta=beta, p=PParam(pf))


# ---------------------------------------------------------------------------
# log-space primitives with error bounds, for the direct (z above switch) route

def _l1(pf: float, x: float, qtol, itol) -> tuple:
    """log(x / sin_p(x)) > 0."""
    s, s_err, _, _ = _sin_state(pf, x, qtol, itol)
    v = -math.log1p((s - x) / x)
    return v, (s_err + 2.0 * _EPS * (s + x)) / s


def _l4(pf: float, x: float, qtol, itol) -> tuple:
    """-log cos_p(x) > 0."""
    _, _, om, om_err = _sin_state(pf, x, qtol, itol)
    if om <= 0.0:
        raise PoleError(f"cos_p vanished at x = {x}")
    v = -math.log(om) / pf
    return v, om_err / (pf * om) + 2.0 * _EPS * abs(v)


def _l2(pf: float, x: float, qtol, itol) -> tuple:
    """log(sinh_p(x) / x) > 0."""
    sh, sh_err = _sinh_raw(pf, x, qtol, itol)
    v = math.log1p((sh - x) / x)
    return v, (sh_err + 2.0 * _EPS * (sh + x)) / sh


def _l3(pf: float, x: float, qtol, itol) -> tuple:
    """log cosh_p(x) > 0."""
    sh, sh_err = _sinh_raw(pf, x, qtol, itol)
    v = _log_cosh(pf, sh)
    # d log cosh_p / d sinh_p = sinh^(p-1) / (1 + sinh^p)
    w = math.exp((pf - 1.0) * math.log(sh) - pf * v)
    return v, sh_err * w + 4.0 * _EPS * v


def _dee(pf: float, x: float, qtol, itol) -> tuple:
    """(sin_p - x cos_p) / sin_p = 1 - x cos_p/sin_p, positive on the domain."""
    l1v, l1e = _l1(pf, x, qtol, itol)
    l4v, l4e = _l4(pf, x, qtol, itol)
    g = l1v - l4v
    return -math.expm1(g), math.exp(g) * (l1e + l4e)


def _ee(pf: float, x: float, qtol, itol) -> tuple:
    """(x cosh_p - sinh_p) / sinh_p = x/tanh_p - 1, positive for x > 0."""
    l2v, l2e = _l2(pf, x, qtol, itol)
    l3v, l3e = _l3(pf, x, qtol, itol)
    g = l3v - l2v
    return math.expm1(g), math.exp(g) * (l2e + l3e)


def _series_z(pf: float, x: float) -> Optional[float]:
    """z = x^p when the series route applies at x, else None."""
    if x < 1.0:
        z = x ** pf
        if z < _Z_SWITCH:
            return z
    return None


def _ratio(num: float, num_err: float, den: float, den_err: float, scale: float = 1.0) -> Evaluation:
    v = scale * (num / den)
    rel = num_err / abs(num) + den_err / abs(den)
    return Evaluation(v, abs(v) * rel + 2.0 * _EPS * abs(v))


def _require_circular(pf: float, x: float, qtol) -> None:
    ph_v, _ = _domain_upper(pf, qtol)
    if not 0.0 < x < ph_v:
        raise DomainError(f"x must lie strictly inside (0, pi_p/2 = {ph_v}), got {x}")


def _require_positive(x: float) -> None:
    if not x > 0.0:
        raise DomainError(f"x must be positive, got {x}")


def thm1_f(x: float, p: Union[PParam, float]) -> Evaluation:
    """log(x/sin_p(x)) / log(sinh_p(x)/x); increasing on (0, pi_p/2) from 1."""
    pf = _pval(p)
    qtol, itol = _tols(None)
    _require_circular(pf, x, qtol)
    z = _series_z(pf, x)
    if z is not None:
        if z <= _Z_FLOOR:
            return Evaluation(1.0, 4.0 * _EPS)
        sz = series.primitives(pf)
        return _ratio(
            series.zp_eval(sz.l1, z),
            series.zp_trunc_err(sz.l1, z),
            series.zp_eval(sz.l2, z),
            series.zp_trunc_err(sz.l2, z),
        )
    n, ne = _l1(pf, x, qtol, itol)
    d, de = _l2(pf, x, qtol, itol)
    return _ratio(n, ne, d, de)


def thm2_g(x: float, p: Union[PParam, float]) -> Evaluation:
    """log(x/sin_p(x)) / log(cosh_p(x)); increasing on (0, pi_p/2) from 1/(1+p)."""
    pf = _pval(p)
    qtol, itol = _tols(None)
    _require_circular(pf, x, qtol)
    z = _series_z(pf, x)
    if z is not None:
        alpha = 1.0 / (1.0 + pf)
        if z <= _Z_FLOOR:
            return Evaluation(alpha, 4.0 * _EPS * alpha)
        sz = series.primitives(pf)
        return _ratio(
            series.zp_eval(sz.l1, z),
            series.zp_trunc_err(sz.l1, z),
            series.zp_eval(sz.l3, z),
            series.zp_trunc_err(sz.l3, z),
        )
    n, ne = _l1(pf, x, qtol, itol)
    d, de = _l3(pf, x, qtol, itol)
    return _ratio(n, ne, d, de)


def lem22_f(x: float, p: Union[PParam, float]) -> Evaluation:
    """p sin_p log(x/sin_p) / (sin_p - x cos_p); decreasing on (0, pi_p/2) from 1."""
    pf = _pval(p)
    qtol, itol = _tols(None)
    _require_circular(pf, x, qtol)
    z = _series_z(pf, x)
    if z is not None:
        if z <= _Z_FLOOR:
            return Evaluation(1.0, 4.0 * _EPS)
        sz = series.primitives(pf)
        return _ratio(
            series.zp_eval(sz.l1, z),
            series.zp_trunc_err(sz.l1, z),
            series.zp_eval(sz.d, z),
            series.zp_trunc_err(sz.d, z),
            scale=pf,
        )
    n, ne = _l1(pf, x, qtol, itol)
    d, de = _dee(pf, x, qtol, itol)
    return _ratio(n, ne, d, de, scale=pf)


def lem23_g(x: float, p: Union[PParam, float]) -> Evaluation:
    """p sinh_p log(sinh_p/x) / (x cosh_p - sinh_p); increasing on (0, inf), 1 to p."""
    pf = _pval(p)
    qtol, itol = _tols(None)
    _require_positive(x)
    z = _series_z(pf, x)
    if z is not None:
        if z <= _Z_FLOOR:
            return Evaluation(1.0, 4.0 * _EPS)
        sz = series.primitives(pf)
        return _ratio(
            series.zp_eval(sz.l2, z),
            series.zp_trunc_err(sz.l2, z),
            series.zp_eval(sz.e, z),
            series.zp_trunc_err(sz.e, z),
            scale=pf,
        )
    n, ne = _l2(pf, x, qtol, itol)
    d, de = _ee(pf, x, qtol, itol)
    return _ratio(n, ne, d, de, scale=pf)


def lem24_gap(x: float, p: Union[PParam, float]) -> Evaluation:
    """log cosh_p(x) - (x/p) tanh_p(x)^(p-1), strictly positive for x > 0."""
    pf = _pval(p)
    qtol, itol = _tols(None)
    _require_positive(x)
    z = _series_z(pf, x)
    if z is not None:
        if z <= _Z_FLOOR:
            return Evaluation(0.0, 0.0)
        sz = series.primitives(pf)
        return Evaluation(series.zp_eval(sz.lem24, z), series.zp_trunc_err(sz.lem24, z))
    sh, sh_err = _sinh_raw(pf, x, qtol, itol)
    l3v, l3e = _l3(pf, x, qtol, itol)
    t = math.exp((pf - 1.0) * (math.log(sh) - l3v))
    t_err = t * (pf - 1.0) * (sh_err / sh + l3e)
    v = l3v - (x / pf) * t
    err = l3e + (x / pf) * t_err + 2.0 * _EPS * (l3v + (x / pf) * t)
    return Evaluation(v, err)


_FUNCTIONALS = {
    FunctionId.THM1_F: thm1_f,
    FunctionId.THM2_G: thm2_g,
    FunctionId.LEM22_F: lem22_f,
    FunctionId.LEM23_G: lem23_g,
    FunctionId.LEM24_GAP: lem24_gap,
}


# ---------------------------------------------------------------------------
# chains

def _interval(tag: FunctionId, pf: float) -> tuple:
    if tag in _CIRCULAR_TAGS:
        qtol, _ = _tols(None)
        ph_v, _ = _domain_upper(pf, qtol)
        return 0.0, ph_v
    return 0.0, _HYP_UPPER


@lru_cache(maxsize=None)
def _chain_polys(tag: FunctionId, pf: float) -> tuple:
    """Term log-polynomials in z, const-error weights, and zero_coeff'd gaps.

    Returns (polys, cerr_polys, gap_polys, gap_cerrs) where gap k spans the
    pair (k, k+1).  Pairs whose leading z coefficient cancels analytically
    carry the cancellation removed exactly; evaluating that difference
    polynomial is what keeps margins certifiable down to z ~ 1e-290.
    """
    sz = series.primitives(pf)
    alpha, beta, beta_err, lam, lam_err = _consts(pf)
    zero = series.zp()
    if tag is FunctionId.THM1_CHAIN:
        polys = [-pf * sz.l2, -sz.l1, -sz.l2]
        cerrs = [zero, zero, zero]
        degenerate = {1}
    elif tag is FunctionId.THM2_CHAIN:
        polys = [-beta * sz.l3, -sz.l1, -alpha * sz.l3]
        cerrs = [beta_err * np.abs(sz.l3), zero, _EPS * alpha * np.abs(sz.l3)]
        degenerate = {1}
    elif tag is FunctionId.LEM22_CHAIN:
        polys = [-sz.d / pf, -sz.l1, -lam * sz.d]
        cerrs = [zero, zero, lam_err * np.abs(sz.d)]
        degenerate = {0}
    elif tag is FunctionId.LEM23_CHAIN:
        polys = [sz.e / pf, sz.l2, sz.e]
        cerrs = [zero, zero, zero]
        degenerate = {0}
    elif tag is FunctionId.COROLLARY_CHAIN:
        polys = [-beta * sz.l4, -beta * sz.l3, -sz.l1, -alpha * sz.l3, zero]
        cerrs = [
            beta_err * np.abs(sz.l4),
            beta_err * np.abs(sz.l3),
            zero,
            _EPS * alpha * np.abs(sz.l3),
            zero,
        ]
        degenerate = {0, 2}
    else:
        raise ValueError(f"{tag} is not a chain claim")
    gap_polys = []
    gap_cerrs = []
    for k in range(len(polys) - 1):
        gp = polys[k + 1] - polys[k]
        gc = cerrs[k] + cerrs[k + 1]
        if k in degenerate:
            gp = series.zero_coeff(gp, 1)
            # The z^1 coefficient cancels for the exact constants, so their
            # representation error carries no z^1 term either.
            gc = gc.copy()
            gc[1] = 0.0
        gap_polys.append(gp)
        gap_cerrs.append(gc)
    return tuple(polys), tuple(cerrs), tuple(gap_polys), tuple(gap_cerrs)


def _chain_logs(tag: FunctionId, pf: float, x: float, qtol, itol) -> list:
    """Term logs [(value, err), ...] at x via the direct route."""
    alpha, beta, beta_err, lam, lam_err = _consts(pf)
    if tag is FunctionId.THM1_CHAIN:
        l1 = _l1(pf, x, qtol, itol)
        l2 = _l2(pf, x, qtol, itol)
        return [(-pf * l2[0], pf * l2[1]), (-l1[0], l1[1]), (-l2[0], l2[1])]
    if tag is FunctionId.THM2_CHAIN:
        l1 = _l1(pf, x, qtol, itol)
        l3 = _l3(pf, x, qtol, itol)
        return [
            (-beta * l3[0], beta * l3[1] + beta_err * l3[0]),
            (-l1[0], l1[1]),
            (-alpha * l3[0], alpha * l3[1] + _EPS * alpha * l3[0]),
        ]
    if tag is FunctionId.LEM22_CHAIN:
        l1 = _l1(pf, x, qtol, itol)
        d = _dee(pf, x, qtol, itol)
        return [
            (-d[0] / pf, d[1] / pf),
            (-l1[0], l1[1]),
            (-lam * d[0], lam * d[1] + lam_err * d[0]),
        ]
    if tag is FunctionId.LEM23_CHAIN:
        l2 = _l2(pf, x, qtol, itol)
        e = _ee(pf, x, qtol, itol)
        return [(e[0] / pf, e[1] / pf), (l2[0], l2[1]), (e[0], e[1])]
    if tag is FunctionId.COROLLARY_CHAIN:
        l1 = _l1(pf, x, qtol, itol)
        l3 = _l3(pf, x, qtol, itol)
        l4 = _l4(pf, x, qtol, itol)
        return [
            (-beta * l4[0], beta * l4[1] + beta_err * l4[0]),
            (-beta * l3[0], beta * l3[1] + beta_err * l3[0]),
            (-l1[0], l1[1]),
            (-alpha * l3[0], alpha * l3[1] + _EPS * alpha * l3[0]),
            (0.0, 0.0),
        ]
    raise ValueError(f"{tag} is not a chain claim")


def _chain_point(tag: FunctionId, pf: float, x: float, qtol, itol) -> tuple:
    """(term values, pair margins, pair budgets) at one grid point.

    Margins are value-space gaps T_(k+1) - T_k computed as T_k expm1(gap_k)
    with gap_k the log-space difference, so a tiny gap between O(1) terms
    never passes through a float subtraction of the terms themselves.
    """
    z = _series_z(pf, x)
    if z is not None:
        polys, cerrs, gap_polys, gap_cerrs = _chain_polys(tag, pf)
        logs = [
            (series.zp_eval(q, z), series.zp_trunc_err(q, z) + series.zp_eval(c, z))
            for q, c in zip(polys, cerrs)
        ]
        gaps = [
            (series.zp_eval(q, z), series.zp_trunc_err(q, z) + series.zp_eval(c, z))
            for q, c in zip(gap_polys, gap_cerrs)
        ]
    else:
        logs = _chain_logs(tag, pf, x, qtol, itol)
        gaps = [
            (logs[k + 1][0] - logs[k][0], logs[k][1] + logs[k + 1][1])
            for k in range(len(logs) - 1)
        ]
    values = [math.exp(lv) for lv, _ in logs]
    margins = []
    budgets = []
    for k, (gv, ge) in enumerate(gaps):
        t, t_err = values[k], values[k] * logs[k][1]
        m = t * math.expm1(gv)
        budget = (
            t * math.exp(min(max(gv, 0.0), 50.0)) * ge
            + t_err * abs(math.expm1(gv))
            + 4.0 * _EPS * abs(m)
        )
        margins.append(m)
        budgets.append(budget)
    return values, margins, budgets


def _decide(margin: float, budget: float) -> Optional[bool]:
    """True/False when decisive beyond the budget, None when inconclusive."""
    if margin > budget:
        return True
    if margin < -budget:
        return False
    return None


def _thm2_routes_agree(pf: float, x: float, margins: list, budgets: list) -> None:
    """Cross-check the chain against alpha < thm2_g < beta at the same point.

    Chain pair 0 is cosh^-beta vs sin/x (sign of beta - g); pair 1 is sin/x
    vs cosh^-alpha (sign of g - alpha).  A decisive disagreement between the
    two routes means the point cannot be reported either way.
    """
    alpha, beta, beta_err, _, _ = _consts(pf)
    g = thm2_g(x, pf)
    route2 = [
        _decide(beta - g.value, g.abs_err + beta_err),
        _decide(g.value - alpha, g.abs_err + _EPS * alpha),
    ]
    chain = [_decide(m, b) for m, b in zip(margins, budgets)]
    for k, (a, b) in enumerate(zip(chain, route2)):
        if a is not None and b is not None and a != b:
            raise EvaluationFailed(
                "THM2_CHAIN", x, pf,
                RuntimeError(f"chain and sharp-exponent routes disagree at pair {k}"),
            )


def verify_chain(
    claim: FunctionId,
    p: Union[PParam, float],
    grid: Optional[GridSpec] = None,
) -> VerificationReport:
    """Certify every adjacent inequality of a chain on a grid.

    passed requires each pair's value-space margin to exceed its error budget
    at every point.  For THM2_CHAIN the equivalent sharp-exponent bounds
    alpha < thm2_g < beta are checked alongside and must agree pointwise.
    """
    if claim not in _CHAIN_TAGS:
        raise ValueError(f"{claim} is not a chain claim")
    pf = _pval(p)
    grid = grid or GridSpec()
    qtol, itol = _tols(None)
    lo, hi = _interval(claim, pf)
    xs = grid_points(grid, lo, hi)

    points = []
    passed = True
    min_margin = math.inf
    budget_at_min = 0.0
    for x in xs:
        xf = float(x)
        try:
            values, margins, budgets = _chain_point(claim, pf, xf, qtol, itol)
        except _CORE_ERRORS as exc:
            raise EvaluationFailed(claim.value, xf, pf, exc) from exc
        if claim is FunctionId.THM2_CHAIN:
            _thm2_routes_agree(pf, xf, margins, budgets)
        point_margin = min(margins)
        k = margins.index(point_margin)
        if not point_margin > budgets[k]:
            passed = False
        if point_margin < min_margin:
            min_margin = point_margin
            budget_at_min = budgets[k]
        points.append(GridPoint(x=xf, values=tuple(values), margin=point_margin))
    return VerificationReport(
        claim=claim.value,
        p=pf,
        points=tuple(points),
        min_margin=min_margin,
        monotone_verdict="not_checked",
        passed=passed,
        error_budget=budget_at_min,
    )


def verify_monotone(
    claim: FunctionId,
    p: Union[PParam, float],
    grid: Optional[GridSpec] = None,
    direction: Optional[str] = None,
) -> VerificationReport:
    """Check that a functional moves in `direction` along the grid.

    The verdict tolerates reversals inside the shared error budget (reported
    as the claimed direction but leaving passed=false via the margin rule);
    a reversal beyond the budget yields verdict "violated".
    """
    if claim not in _FUNCTIONALS:
        raise ValueError(f"{claim} does not name a scalar functional")
    if direction is None:
        direction = CANONICAL_DIRECTION[claim]
    if direction not in ("increasing", "decreasing"):
        raise ValueError(f"direction must be increasing|decreasing, got {direction!r}")
    pf = _pval(p)
    grid = grid or GridSpec()
    fn = _FUNCTIONALS[claim]
    lo, hi = _interval(claim, pf)
    xs = grid_points(grid, lo, hi)

    evs = []
    for x in xs:
        xf = float(x)
        try:
            evs.append(fn(xf, pf))
        except _CORE_ERRORS as exc:
            raise EvaluationFailed(claim.value, xf, pf, exc) from exc

    sign = 1.0 if direction == "increasing" else -1.0
    points = []
    verdict = direction
    passed = True
    min_margin = math.inf
    budget_at_min = 0.0
    for k in range(len(xs) - 1):
        margin = sign * (evs[k + 1].value - evs[k].value)
        budget = evs[k].abs_err + evs[k + 1].abs_err
        if margin < -budget:
            verdict = "violated"
        if not margin > budget:
            passed = False
        if margin < min_margin:
            min_margin = margin
            budget_at_min = budget
        points.append(GridPoint(x=float(xs[k]), values=(evs[k].value,), margin=margin))
    if verdict != direction:
        passed = False
    return VerificationReport(
        claim=claim.value,
        p=pf,
        points=tuple(points),
        min_margin=min_margin,
        monotone_verdict=verdict,
        passed=passed,
        error_budget=budget_at_min,
    )


def _verify_positive(claim: FunctionId, pf: float, grid: GridSpec) -> VerificationReport:
    fn = _FUNCTIONALS[claim]
    lo, hi = _interval(claim, pf)
    xs = grid_points(grid, lo, hi)
    points = []
    passed = True
    min_margin = math.inf
    budget_at_min = 0.0
    for x in xs:
        xf = float(x)
        try:
            ev = fn(xf, pf)
        except _CORE_ERRORS as exc:
            raise EvaluationFailed(claim.value, xf, pf, exc) from exc
        if not ev.value > ev.abs_err:
            passed = False
        if ev.value < min_margin:
            min_margin = ev.value
            budget_at_min = ev.abs_err
        points.append(GridPoint(x=xf, values=(ev.value,), margin=ev.value))
    return VerificationReport(
        claim=claim.value,
        p=pf,
        points=tuple(points),
        min_margin=min_margin,
        monotone_verdict="not_checked",
        passed=passed,
        error_budget=budget_at_min,
    )


def bounds_sandwich(p: Union[PParam, float], grid: Optional[GridSpec] = None) -> VerificationReport:
    """Certify 1 < thm1_f < p and alpha < thm2_g < beta at every grid point.

    The four distances to the bounds are the certified margins; below the
    series switch each distance is evaluated from its own difference
    polynomial, because e.g. thm1_f - 1 vanishes like z while thm1_f itself
    rounds to 1.0 long before that.
    """
    pf = _pval(p)
    grid = grid or GridSpec()
    qtol, itol = _tols(None)
    alpha, beta, beta_err, _, _ = _consts(pf)
    lo, hi = _interval(FunctionId.THM1_F, pf)
    xs = grid_points(grid, lo, hi)

    sz = series.primitives(pf)
    # f - 1, p - f over l2; g - alpha, beta - g over l3 (coefficient space).
    f_low = series.zero_coeff(sz.l1 - sz.l2, 1)
    f_high = pf * sz.l2 - sz.l1
    g_low = series.zero_coeff(sz.l1 - alpha * sz.l3, 1)
    g_high = beta * sz.l3 - sz.l1

    points = []
    passed = True
    min_margin = math.inf
    budget_at_min = 0.0
    for x in xs:
        xf = float(x)
        try:
            z = _series_z(pf, xf)
            if z is not None and z > _Z_FLOOR:
                l2v = series.zp_eval(sz.l2, z)
                l2e = series.zp_trunc_err(sz.l2, z)
                l3v = series.zp_eval(sz.l3, z)
                l3e = series.zp_trunc_err(sz.l3, z)
                fv = series.zp_eval(sz.l1, z) / l2v
                gv = series.zp_eval(sz.l1, z) / l3v
                margins = [
                    series.zp_eval(f_low, z) / l2v,
                    series.zp_eval(f_high, z) / l2v,
                    series.zp_eval(g_low, z) / l3v,
                    series.zp_eval(g_high, z) / l3v,
                ]
                budgets = [
                    (series.zp_trunc_err(f_low, z) + abs(margins[0]) * l2e) / l2v,
                    (series.zp_trunc_err(f_high, z) + abs(margins[1]) * l2e) / l2v,
                    (series.zp_trunc_err(g_low, z) + abs(margins[2]) * l3e) / l3v,
                    (series.zp_trunc_err(g_high, z) + beta_err * l3v + abs(margins[3]) * l3e) / l3v,
                ]
            elif z is not None:
                fv, gv = 1.0, alpha
                margins = [0.0, pf - 1.0, 0.0, beta - alpha]
                budgets = [4.0 * _EPS, 4.0 * _EPS * pf, 4.0 * _EPS, beta_err]
            else:
                f = thm1_f(xf, pf)
                g = thm2_g(xf, pf)
                fv, gv = f.value, g.value
                margins = [fv - 1.0, pf - fv, gv - alpha, beta - gv]
                budgets = [
                    f.abs_err + 2.0 * _EPS,
                    f.abs_err + 2.0 * _EPS * pf,
                    g.abs_err + 2.0 * _EPS * alpha,
                    g.abs_err + beta_err,
                ]
        except _CORE_ERRORS as exc:
            raise EvaluationFailed("BOUNDS_SANDWICH", xf, pf, exc) from exc
        point_margin = min(margins)
        k = margins.index(point_margin)
        if not point_margin > budgets[k]:
            passed = False
        if point_margin < min_margin:
            min_margin = point_margin
            budget_at_min = budgets[k]
        points.append(GridPoint(x=xf, values=(fv, gv), margin=point_margin))
    return VerificationReport(
        claim="BOUNDS_SANDWICH",
        p=pf,
        points=tuple(points),
        min_margin=min_margin,
        monotone_verdict="not_checked",
        passed=passed,
        error_budget=budget_at_min,
    )


def verify_claim(
    claim: Union[FunctionId, str],
    p: Union[PParam, float],
    grid: Optional[GridSpec] = None,
) -> VerificationReport:
    """Dispatch a claim to its verifier (chain, positivity, or monotonicity)."""
    if isinstance(claim, str):
        try:
            claim = FunctionId[claim.upper()]
        except KeyError:
            raise ValueError(f"unknown claim {claim!r}") from None
    if claim in _CHAIN_TAGS:
        return verify_chain(claim, p, grid)
    if claim is FunctionId.LEM24_GAP:
        return _verify_positive(claim, _pval(p), grid or GridSpec())
    return verify_monotone(claim, p, grid)


def is_exploratory(claim: Union[FunctionId, str], p: Union[PParam, float]) -> bool:
    """True when p sits outside the certified hypotheses for the claim.

    Only the positivity of lem24_gap is certified down to p > 1; every other
    claim assumes p >= 2, and runs below that are reported, never asserted.
    """
    if isinstance(claim, str):
        claim = FunctionId[claim.upper()]
    return _pval(p) < 2.0 and claim is not FunctionId.LEM24_GAP
