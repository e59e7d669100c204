"""The generalized trigonometric and hyperbolic family for parameter p > 1.

arcsin_p and arsinh_p are the defining integrals

    arcsin_p(x) = integral_0^x (1 - t^p)^(-1/p) dt,   x in [0, 1],
    arsinh_p(x) = integral_0^x (1 + t^p)^(-1/p) dt,   x >= 0,

evaluated by tanh-sinh quadrature; sin_p and sinh_p invert them with
safeguarded Newton iteration, switching to verified reversion series near
zero where inversion would lose the deficit x - sin_p(x) to cancellation.
The remaining functions follow from the identities

    cos_p = (1 - sin_p^p)^(1/p),      cosh_p = (1 + sinh_p^p)^(1/p),

which also force the derivative formulas implemented at the bottom.  The
circular functions are defined on [0, pi_p/2] only (no periodic extension);
the hyperbolic ones on x >= 0 up to floating-point range.

Every public operation returns an :class:`Evaluation` whose abs_err chains
the quadrature estimate, the inversion residual converted through the local
slope, and series truncation, so downstream margin certification can budget
against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from . import series
from .numerics import Evaluation, Tolerance, integrate, invert_monotone

__all__ = [
    "DomainError",
    "PoleError",
    "PParam",
    "TrigValue",
    "pi_p",
    "arcsin_p",
    "sin_p",
    "cos_p",
    "tan_p",
    "arsinh_p",
    "sinh_p",
    "cosh_p",
    "tanh_p",
    "d_sin_p",
    "d_cos_p",
    "d_sinh_p",
    "d_cosh_p",
    "d_tanh_p",
]

_EPS = float(np.finfo(float).eps)

# Series take over where inversion would round away the deficit x - sin_p(x):
# below a fixed x cutoff, and additionally whenever z = x^p is tiny (for
# large p the deficit drops below resolution long before x = 0.05).
_SERIES_X = 0.05
_SERIES_Z = 1e-3

# Half-width of the guard window around the right endpoint inside which
# tan_p reports a pole and the p > 2 derivative singularities refuse.
_POLE_WINDOW = 1e-12

_QUAD_TOL = Tolerance(abs_tol=1e-15, rel_tol=5e-14, max_iter=60)
_INV_TOL = Tolerance(abs_tol=1e-13, rel_tol=1e-13, max_iter=80)

# Geometric bracket growth for sinh_p; beyond this the value itself is about
# to leave floating-point range.
_BRACKET_CAP = 1e300


class DomainError(ValueError):
    """Argument outside the function's domain."""


class PoleError(DomainError):
    """Argument too close to a pole to evaluate meaningfully."""


@dataclass(frozen=True)
class PParam:
    """Validated family parameter; every definition here requires p > 1."""

    p: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", float(self.p))
        if not (math.isfinite(self.p) and self.p > 1.0):
            raise ValueError(f"parameter p must be finite and > 1, got {self.p}")


@dataclass(frozen=True)
class TrigValue:
    """One sampled function value: argument, parameter, evaluation."""

    x: float
    p: PParam
    value: Evaluation


def _pval(p: Union[PParam, float]) -> float:
    if isinstance(p, PParam):
        return p.p
    return PParam(p).p


def _tols(tol: Optional[Tolerance]) -> tuple[Tolerance, Tolerance]:
    """(quadrature, inversion) tolerances for one public call."""
    if tol is None:
        return _QUAD_TOL, _INV_TOL
    itol = Tolerance(tol.abs_tol, tol.rel_tol, max(tol.max_iter, 80))
    return tol, itol


# ---------------------------------------------------------------------------
# Defining integrals


def _circ_integrand(pf: float, b: float):
    """(1 - t^p)^(-1/p) on [0, b], b <= 1; offset-aware near the right end.

    For nodes addressed by their distance to b the power 1 - t^p is formed
    through expm1/log1p, which keeps full relative accuracy as t -> 1 where
    direct subtraction would round to zero.
    """
    logb = math.log(b)

    def f(t: np.ndarray, tc: np.ndarray) -> np.ndarray:
        with np.errstate(all="ignore"):
            t = np.asarray(t, dtype=float)
            tc = np.asarray(tc, dtype=float)
            logt = np.where(tc < 0.0, logb + np.log1p(tc / b), np.log(np.abs(t) + 1e-320))
            one_minus = -np.expm1(pf * logt)
            return np.exp(-np.log(one_minus) / pf)

    return f


def _hyp_integrand(pf: float):
    """(1 + t^p)^(-1/p) on [0, 1]; smooth, bounded by 1."""

    def f(t: np.ndarray) -> np.ndarray:
        with np.errstate(all="ignore"):
            t = np.asarray(t, dtype=float)
            w = pf * np.log(np.abs(t) + 1e-320)
            return np.exp(-np.log1p(np.exp(w)) / pf)

    return f


def _hyp_tail_integrand(pf: float):
    """The same integrand after t = e^u, valid for t >= 1: (1 + e^(-pu))^(-1/p)."""

    def f(u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        return np.exp(-np.log1p(np.exp(-pf * u)) / pf)

    return f


@lru_cache(maxsize=None)
def _arcsin_quad(pf: float, x: float, qtol: Tolerance) -> tuple[float, float]:
    res = integrate(_circ_integrand(pf, x), 0.0, x, qtol, vectorized=True)
    return res.value, res.abs_err


@lru_cache(maxsize=None)
def _arsinh_quad(pf: float, x: float, qtol: Tolerance) -> tuple[float, float]:
    if x <= 1.0:
        res = integrate(_hyp_integrand(pf), 0.0, x, qtol, vectorized=True)
        return res.value, res.abs_err
    base_v, base_e = _arsinh_quad(pf, 1.0, qtol)
    tail = integrate(_hyp_tail_integrand(pf), 0.0, math.log(x), qtol, vectorized=True)
    v = base_v + tail.value
    return v, base_e + tail.abs_err + 2.0 * _EPS * abs(v)


def pi_p(p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """The half-period constant: pi_p = 2 arcsin_p(1).

    Cross-checked in the test suite against the closed form
    2 pi / (p sin(pi/p)).
    """
    pf = _pval(p)
    qtol, _ = _tols(tol)
    v, e = _arcsin_quad(pf, 1.0, qtol)
    return Evaluation(2.0 * v, 2.0 * e)


def arcsin_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """Inverse generalized sine on [0, 1]."""
    pf = _pval(p)
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"arcsin_p requires x in [0, 1], got {x}")
    if x == 0.0:
        return Evaluation(0.0, 0.0)
    qtol, _ = _tols(tol)
    v, e = _arcsin_quad(pf, x, qtol)
    return Evaluation(v, e)


def arsinh_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """Inverse generalized hyperbolic sine on x >= 0."""
    pf = _pval(p)
    if x < 0.0:
        raise DomainError(f"arsinh_p requires x >= 0, got {x}")
    if x == 0.0:
        return Evaluation(0.0, 0.0)
    qtol, _ = _tols(tol)
    v, e = _arsinh_quad(pf, x, qtol)
    return Evaluation(v, e)


# ---------------------------------------------------------------------------
# Inversion: sin_p and sinh_p


def _half_period(pf: float, qtol: Tolerance) -> tuple[float, float]:
    v, e = _arcsin_quad(pf, 1.0, qtol)
    return v, e


def _tail_T(pf: float, om: float, qtol: Tolerance) -> tuple[float, float]:
    """arcsin_p(1) - arcsin_p(s) as a function of om = 1 - s^p.

    Substituting v = om * r in the deficit integral gives the fixed-interval
    form (om^q / p) * integral_0^1 r^(-1/p) (1 - om r)^(-q) dr with
    q = (p-1)/p, which stays well conditioned however tiny om is.
    """
    q = (pf - 1.0) / pf

    def f(r: np.ndarray) -> np.ndarray:
        with np.errstate(all="ignore"):
            r = np.asarray(r, dtype=float)
            return np.exp(-np.log(r) / pf - q * np.log1p(-om * r))

    res = integrate(f, 0.0, 1.0, qtol, vectorized=True)
    pref = math.exp(q * math.log(om)) / pf
    return pref * res.value, pref * res.abs_err


def _endpoint_state(
    pf: float, tau: float, tau_err: float, qtol: Tolerance, itol: Tolerance
) -> tuple[float, float, float, float]:
    """(s, s_err, om, om_err) near the right endpoint, tau = pi_p/2 - x.

    Solved for w = log(om) because the root in s-space can sit closer to 1
    than one ulp; in log space the grid is geometric and Newton keeps full
    relative accuracy all the way into the corner.
    """
    q = (pf - 1.0) / pf
    lead = math.log((pf - 1.0) * max(tau, tau_err, 5e-324)) / q
    if tau <= tau_err or lead < -690.0:
        # Either at/past the endpoint within its own uncertainty, or om is
        # below floating-point range: report the corner with an om band.
        om_ub = math.exp(max(lead, -745.0) + 1.0)
        return 1.0, 2.0 * _EPS, 0.0, om_ub

    # Closed-form bracket: T(om) lies between om^q/(p-1) and that times
    # (1-om)^(-q), so w* = log(om*) is pinned within a padded window.
    w_hi = lead + 1.0
    w_lo = lead - math.log(1.2) / q - 1.0

    def G(w: float) -> float:
        return _tail_T(pf, math.exp(w), qtol)[0] / tau

    def dG(w: float) -> float:
        om = math.exp(w)
        return math.exp(q * (w - math.log1p(-om))) / (pf * tau)

    res = invert_monotone(G, 1.0, w_lo, w_hi, deriv=dG, tol=itol)
    w = res.value
    om = math.exp(w)
    restol = 2.0 * itol.abs_tol + 2.0 * qtol.rel_tol + tau_err / tau
    w_err = 2.0 * restol / dG(w) + 4.0 * _EPS * abs(w)
    om_err = om * min(w_err, 1.0)
    s = math.exp(math.log1p(-om) / pf)
    s_err = om_err / (pf * (1.0 - om)) + 4.0 * _EPS * s
    return s, s_err, om, om_err


# Below this om the inverse is recovered from the endpoint tail integral;
# above it the direct s-space solve has slope om^(-1/p) shallow enough for
# the residual criterion to be meetable in double precision.
_OM_SWITCH = 1e-2


@lru_cache(maxsize=None)
def _sin_state(
    pf: float, x: float, qtol: Tolerance, itol: Tolerance
) -> tuple[float, float, float, float]:
    """(s, s_err, om, om_err) with s = sin_p(x) and om = cos_p(x)^p.

    om is carried separately because 1 - s^p loses all relative accuracy
    once s rounds to 1; every cosine-like quantity downstream feeds on it.
    """
    if x == 0.0:
        return 0.0, 0.0, 1.0, 0.0
    if x < _SERIES_X or x ** pf < _SERIES_Z:
        z = x ** pf
        poly = series.zp(1.0, *series.inverse_coeffs(pf))
        s = x * series.zp_eval(poly, z)
        s_err = x * series.zp_trunc_err(poly, z)
        om = _cos_pow(pf, s)
        return s, s_err, om, pf * s ** (pf - 1.0) * s_err + 2.0 * _EPS * om

    ph_v, ph_e = _half_period(pf, qtol)
    tau = ph_v - x
    tau_err = ph_e + _EPS * ph_v
    q = (pf - 1.0) / pf
    om_pred = math.exp(math.log((pf - 1.0) * max(tau, tau_err)) / q)
    if om_pred < _OM_SWITCH:
        return _endpoint_state(pf, tau, tau_err, qtol, itol)

    def F(s: float) -> float:
        if s <= 0.0:
            return 0.0
        return _arcsin_quad(pf, min(s, 1.0), qtol)[0]

    def dF(s: float) -> float:
        if s <= 0.0:
            return 1.0
        om = _cos_pow(pf, s)
        return math.inf if om == 0.0 else math.exp(-math.log(om) / pf)

    res = invert_monotone(F, x, 0.0, 1.0, deriv=dF, tol=itol)
    s = res.value
    # Residual tolerance back through the slope: dF >= 1, so the x-space
    # residual bounds the s-space error directly; add the quadrature band.
    restol = itol.abs_tol * (1.0 + abs(x)) + 2.0 * qtol.rel_tol * abs(x)
    s_err = 2.0 * restol * _cos_val(pf, s) + 4.0 * _EPS * s
    om = _cos_pow(pf, s)
    om_err = pf * s ** (pf - 1.0) * s_err + 2.0 * _EPS * om
    return s, s_err, om, om_err


@lru_cache(maxsize=None)
def _sinh_raw(pf: float, x: float, qtol: Tolerance, itol: Tolerance) -> tuple[float, float]:
    """sinh_p(x) with an error bound, for x >= 0."""
    if x == 0.0:
        return 0.0, 0.0
    if x < _SERIES_X or (x < 1.0 and x ** pf < _SERIES_Z):
        z = x ** pf
        poly = series.zp(1.0, *series.hyper_inverse_coeffs(pf))
        return x * series.zp_eval(poly, z), x * series.zp_trunc_err(poly, z)

    def F(s: float) -> float:
        return 0.0 if s <= 0.0 else _arsinh_quad(pf, s, qtol)[0]

    def dF(s: float) -> float:
        return 1.0 if s <= 0.0 else math.exp(-_log_cosh(pf, s))

    hi = 2.0 * x
    while F(hi) < x:
        hi *= 4.0
        if hi > _BRACKET_CAP:
            raise DomainError(f"sinh_p({x}) exceeds floating-point range")

    res = invert_monotone(F, x, x, hi, deriv=dF, tol=itol)
    s = res.value
    restol = itol.abs_tol * (1.0 + abs(x)) + 2.0 * qtol.rel_tol * abs(x)
    s_err = 2.0 * restol * math.exp(_log_cosh(pf, s)) + 4.0 * _EPS * s
    return s, s_err


def _cos_pow(pf: float, s: float) -> float:
    """cos_p^p = 1 - s^p at full relative accuracy, for s = sin_p value."""
    if s <= 0.0:
        return 1.0
    if s >= 1.0:
        return 0.0
    return -math.expm1(pf * math.log(s))


def _cos_val(pf: float, s: float) -> float:
    om = _cos_pow(pf, s)
    return 0.0 if om == 0.0 else math.exp(math.log(om) / pf)


def _log_cosh(pf: float, s: float) -> float:
    """log cosh_p from the sinh_p value s, safe for huge s^p."""
    if s <= 0.0:
        return 0.0
    ls = math.log(s)
    if s > 1.0:
        return ls + math.log1p(math.exp(-pf * ls)) / pf
    return math.log1p(math.exp(pf * ls)) / pf


def _domain_upper(pf: float, qtol: Tolerance) -> tuple[float, float]:
    ph_v, ph_e = _half_period(pf, qtol)
    return ph_v, ph_e + 4.0 * _EPS * ph_v


def sin_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """Generalized sine on [0, pi_p/2]; increasing from 0 to 1."""
    pf = _pval(p)
    qtol, itol = _tols(tol)
    ph_v, slack = _domain_upper(pf, qtol)
    if not (0.0 <= x <= ph_v + slack):
        raise DomainError(f"sin_p requires x in [0, pi_p/2 = {ph_v}], got {x}")
    s, s_err, _, _ = _sin_state(pf, x, qtol, itol)
    return Evaluation(min(s, 1.0), s_err)


def _cos_from_state(pf: float, om: float, om_err: float) -> Evaluation:
    if om <= 0.0:
        return Evaluation(0.0, om_err ** (1.0 / pf))
    c = math.exp(math.log(om) / pf)
    # Linearized propagation, capped by the full enclosure width when the
    # relative uncertainty of om is not small.
    lin = c * om_err / (pf * om)
    cap = (om + om_err) ** (1.0 / pf) - max(om - om_err, 0.0) ** (1.0 / pf)
    return Evaluation(c, min(lin, cap) + 4.0 * _EPS * c)


def cos_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """Generalized cosine (1 - sin_p^p)^(1/p); decreasing from 1 to 0."""
    pf = _pval(p)
    qtol, itol = _tols(tol)
    ph_v, slack = _domain_upper(pf, qtol)
    if not (0.0 <= x <= ph_v + slack):
        raise DomainError(f"cos_p requires x in [0, pi_p/2 = {ph_v}], got {x}")
    _, _, om, om_err = _sin_state(pf, x, qtol, itol)
    return _cos_from_state(pf, om, om_err)


def tan_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """sin_p/cos_p on [0, pi_p/2); raises PoleError against the right end."""
    pf = _pval(p)
    qtol, itol = _tols(tol)
    ph_v, slack = _domain_upper(pf, qtol)
    if not (0.0 <= x <= ph_v + slack):
        raise DomainError(f"tan_p requires x in [0, pi_p/2 = {ph_v}), got {x}")
    if x > ph_v - _POLE_WINDOW:
        raise PoleError(f"tan_p pole: x = {x} within {_POLE_WINDOW} of pi_p/2 = {ph_v}")
    if x == 0.0:
        return Evaluation(0.0, 0.0)
    s, s_err, om, om_err = _sin_state(pf, x, qtol, itol)
    c = _cos_from_state(pf, om, om_err)
    if c.value == 0.0:
        raise PoleError(f"tan_p pole: cos_p vanished at x = {x}")
    v = s / c.value
    rel = s_err / s + c.abs_err / c.value
    return Evaluation(v, abs(v) * rel + 4.0 * _EPS * abs(v))


def sinh_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """Generalized hyperbolic sine on x >= 0; sinh_p(x) > x for x > 0."""
    pf = _pval(p)
    if x < 0.0:
        raise DomainError(f"sinh_p requires x >= 0, got {x}")
    qtol, itol = _tols(tol)
    v, e = _sinh_raw(pf, x, qtol, itol)
    return Evaluation(v, e)


def _snap_to_identity(pf: float, s: float, v: float) -> float:
    """Move v onto the double nearest the root of v^p = 1 + s^p (integer p only).

    The log/exp route carries a relative error of a few ulp scaled by |log|,
    which the p-th power then amplifies by p.  For integer p the defining
    equation is rational, so one Newton step in exact arithmetic lands within
    half an ulp of the true root; exp rounding no longer leaks into the
    residual 1 + sinh_p^p - cosh_p^p.
    """
    n = int(pf)
    if float(n) != pf or not 2 <= n <= 64:
        return v
    if s <= 0.0 or v <= 1.0 or not math.isfinite(v):
        return v
    fv = Fraction(v)
    r = fv ** n - (1 + Fraction(s) ** n)
    if r == 0:
        return v
    return float(fv - r / (n * fv ** (n - 1)))


def cosh_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """Generalized hyperbolic cosine (1 + sinh_p^p)^(1/p) >= 1."""
    pf = _pval(p)
    if x < 0.0:
        raise DomainError(f"cosh_p requires x >= 0, got {x}")
    qtol, itol = _tols(tol)
    s, s_err = _sinh_raw(pf, x, qtol, itol)
    lch = _log_cosh(pf, s)
    v = _snap_to_identity(pf, s, math.exp(lch))
    # d cosh/d sinh = tanh^(p-1) <= 1.
    slope = 1.0 if s == 0.0 else math.exp((pf - 1.0) * (math.log(s) - lch))
    return Evaluation(v, slope * s_err + 4.0 * _EPS * v)


def tanh_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """sinh_p/cosh_p on x >= 0, with values in [0, 1)."""
    pf = _pval(p)
    if x < 0.0:
        raise DomainError(f"tanh_p requires x >= 0, got {x}")
    qtol, itol = _tols(tol)
    s, s_err = _sinh_raw(pf, x, qtol, itol)
    if s == 0.0:
        return Evaluation(0.0, 0.0)
    lch = _log_cosh(pf, s)
    v = math.exp(math.log(s) - lch)
    return Evaluation(v, s_err * math.exp(-lch) + 4.0 * _EPS * v)


# ---------------------------------------------------------------------------
# Closed-form derivatives


def d_sin_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """d/dx sin_p = cos_p."""
    return cos_p(x, p, tol)


def d_cos_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """d/dx cos_p = -cos_p^(2-p) sin_p^(p-1); singular at pi_p/2 when p > 2."""
    pf = _pval(p)
    qtol, itol = _tols(tol)
    ph_v, slack = _domain_upper(pf, qtol)
    if not (0.0 <= x <= ph_v + slack):
        raise DomainError(f"d_cos_p requires x in [0, pi_p/2 = {ph_v}], got {x}")
    if pf > 2.0 and x > ph_v - _POLE_WINDOW:
        raise DomainError(
            f"d_cos_p is singular at pi_p/2 for p > 2 (x = {x}, pi_p/2 = {ph_v})"
        )
    if x == 0.0:
        return Evaluation(0.0, 0.0)
    s, s_err, om, om_err = _sin_state(pf, x, qtol, itol)
    c = _cos_from_state(pf, om, om_err)
    if c.value == 0.0:  # reachable only for p <= 2; the p = 2 case is -sin_p
        v = -(s ** (pf - 1.0)) if pf == 2.0 else 0.0
        return Evaluation(v, pf * s_err + om_err ** (1.0 / pf) + 4.0 * _EPS)
    v = -math.exp((2.0 - pf) * math.log(c.value) + (pf - 1.0) * math.log(s))
    rel = (
        abs(2.0 - pf) * c.abs_err / c.value
        + (pf - 1.0) * s_err / s
        + 4.0 * _EPS
    )
    return Evaluation(v, abs(v) * rel)


def d_sinh_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """d/dx sinh_p = cosh_p."""
    return cosh_p(x, p, tol)


def d_cosh_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """d/dx cosh_p = cosh_p^(2-p) sinh_p^(p-1) (forced by the identity)."""
    pf = _pval(p)
    if x < 0.0:
        raise DomainError(f"d_cosh_p requires x >= 0, got {x}")
    qtol, itol = _tols(tol)
    s, s_err = _sinh_raw(pf, x, qtol, itol)
    if s == 0.0:
        return Evaluation(0.0, (pf - 1.0) * s_err)
    lch = _log_cosh(pf, s)
    v = math.exp((2.0 - pf) * lch + (pf - 1.0) * math.log(s))
    rel = (abs(2.0 - pf) + (pf - 1.0)) * (s_err / s) + 4.0 * _EPS
    return Evaluation(v, v * rel)


def d_tanh_p(x: float, p: Union[PParam, float], tol: Optional[Tolerance] = None) -> Evaluation:
    """d/dx tanh_p = 1 - tanh_p^p."""
    pf = _pval(p)
    if x < 0.0:
        raise DomainError(f"d_tanh_p requires x >= 0, got {x}")
    qtol, itol = _tols(tol)
    s, s_err = _sinh_raw(pf, x, qtol, itol)
    if s == 0.0:
        return Evaluation(1.0, pf * s_err + 4.0 * _EPS)
    lch = _log_cosh(pf, s)
    lth = math.log(s) - lch
    v = -math.expm1(pf * lth)
    t_err = s_err * math.exp(-lch)
    return Evaluation(v, pf * math.exp((pf - 1.0) * lth) * t_err + 4.0 * _EPS)
