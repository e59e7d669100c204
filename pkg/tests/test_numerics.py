"""Quadrature, inversion, and differencing against closed forms."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptrig.numerics import (
    DEFAULT_TOLERANCE,
    Evaluation,
    InvalidInterval,
    NonConvergence,
    NotBracketed,
    Tolerance,
    central_diff,
    integrate,
    invert_monotone,
)

PI_3 = 2.0 * math.pi / (3.0 * math.sin(math.pi / 3.0))  # closed form for the p=3 half-period


class TestDataTypes:
    def test_tolerance_defaults(self):
        t = Tolerance()
        assert t.abs_tol == 1e-12 and t.rel_tol == 1e-12 and t.max_iter == 60

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"abs_tol": 0.0},
            {"abs_tol": 1.0},
            {"abs_tol": -1e-9},
            {"rel_tol": 0.0},
            {"rel_tol": 2.0},
            {"max_iter": 0},
        ],
    )
    def test_tolerance_rejects(self, kwargs):
        with pytest.raises(ValueError):
            Tolerance(**kwargs)

    def test_evaluation_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            Evaluation(math.nan, 0.0)
        with pytest.raises(ValueError):
            Evaluation(math.inf, 0.0)
        with pytest.raises(ValueError):
            Evaluation(1.0, -1e-16)
        with pytest.raises(ValueError):
            Evaluation(1.0, math.nan)


class TestIntegrate:
    def test_constant(self):
        res = integrate(lambda t: 1.0, 0.0, 1.0)
        assert abs(res.value - 1.0) <= res.abs_err
        assert res.abs_err < 1e-12

    def test_cubic_moment(self):
        res = integrate(lambda t: 3.0 * t * t, 0.0, 1.0)
        assert abs(res.value - 1.0) <= max(res.abs_err, 4e-16)

    def test_classical_arcsine_singularity_one_arg(self):
        # One-argument integrands cannot resolve the last ~1e-16 of the
        # interval, so request a modest tolerance and check honesty.
        def f(t):
            u = 1.0 - t * t
            return u ** -0.5 if u > 0.0 else math.inf

        res = integrate(f, 0.0, 1.0, Tolerance(1e-6, 1e-6, 60))
        assert abs(res.value - math.pi / 2.0) <= res.abs_err

    def test_classical_arcsine_singularity_two_arg(self):
        # The offset argument keeps sub-ulp endpoint resolution: full accuracy.
        def f(t, tc):
            u = -tc * (2.0 - (-tc)) if tc < 0.0 else 1.0 - t * t  # 1-t^2 via (1-t)(1+t)
            return u ** -0.5

        res = integrate(f, 0.0, 1.0, Tolerance(1e-12, 1e-12, 60))
        assert abs(res.value - math.pi / 2.0) <= res.abs_err
        assert res.abs_err < 2e-12

    def test_p3_defining_integral(self):
        def f(t, tc):
            if tc < 0.0:
                one_minus = -math.expm1(3.0 * math.log1p(tc))  # t = 1 + tc exactly
            else:
                one_minus = 1.0 - t ** 3
            return one_minus ** (-1.0 / 3.0)

        res = integrate(f, 0.0, 1.0, Tolerance(1e-12, 1e-12, 60))
        assert abs(res.value - PI_3 / 2.0) <= max(res.abs_err, 1e-13)

    def test_left_endpoint_singularity(self):
        def f(x, xc):
            return xc ** -0.5 if xc > 0.0 else (x - 1.0) ** -0.5

        res = integrate(f, 1.0, 2.0, Tolerance(1e-12, 1e-12, 60))
        assert abs(res.value - 2.0) <= res.abs_err

    @pytest.mark.parametrize("tol", [1e-6, 1e-9, 1e-12])
    def test_reported_error_is_honest(self, tol):
        cases = [
            (lambda t: 1.0, 0.0, 1.0, 1.0),
            (lambda t: math.cos(t), 0.0, 1.0, math.sin(1.0)),
            (
                lambda t, tc: (-tc * (2.0 + tc)) ** -0.5 if tc < 0.0 else (1.0 - t * t) ** -0.5,
                0.0,
                1.0,
                math.pi / 2.0,
            ),
        ]
        for f, a, b, exact in cases:
            res = integrate(f, a, b, Tolerance(tol, tol, 60))
            assert abs(res.value - exact) <= res.abs_err
            assert res.abs_err <= 10.0 * tol * max(1.0, abs(exact))

    def test_vectorized_matches_scalar(self):
        scalar = integrate(lambda t: math.exp(-t), 0.0, 2.0)
        vector = integrate(lambda t: np.exp(-t), 0.0, 2.0, vectorized=True)
        assert scalar.value == vector.value
        assert abs(scalar.value - (1.0 - math.exp(-2.0))) <= scalar.abs_err

    def test_zero_mean_integrand(self):
        res = integrate(lambda t: t - 0.5, 0.0, 1.0)
        assert abs(res.value) <= max(res.abs_err, 1e-15)

    @pytest.mark.parametrize("a,b", [(1.0, 1.0), (2.0, 1.0), (0.0, math.inf)])
    def test_invalid_interval(self, a, b):
        with pytest.raises(InvalidInterval):
            integrate(lambda t: 1.0, a, b)

    def test_nonconvergence_on_jump(self):
        with pytest.raises(NonConvergence):
            integrate(lambda t: 0.0 if t < 1.0 / 3.0 else 1.0, 0.0, 1.0, Tolerance(1e-12, 1e-12, 60))

    @given(
        st.floats(-2.0, 0.0),
        st.floats(0.1, 1.0),
        st.floats(0.1, 1.0),
    )
    @settings(max_examples=25, deadline=None, derandomize=True)
    def test_additivity(self, a, gap1, gap2):
        b = a + gap1
        c = b + gap2
        f = lambda t: t ** 3 - 2.0 * t + 1.0
        whole = integrate(f, a, c)
        left = integrate(f, a, b)
        right = integrate(f, b, c)
        assert abs(whole.value - left.value - right.value) <= (
            whole.abs_err + left.abs_err + right.abs_err + 4e-16
        )


class TestInvertMonotone:
    def test_cube_root(self):
        res = invert_monotone(lambda x: x ** 3, 8.0, 0.0, 3.0)
        assert abs(res.value - 2.0) <= max(res.abs_err, 1e-10)

    def test_cube_root_newton(self):
        res = invert_monotone(
            lambda x: x ** 3, 8.0, 0.0, 3.0, deriv=lambda x: 3.0 * x * x
        )
        assert abs(res.value - 2.0) <= 1e-10

    def test_decreasing_function(self):
        res = invert_monotone(lambda x: -x ** 3, -8.0, 0.0, 3.0)
        assert abs(res.value - 2.0) <= 1e-10

    def test_endpoint_solution(self):
        res = invert_monotone(math.asin, math.pi / 2.0, 0.0, 1.0)
        assert res.value == 1.0

    def test_arcsin3_inversion_against_tabulation(self):
        def arcsin3(s):
            if s == 0.0:
                return 0.0

            def f(t, tc):
                if tc < 0.0:  # t = s + tc exactly; keeps 1 - t^3 accurate as s -> 1
                    one_minus = -math.expm1(3.0 * (math.log(s) + math.log1p(tc / s)))
                else:
                    one_minus = 1.0 - t ** 3
                return one_minus ** (-1.0 / 3.0)

            return integrate(f, 0.0, s, Tolerance(1e-13, 1e-13, 60)).value

        res = invert_monotone(arcsin3, 0.5, 0.0, 1.0, tol=Tolerance(1e-12, 1e-12, 80))

        # Independent oracle: dense trapezoid tabulation plus interpolation.
        s = np.linspace(0.0, 1.0 - 1e-9, 1_000_001)
        g = (1.0 - s ** 3) ** (-1.0 / 3.0)
        F = np.concatenate(([0.0], np.cumsum(0.5 * (g[1:] + g[:-1]) * np.diff(s))))
        oracle = float(np.interp(0.5, F, s))
        assert abs(res.value - oracle) <= 1e-8

    def test_not_bracketed(self):
        with pytest.raises(NotBracketed):
            invert_monotone(lambda x: x ** 3, 100.0, 0.0, 3.0)

    def test_invalid_bracket(self):
        with pytest.raises(InvalidInterval):
            invert_monotone(lambda x: x, 0.0, 1.0, 1.0)

    def test_nonconvergence_budget(self):
        with pytest.raises(NonConvergence):
            invert_monotone(lambda x: x ** 3, 8.0, 0.0, 3.0, tol=Tolerance(1e-14, 1e-14, 3))

    @given(
        st.floats(1.0, 2.0),
        st.floats(-1.0, 1.0),
        st.booleans(),
    )
    @settings(max_examples=50, deadline=None, derandomize=True)
    def test_round_trip(self, c, x_true, use_deriv):
        f = lambda x: x ** 3 + c * x
        deriv = (lambda x: 3.0 * x * x + c) if use_deriv else None
        tol = Tolerance(1e-12, 1e-12, 80)
        res = invert_monotone(f, f(x_true), -1.2, 1.2, deriv=deriv, tol=tol)
        assert abs(res.value - x_true) <= 10.0 * tol.abs_tol


class TestCentralDiff:
    def test_quadratic(self):
        assert abs(central_diff(lambda x: x * x, 1.0, 1e-5) - 2.0) <= 1e-9

    def test_sine_at_zero(self):
        assert abs(central_diff(math.sin, 0.0, 1e-5) - 1.0) <= 1e-10

    def test_rejects_bad_step(self):
        with pytest.raises(ValueError):
            central_diff(math.sin, 0.0, 0.0)
        with pytest.raises(ValueError):
            central_diff(math.sin, 0.0, -1e-5)
