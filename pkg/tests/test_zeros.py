"""Zero-counting coefficients, the density kernel, and threshold pairs."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebotarev import (
    ALPHA1,
    ALPHA2,
    ALPHA3,
    DomainError,
    FieldParams,
    P_E_L,
    Q_kernel,
    Q_kernel_partial_u,
    ZeroFreeConstants,
    alpha0,
    alpha0_prime,
    c123,
    minkowski_lookup,
    solve_omega0,
    solve_t0,
    window_coeffs,
)
from chebotarev.reference_values import matches_printed


class TestZeroFreeConstants:
    def test_with_exceptional_zero(self):
        zf = ZeroFreeConstants(True)
        assert (zf.R1, zf.R2) == (20.0, 12.2411)
        assert zf.alpha4 == 1.7
        assert zf.a_beta0 == 1

    def test_without_exceptional_zero(self):
        zf = ZeroFreeConstants(False)
        assert zf.alpha4 == 2.0
        assert zf.a_beta0 == 2


class TestC123:
    def test_unit_arguments_collapse(self):
        c1, c2, c3 = c123(1.0, 1.0, 0.0)
        assert c1 == 2.5
        assert c3 == 10.0  # both square roots collapse at T = 0
        assert math.isclose(c2, 2.5 * math.log(3) + 5 * (1 + 539 / 268), rel_tol=1e-14)

    def test_window_eps_matches_published_b3(self):
        c1, _, _ = c123(1.0, 1.1814, 3.0)
        assert abs(2 * c1 - 4.8743) < 1e-4

    def test_divergence_in_eps(self):
        c1_small, _, _ = c123(0.5, 1.0, 0.0)
        c1_large, _, _ = c123(0.5, 1e6, 0.0)
        assert c1_large > 1e5 > c1_small

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            c123(0.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            c123(1.0, -1.0, 0.0)


class TestAlpha0:
    def test_anchor_values_degree_two(self):
        row = minkowski_lookup(2)
        assert matches_printed(alpha0(1.0, row), "40.1778")
        assert matches_printed(alpha0(0.5, row), "36.0416")

    def test_anchor_top_row(self):
        row = minkowski_lookup(21)
        assert matches_printed(alpha0(2.0, row), "12.4297")

    def test_nondecreasing_in_T(self):
        for n0 in (2, 7, 21):
            row = minkowski_lookup(n0)
            vals = [alpha0(t, row) for t in (0.5, 0.75, 1.0, 1.5, 2.0)]
            assert vals == sorted(vals)

    def test_matches_independent_optimizer(self):
        # cross-check the grid+golden minimizer with a general-purpose one
        from scipy.optimize import minimize_scalar

        for n0 in (2, 9, 21):
            row = minkowski_lookup(n0)
            for T in (0.5, 1.0, 2.0):

                def B(eps):
                    c1v, c2v, c3v = c123(T, eps, 0.0)
                    return c1v + c2v * row.M + c3v / row.log_d0

                res = minimize_scalar(B, bounds=(1e-3, 50.0), method="bounded",
                                      options={"xatol": 1e-12})
                assert abs(alpha0(T, row) - res.fun) <= 1e-6 * res.fun

    def test_rejects_nonpositive_T(self):
        with pytest.raises(DomainError):
            alpha0(0.0, minkowski_lookup(2))


class TestAlpha0Prime:
    def test_anchors(self):
        row2 = minkowski_lookup(2)
        row21 = minkowski_lookup(21)
        assert matches_printed(alpha0_prime(1.0, row2), "45.0838")
        assert matches_printed(alpha0_prime(2.0, row2), "44.8487")
        assert matches_printed(alpha0_prime(2.0, row21), "10.4694")

    def test_crossover_with_alpha0(self):
        # the explicit-formula count wins at T = 1, the counting theorem at T = 2
        for n0 in (2, 21):
            row = minkowski_lookup(n0)
            assert alpha0(1.0, row) < alpha0_prime(1.0, row)
            assert alpha0_prime(2.0, row) < alpha0(2.0, row)

    def test_rejects_T_below_one(self):
        with pytest.raises(DomainError):
            alpha0_prime(0.5, minkowski_lookup(2))


class TestWindowCoeffs:
    def test_published_values(self):
        assert window_coeffs() == (8.0818, 27.8581, 4.8743, 9.3052)

    def test_recomputation_within_one_rounding_unit(self):
        # independent transcription; the stored values round the raw ones
        # at the fourth decimal
        eps0 = 1.1814
        c1, _, _ = c123(1.0, eps0, 0.0)
        _, _, c3 = c123(1.0, eps0, 3.0)
        raw = (
            2 * c1 * (1 + math.log(1 + (2 + eps0) / 3) / math.log(3)),
            4 * c1 * (1 / eps0 + 539 / 268),
            2 * c1,
            2 * c3,
        )
        for r, stored in zip(raw, window_coeffs()):
            assert abs(stored - r) < 1e-4


class TestCountingTheorem:
    def test_main_term_at_2_pi_e(self):
        f = FieldParams.from_discriminant(3, 23.0)
        P, _ = P_E_L(2 * math.pi * math.e, f)
        assert math.isclose(P, 2 * math.e * f.log_dL, rel_tol=1e-13)

    def test_error_term_frozen_value(self):
        # alpha1 log3 + 2 alpha2 + alpha3 = 50.98648...
        f = FieldParams.from_discriminant(2, 3.0)
        _, E = P_E_L(1.0, f)
        oracle = ALPHA1 * math.log(3.0) + 2 * ALPHA2 + ALPHA3
        assert math.isclose(E, oracle, rel_tol=1e-14)
        assert math.isclose(E, 50.9865, rel_tol=1e-5)

    def test_bound_increasing_in_T(self):
        # P_L + E_L increases on T >= 1 once log d_L >= n_L (log(2 pi e) - 1);
        # below that the main term still dips near T = 1
        f = FieldParams.from_discriminant(2, 50.0)
        assert f.log_dL >= f.n_L * (math.log(2 * math.pi * math.e) - 1)
        vals = [sum(P_E_L(t, f)) for t in (1.0, 1.5, 2.0, 5.0, 17.0, 100.0)]
        assert vals == sorted(vals)


def q_regrouped(u: float, t: float, f: FieldParams) -> float:
    # second printed form, grouped by log d_L and n_L
    l2pe = math.log(2 * math.pi * math.e)
    return (
        ((u - t) / math.pi + 2 * ALPHA1) * f.log_dL
        + (
            (u / math.pi) * (math.log(u) - l2pe)
            - (t / math.pi) * (math.log(t) - l2pe)
            + ALPHA1 * math.log(u * t)
            + 2 * ALPHA2
        )
        * f.n_L
        + 2 * ALPHA3
    )


class TestQKernel:
    def test_diagonal_is_twice_error_term(self):
        f = FieldParams.from_discriminant(2, 3.0)
        for t in (1.0, 2.0, 40.0):
            _, E = P_E_L(t, f)
            assert math.isclose(Q_kernel(t, t, f), 2 * E, rel_tol=1e-12)

    def test_equals_regrouped_form(self):
        f = FieldParams.from_discriminant(2, 3.0)
        assert math.isclose(Q_kernel(5.0, 2.0, f), q_regrouped(5.0, 2.0, f), rel_tol=1e-10)

    @given(
        st.floats(min_value=1.0, max_value=1e5),
        st.floats(min_value=1.0, max_value=1e5),
        st.sampled_from([2, 3, 8, 21]),
        st.floats(min_value=1.0, max_value=4.0),
    )
    @settings(max_examples=150, deadline=None)
    def test_regrouped_form_property(self, a, b, n0, scale):
        u, t = max(a, b), min(a, b)
        row = minkowski_lookup(n0)
        f = FieldParams(n0, max(row.n0 / row.M, row.log_d0) * scale)
        q1 = Q_kernel(u, t, f)
        q2 = q_regrouped(u, t, f)
        assert math.isclose(q1, q2, rel_tol=1e-10, abs_tol=1e-8)

    def test_partial_matches_central_difference(self):
        f = FieldParams.from_discriminant(2, 5.0)
        u, t, h = 11.0, 3.0, 1e-5
        fd = (Q_kernel(u + h, t, f) - Q_kernel(u - h, t, f)) / (2 * h)
        assert abs(Q_kernel_partial_u(u, f) - fd) < 1e-6

    def test_rejects_bad_ordering(self):
        f = FieldParams.from_discriminant(2, 5.0)
        with pytest.raises(DomainError):
            Q_kernel(1.0, 2.0, f)


class TestThresholdPairs:
    def test_anchors(self):
        assert matches_printed(solve_t0(1.0), "39.217")
        assert matches_printed(solve_omega0(1.0), "291.601")

    def test_round_trip(self):
        assert math.isclose(solve_omega0(solve_t0(5.0)), 5.0, rel_tol=1e-5)

    def test_strictly_decreasing(self):
        ts = [2.0 + 98.0 * k / 60 for k in range(61)]
        vals = [solve_omega0(t) for t in ts]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            solve_omega0(0.5)
        with pytest.raises(DomainError):
            solve_t0(0.5)
