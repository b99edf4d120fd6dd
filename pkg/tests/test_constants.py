"""Low-index constants ell_0..ell_5, tuning configurations, and Y_0."""

import math

import pytest

from chebotarev import (
    DomainError,
    TuningConfig,
    compute_ells,
    ell_low,
    standard_config,
    y0,
    y0_terms,
)
from chebotarev.constants import alpha_coefficient
from chebotarev.zeros import R1, R2, alpha0, alpha0_prime


def ell_low_retranscribed(cfg: TuningConfig) -> tuple[float, ...]:
    """Independent re-transcription of the six closed forms."""
    row = cfg.row
    M, n0, d0, lx0, T0 = row.M, row.n0, cfg.delta0, cfg.x0_log, cfg.T0
    a1, a2, a3 = 0.228, 23.108, 4.520
    a0_1 = alpha0(1.0, row)
    a0_h = alpha0(0.5, row)
    a0p2 = alpha0_prime(2.0, row)

    l0 = 2 / math.log(2) * (1 + math.log(1 + d0) / lx0)
    l1 = (3.1430 + 3 * a0_1) / lx0 + M * (
        1
        + d0 / (2 * (1 - d0) * lx0)
        + math.exp(-2 * (math.log(1 - d0) + lx0)) / lx0
        + 48.3969 / lx0
        + 11.54 / (n0 * lx0)
    )
    l2 = 1 + d0 / (2 * (1 - d0) * lx0)
    l3 = cfg.zf.alpha4 * ((2 + d0) / 2 + math.exp(-lx0 / 2)) * a0_h / 2
    l4 = (
        (2 + d0)
        / 2
        * (1 + math.exp((-1 + 2 / (R1 * n0 * (1 / M + math.log(4)))) * lx0))
        * (a0_1 + a0p2)
        / 2
    )
    lt = math.log(T0)
    l5 = (
        (2 + d0)
        / 4
        * (1 + math.exp((-1 + 2 / (R2 * n0 * (1 / M + lt))) * lx0))
        * (
            (math.log(T0 - 1) - 1) / (math.pi * lt**2)
            + a1 * T0 / (lt**2 * (T0 - 1))
            + (T0 + 1) / (math.pi * (T0 - 1) * lt**2)
            + M
            * (
                1 / (2 * math.pi)
                + (T0 + 1) * math.log(T0 + 1) / (math.pi * (T0 - 1) * lt**2)
                + a1 * math.log(T0 + 1) / ((T0 - 1) * lt**2)
                + a3 * T0 / ((T0 - 1) * n0 * lt**2)
                + (
                    0.683 / math.pi
                    + 0.92 * a1
                    - math.log(2 * math.pi * math.e) / math.pi * ((T0 + 1) / (T0 - 1) - math.log(2))
                    + math.log(math.pi * math.e) / math.pi
                    + a1 * math.log(2) / 2
                    + a2 * T0 / (T0 - 1)
                )
                / lt**2
            )
        )
    )
    return l0, l1, l2, l3, l4, l5


class TestTuningConfig:
    def test_standard_pins_alpha_and_x0(self):
        cfg = standard_config(2, True)
        M = cfg.row.M
        assert math.isclose(
            cfg.alpha,
            max(
                4 * R1**2 / R2 * (math.log(4) * M + 1) ** 2,
                4 * R2 * (math.log(40.0) * M + 1) ** 2,
            ),
            rel_tol=1e-14,
        )
        assert math.isclose(cfg.x0_log, cfg.alpha * 2 / M**2, rel_tol=1e-14)

    def test_alpha_anchor(self):
        from chebotarev.reference_values import matches_printed

        alpha = alpha_coefficient(1.82048, 40.0)
        assert matches_printed(alpha, "2914.82")
        # both branches by hand: 130.707*(1.38629*M+1)^2 = 1623.2 loses to
        # 48.9644*(3.68888*M+1)^2 = 2914.8225
        assert math.isclose(alpha, 2914.8225, rel_tol=1e-7)

    def test_inconsistent_alpha_rejected(self):
        cfg = standard_config(2, True)
        with pytest.raises(DomainError):
            TuningConfig(
                m=1, delta0=cfg.delta0, omega0=1.0, t0=40.0, T0=40.0,
                alpha=cfg.alpha * 1.01, x0_log=cfg.x0_log, row=cfg.row, zf=cfg.zf,
            )

    def test_T0_ordering_enforced(self):
        cfg = standard_config(2, True)
        with pytest.raises(DomainError):
            TuningConfig(
                m=1, delta0=cfg.delta0, omega0=1.0, t0=40.0, T0=39.0,
                alpha=cfg.alpha, x0_log=cfg.x0_log, row=cfg.row, zf=cfg.zf,
            )


class TestEllLow:
    def test_small_delta_large_x0_limits(self):
        # delta0 -> 0, x0 -> inf: l0 -> 2/log 2, l2 -> 1
        cfg = standard_config(2, True).with_delta0(1e-12)
        l0, _, l2, _, _, _ = ell_low(cfg)
        assert math.isclose(l0, 2 / math.log(2), rel_tol=1e-9)
        assert math.isclose(l2, 1.0, rel_tol=1e-9)

    @pytest.mark.parametrize("n0", [2, 5, 13, 21])
    @pytest.mark.parametrize("present", [True, False])
    def test_second_transcription(self, n0, present):
        cfg = standard_config(n0, present)
        got = ell_low(cfg)
        want = ell_low_retranscribed(cfg)
        for g, w in zip(got, want):
            assert math.isclose(g, w, rel_tol=1e-10)

    def test_all_rows_positive_finite(self):
        for n0 in range(2, 22):
            for present in (True, False):
                ells = compute_ells(standard_config(n0, present))
                for i in range(8):
                    v = getattr(ells, f"l{i}")
                    assert math.isfinite(v) and v > 0, (n0, present, i)

    def test_ell1_printed_constant_block(self):
        # the 3 alpha0(1) piece must track the zero-counting module
        cfg = standard_config(2, True)
        l1 = ell_low(cfg)[1]
        a0_1 = alpha0(1.0, cfg.row)
        residue = l1 - (3.1430 + 3 * a0_1) / cfg.x0_log
        # what remains is the M(...) block, positive and close to M
        assert 0 < residue - cfg.row.M < cfg.row.M * 0.1


class TestY0:
    def test_all_seven_summands_positive(self):
        for n0 in (2, 12, 21):
            for present in (True, False):
                cfg = standard_config(n0, present)
                ells = compute_ells(cfg)
                terms = y0_terms(cfg, ells)
                assert len(terms) == 7
                # x0^-1-damped summands underflow to exactly 0.0 here, which
                # is their true magnitude at these x0; require nonnegative
                assert all(t >= 0 for t in terms)
                assert terms[3] > 0 and terms[4] > 0 and terms[6] > 0

    def test_y0_consistency(self):
        cfg = standard_config(2, True)
        ells = compute_ells(cfg)
        t = y0_terms(cfg, ells)
        assert math.isclose(ells.Y0, sum(t[:5]) * cfg.delta0 + t[5] + t[6], rel_tol=1e-14)
        assert math.isclose(ells.Y0, y0(cfg, ells), rel_tol=1e-14)

    def test_increasing_in_delta0(self):
        base = standard_config(2, True)
        vals = []
        for d in (1e-4, 1e-3, 1e-2, 0.1, 0.5):
            cfg = base.with_delta0(d)
            vals.append(compute_ells(cfg).Y0)
        assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_anchor_degree_two(self):
        # Y0 drives E3 = 2 sqrt(Y0) = 0.44511 downstream
        ells = compute_ells(standard_config(2, True))
        assert math.isclose(2 * math.sqrt(ells.Y0), 0.44511, rel_tol=2e-5)
