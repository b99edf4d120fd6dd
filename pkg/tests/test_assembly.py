"""Final constants, the delta0 search, classical constants, bound
evaluation, and table generation."""

import math

import pytest

from chebotarev import (
    BoundForm,
    ClassicalBranch,
    Delta0Mode,
    DomainError,
    FieldParams,
    bound_eval,
    choose_delta0,
    classical_constants,
    corollary_constants,
    curly_N0,
    diff_table,
    final_constants,
    generate_table,
    lambda_L,
    standard_config,
)
from chebotarev.assembly import B0_FULL, B0_REFINED, classical_a0_grid, _finals_cached
from chebotarev.constants import compute_ells
from chebotarev.reference_values import matches_printed, parse_printed
from chebotarev.zeros import R2


class TestFinalConstants:
    def test_degree_two_present_anchors(self):
        f = _finals_cached(2, True)
        assert matches_printed(f.alpha, "2914.82")
        assert matches_printed(f.x0_log, "1759")
        assert matches_printed(f.max_E12, "0.28649")
        assert matches_printed(f.E3, "0.44511")
        assert matches_printed(f.E3_tilde, "0.27134")
        assert matches_printed(f.N0, "2.003")

    def test_degree_two_absent_anchors(self):
        f = _finals_cached(2, False)
        assert matches_printed(f.max_E12, "0.20275")
        assert matches_printed(f.E3, "0.31501")
        assert matches_printed(f.E3_tilde, "0.19203")

    def test_log_form_anchors(self):
        f = _finals_cached(2, True)
        assert matches_printed(f.D12, "1.5568")
        assert matches_printed(f.D3, "2.4187")
        assert matches_printed(f.D3_tilde, "1.4744")

    def test_classical_anchors(self):
        f = _finals_cached(2, True)
        assert matches_printed(f.C12, "1.952E-3")
        assert matches_printed(f.C3, "3.674E-2")
        assert matches_printed(f.C3_tilde, "1.813E-3")
        assert matches_printed(f.exp_coeff_full, "0.26730")
        assert matches_printed(f.exp_coeff_half, "0.27656")

    def test_exp_coeff_ordering(self):
        f = _finals_cached(2, True)
        assert f.exp_coeff_full < f.exp_coeff_half < 1 / math.sqrt(R2)

    def test_exp_coeff_closed_form(self):
        f = _finals_cached(2, True)
        assert math.isclose(
            f.exp_coeff_full, 1 / math.sqrt(12.2411) - 1 / math.sqrt(f.alpha), rel_tol=1e-12
        )

    def test_k_range_enforced(self):
        cfg = standard_config(2, True)
        final_constants(cfg, k=3)  # admissible: k_max ~ 3.74
        with pytest.raises(DomainError):
            final_constants(cfg, k=4)

    def test_tilde_matches_general_from_degree_five(self):
        # lambda_0 takes its first branch from degree 3 on, making
        # E3~ = E2 exactly; the published tables show equality from n0 = 5
        # where E2 also dominates E1
        for n0 in (5, 9, 17):
            f = _finals_cached(n0, True)
            assert math.isclose(f.E3_tilde, f.E2, rel_tol=1e-12)
            assert f.max_E12 == f.E2


class TestCurlyN0:
    def test_anchor_degree_two(self):
        f = _finals_cached(2, True)
        assert matches_printed(f.N0, "2.003")

    def test_top_row_anchors(self):
        assert matches_printed(_finals_cached(21, True).N0, "654.650")
        assert matches_printed(_finals_cached(21, False).N0, "519.59")

    def test_rejects_nonpositive_Y0(self):
        cfg = standard_config(2, True)
        with pytest.raises(DomainError):
            curly_N0(cfg, 0.0)


class TestChooseDelta0:
    def test_reproduce_returns_input(self):
        assert choose_delta0(2, True, Delta0Mode.REPRODUCE, 2.26e-3) == 2.26e-3

    def test_reproduce_default_is_published(self):
        assert choose_delta0(2, True, Delta0Mode.REPRODUCE) == 2.26e-3

    def test_reproduce_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            choose_delta0(2, True, Delta0Mode.REPRODUCE, 1.5)
        with pytest.raises(DomainError):
            choose_delta0(2, True, Delta0Mode.REPRODUCE, 0.0)

    def test_search_degree_two_near_published(self):
        found = choose_delta0(2, True, Delta0Mode.SEARCH)
        assert abs(found - 2.26e-3) / 2.26e-3 < 0.05
        # the found point must stay admissible
        cfg = standard_config(2, True).with_delta0(found)
        N0 = curly_N0(cfg, compute_ells(cfg).Y0)
        assert 2.0 <= N0 < 3.0

    def test_search_top_row(self):
        assert choose_delta0(21, True, Delta0Mode.SEARCH) == 0.99999

    def test_search_objective_not_worse_than_published(self):
        def objective(n0, present, d):
            cfg = standard_config(n0, present).with_delta0(d)
            f = final_constants(cfg, k=0)
            return min(f.max_E12, f.E3_tilde)

        found = choose_delta0(3, False, Delta0Mode.SEARCH)
        published = 2.71e-3
        assert objective(3, False, found) <= objective(3, False, published) * (1 + 1e-6)


class TestClassicalConstants:
    def test_refined_anchor_degree_two(self):
        cfg = standard_config(2, True)
        cc = classical_constants(cfg, ClassicalBranch.REFINED, B0_REFINED)
        assert abs(cc.a0 - 46.1831) / 46.1831 < 1e-2
        assert abs(cc.c0 - 728.705) / 728.705 < 1e-2

    def test_full_anchor_degree_two(self):
        cfg = standard_config(2, True)
        cc = classical_constants(cfg, ClassicalBranch.FULL, B0_FULL)
        assert abs(cc.a0 - 174.707) / 174.707 < 1e-2

    def test_full_anchor_top_row_absent(self):
        cfg = standard_config(21, False)
        cc = classical_constants(cfg, ClassicalBranch.FULL, B0_FULL)
        assert abs(cc.a0 - 1.047e10) / 1.047e10 < 1e-2

    def test_closed_form_matches_grid_search(self):
        for n0, present, branch, b0 in [
            (2, True, ClassicalBranch.REFINED, B0_REFINED),
            (2, True, ClassicalBranch.FULL, B0_FULL),
            (21, False, ClassicalBranch.FULL, B0_FULL),
            (9, False, ClassicalBranch.REFINED, B0_REFINED),
        ]:
            cfg = standard_config(n0, present)
            f = _finals_cached(n0, present)
            cc = classical_constants(cfg, branch, b0, f)
            if branch is ClassicalBranch.REFINED:
                A, B, D, C = 0.75, 0.75, f.exp_coeff_half, f.C3
            else:
                A, B, D, C = 2.0, 1.0, f.exp_coeff_full, f.C12
            grid = classical_a0_grid(C, A, B, D, b0, cc.c0, cfg.row.M, cfg.row.n0)
            assert abs(cc.a0 - grid) <= 1e-6 * cc.a0

    def test_b0_must_stay_below_decay(self):
        cfg = standard_config(2, True)
        with pytest.raises(DomainError):
            classical_constants(cfg, ClassicalBranch.FULL, 0.27)

    def test_c0_decreasing_across_rows(self):
        vals = [
            classical_constants(
                standard_config(n0, True), ClassicalBranch.FULL, B0_FULL
            ).c0
            for n0 in range(2, 22)
        ]
        assert all(a > b for a, b in zip(vals, vals[1:]))


class TestBoundEval:
    def test_domain_gate(self):
        field = FieldParams.from_discriminant(2, 3.0)
        cfg = standard_config(2, True)
        threshold = cfg.alpha * 2 * field.log_delta_L**2
        rep = bound_eval(field, threshold - 1.0, True, BoundForm.EXP)
        assert not rep.applicable and rep.epsilon is None
        rep2 = bound_eval(field, threshold + 1.0, True, BoundForm.EXP)
        assert rep2.applicable and rep2.epsilon is not None

    def test_exp_epsilon_composition(self):
        # refined branch applies at degree 2; epsilon must equal the
        # composition of published constants (to their printed accuracy)
        field = FieldParams.from_discriminant(2, 3.0)
        rep = bound_eval(field, 4000.0, False, BoundForm.EXP)
        assert rep.applicable and rep.refined_used
        lam = lambda_L(field, 1)
        expected = (
            parse_printed("0.31501")
            * math.sqrt(lam)
            * math.sqrt(4000.0)
            * math.exp(-math.sqrt(4000.0 / 2) / math.sqrt(R2))
        )
        assert abs(rep.epsilon - expected) / expected < 1e-3

    def test_exceptional_term_flagging(self):
        field = FieldParams.from_discriminant(2, 3.0)
        with_zero = bound_eval(field, 4000.0, True, BoundForm.EXP)
        without = bound_eval(field, 4000.0, False, BoundForm.EXP)
        assert with_zero.exceptional_term == "x^(beta0-1)/beta0"
        assert without.exceptional_term is None

    def test_classical_abs_full_branch_constant(self):
        # the all-degree coefficient rounds up to the published 175
        field = FieldParams.from_discriminant(2, 3.0)
        rep = bound_eval(field, 1e5, True, BoundForm.CLASSICAL_ABS)
        assert math.ceil(rep.details["a0"]) == 175
        assert rep.details["b0"] == 0.23
        # threshold c0 n_L (log d_L)^2
        c0 = rep.details["c0"]
        assert math.isclose(rep.threshold, c0 * 2 * math.log(3.0) ** 2, rel_tol=1e-12)

    def test_log_form_branches(self):
        field_small = FieldParams.from_discriminant(2, 3.0)
        rep = bound_eval(field_small, 5000.0, False, BoundForm.LOG)
        assert rep.applicable and rep.refined_used
        f = _finals_cached(2, False)
        lam = lambda_L(field_small, 1)
        assert math.isclose(rep.epsilon, f.D3 * math.sqrt(lam) * 2**1.5 / 5000.0, rel_tol=1e-12)

    def test_general_branch_when_degree_exceeds_ceiling(self):
        # degree 3 field sits above the degree-2 ceiling N0 = 2.003, but
        # uses its own row (n0 = 3) where N0 = 3.005 covers it
        field = FieldParams.from_discriminant(3, 23.0)
        rep = bound_eval(field, 1e5, True, BoundForm.EXP)
        assert rep.refined_used
        # a degree-4 field with a degree-3 row never happens: rows track n_L
        f4 = FieldParams.from_discriminant(4, 117.0)
        rep4 = bound_eval(f4, 1e5, True, BoundForm.EXP)
        assert rep4.refined_used  # row 4, N0 = 4.009

    def test_above_table_degree(self):
        # degree 600 exceeds the beta0-absent ceiling 519.59
        field = FieldParams(600, 600 * math.log(10.0) / 0.43)
        rep = bound_eval(field, 1e9, False, BoundForm.EXP)
        assert not rep.refined_used or not rep.applicable


class TestTables:
    def test_table1_shape_and_cells(self):
        t = generate_table(1)
        assert len(t.labels) == 20  # degrees 2..21
        assert len(t.columns) == 6
        assert all(d.ok for d in diff_table(t))

    def test_table2_all_pairs(self):
        t = generate_table(2)
        assert len(t.labels) == 20
        assert all(d.ok for d in diff_table(t))

    def test_table4_both_states(self):
        t = generate_table(4, "both")
        assert len(t.labels) == 20  # degrees 2..21
        bad = [d for d in diff_table(t) if not d.ok]
        assert not bad, bad[:5]

    def test_table4_single_state_column_subset(self):
        t = generate_table(4, "absent")
        assert len(t.columns) == 1 + 2 + 5
        assert all(d.ok for d in diff_table(t))

    def test_table3_is_exact_embedded_data(self):
        t = generate_table(3)
        assert len(t.labels) == 20
        assert all(d.ok for d in diff_table(t))

    def test_table7_range_rows(self):
        t = generate_table(7, "both")
        assert t.labels[:19] == tuple(str(n) for n in range(2, 21))
        assert set(t.labels[19:]) == {"21 to 654", "21 to 519", ">= 655", ">= 520"}
        assert all(d.ok for d in diff_table(t))

    def test_table8_all_rows(self):
        t = generate_table(8)
        assert len(t.labels) == 20
        assert all(d.ok for d in diff_table(t))

    def test_invalid_table_id(self):
        with pytest.raises(DomainError):
            generate_table(99)

    def test_invalid_beta0_selector(self):
        with pytest.raises(DomainError):
            generate_table(4, "maybe")


class TestCorollaries:
    def test_exp_form(self):
        got = corollary_constants()["exp"]
        assert got["threshold"] == 2915
        assert matches_printed(got["general"], "2.714E-1")
        assert matches_printed(got["refined"], "4.452E-1")
        assert got["decay"] == 0.285

    def test_log_form(self):
        got = corollary_constants()["log"]
        assert matches_printed(got["general"], "1.475")
        assert matches_printed(got["refined"], "2.419")

    def test_classical_form(self):
        got = corollary_constants()["classical"]
        assert matches_printed(got["general"], "1.952E-3")
        assert matches_printed(got["refined"], "3.674E-2")
        assert got["decay_general"] == 0.267
        assert got["decay_refined"] == 0.258

    def test_absolute_form(self):
        got = corollary_constants()["absolute"]
        assert got["threshold"] == 729
        assert math.ceil(got["a0_general"]) == 175
        assert got["b0_general"] == 0.23
        assert got["b0_refined"] == 0.25
        # the wide-range coefficient reproduces the published 18458 to the
        # same tolerance as the underlying maximization table
        assert abs(got["a0_refined"] - 18458) / 18458 < 1e-2
