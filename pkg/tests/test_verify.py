import pytest

from longcycles import verify
from longcycles.verify import IdentityReport, ParityAuditRecord, VerifyRun


def assert_all_pass(reports):
    bad = [r for r in reports if not r.passed]
    assert not bad, "\n".join(str(r) for r in bad[:20])


class TestSuites:
    def test_classic(self):
        reports = verify.classic_reports(5)
        assert reports
        assert_all_pass(reports)

    def test_classic_with_formula_source(self):
        assert_all_pass(verify.classic_reports(5, p_source="formula"))

    def test_section3(self):
        reports = verify.section3_reports(4)
        assert reports
        assert_all_pass(reports)
        names = {r.identity for r in reports}
        assert {
            "split_exceedance_sep",
            "split_joint_sep",
            "split_long_sep",
            "total_exceedance_balance",
            "total_exceedance_count",
            "downarrow_step",
            "downarrow_exchange",
            "weighted_sum_recurrence",
            "weighted_sum_value",
            "block_deletion_d[oracle]",
            "block_deletion_d[formula]",
            "block_deletion_total",
        } <= names

    def test_baserecur(self):
        reports = verify.baserecur_reports(9)
        assert len(reports) > 1000
        assert_all_pass(reports)

    def test_formulas(self):
        assert_all_pass(verify.formula_vs_oracle_reports(5))

    def test_plane(self):
        reports = verify.plane_structure_reports(4)
        assert reports
        assert_all_pass(reports)

    def test_block_deletion_one_above_ci_scale(self):
        # the block-deletion identities at n=7, over all compositions of 8
        reports = verify.block_deletion_reports(7)
        assert len(reports) > 1000
        assert_all_pass(reports)

    def test_weighted_sum_value_spot(self):
        # alpha=(3) one above n=2: the weighted sum collapses to a single term
        reports = [
            r
            for r in verify.section3_reports(2)
            if r.identity == "weighted_sum_value" and r.instance == "n=2 alpha=(3) Lam=2+1"
        ]
        assert len(reports) == 1
        assert reports[0].lhs == reports[0].rhs == 3


class TestParityAudit:
    def test_all_true_counts_zero(self):
        audit = verify.parity_audit(5)
        assert audit
        assert all(a.ok for a in audit)

    def test_flags_the_refined_separation_instance(self):
        audit = verify.parity_audit(4)
        hits = [
            a
            for a in audit
            if a.identity == "separated_by_alpha_d" and a.instance == "n=4 alpha=(2,2) d=(1,2)"
        ]
        assert len(hits) == 1
        assert hits[0].formula_value == 4
        assert hits[0].true_count == 0

    def test_flags_wrong_parity_cycle_counts(self):
        audit = verify.parity_audit(3)
        hits = [a for a in audit if a.identity == "by_cycle_count" and a.instance == "n=3 k=2"]
        assert len(hits) == 1
        assert str(hits[0].formula_value) == "11/6"


class TestRunner:
    def test_run_subset(self):
        run = verify.run_suites(("classic", "baserecur"), 4, baserecur_max_n=6)
        assert run.ok
        assert run.audit == []
        assert any("split_long" in line for line in run.summary_lines())

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError):
            verify.run_suites(("nope",), 4)

    def test_failure_detection(self):
        run = VerifyRun(
            reports=[IdentityReport("fake", "n=1", 1, 2)],
            audit=[ParityAuditRecord("fake", "n=1", 7, 0)],
        )
        assert not run.ok
        assert any("FAIL" in line for line in run.failures())

    def test_audit_failure_detection(self):
        run = VerifyRun(reports=[], audit=[ParityAuditRecord("fake", "n=1", 7, 3)])
        assert not run.ok

    def test_report_serialization(self):
        report = IdentityReport("x", "n=2", 3, 3)
        doc = report.to_dict()
        assert doc["pass"] is True
        assert doc["lhs"] == "3"
        run = verify.run_suites(("baserecur",), 3, baserecur_max_n=4)
        assert run.to_dict()["ok"] is True
