import json

import pytest

from longcycles import cli, verify
from longcycles.oracle import _pair_counts_cache


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestFormula:
    def test_boccara(self, capsys):
        code, out = run(capsys, "formula", "boccara", "--n", "4", "--k", "2")
        assert code == 0
        assert out.strip() == "2"

    def test_sep_prob_even(self, capsys):
        code, out = run(capsys, "formula", "sep-prob", "--n", "4", "--m", "2")
        assert (code, out.strip()) == (0, "11/18")

    def test_sep_prob_odd(self, capsys):
        code, out = run(capsys, "formula", "sep-prob", "--n", "5", "--m", "2")
        assert (code, out.strip()) == (0, "1/2")

    def test_separating_by_d_infers_n(self, capsys):
        code, out = run(capsys, "formula", "separating-by-d", "--alpha", "2,2", "--d", "1,1")
        assert (code, out.strip()) == (0, "2")

    def test_json_output(self, capsys):
        code, out = run(
            capsys, "formula", "zagier-stanley", "--n", "7", "--k", "3", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["value"] == "469"
        assert doc["query"]["kind"] == "by_cycle_count"
        assert doc["query"]["n"] == 7

    def test_csv_output(self, capsys):
        code, out = run(capsys, "formula", "hultman", "--n", "4", "--k", "2", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,k,value"
        assert lines[1] == "4,2,1/3"

    def test_missing_argument_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["formula", "boccara", "--n", "4"])
        assert exc.value.code == 2

    def test_unknown_formula_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["formula", "nope", "--n", "4"])
        assert exc.value.code == 2

    def test_domain_error_exit_code(self, capsys):
        code = cli.main(["formula", "boccara", "--n", "5", "--k", "2"])
        assert code == 3
        assert "error" in capsys.readouterr().err


class TestOracle:
    def test_pairs_json(self, capsys):
        code, out = run(capsys, "oracle", "pairs", "--n", "4", "--no-cache")
        assert code == 0
        doc = json.loads(out)
        rows = dict((k, int(v)) for k, v in doc["tables"]["cycle_type"])
        assert rows == {"1+1+1+1": 6, "2+1+1": 0, "2+2": 6, "3+1": 24, "4": 0}
        assert sum(rows.values()) == 36

    def test_pairs_with_alpha(self, capsys):
        code, out = run(capsys, "oracle", "pairs", "--n", "4", "--alpha", "2,2", "--no-cache")
        doc = json.loads(out)
        assert dict(doc["tables"]["d_vector"]) == {"(1,1)": "2", "(2,2)": "6"}

    def test_resource_limit_exit_code(self, capsys):
        code = cli.main(["oracle", "pairs", "--n", "12"])
        assert code == 4
        assert "resource limit" in capsys.readouterr().err

    def test_threads_do_not_change_output(self, capsys):
        outputs = []
        for threads in ("1", "2"):
            _pair_counts_cache.clear()
            code, out = run(
                capsys, "oracle", "pairs", "--n", "5", "--alpha", "2,3",
                "--no-cache", "--threads", threads,
            )
            assert code == 0
            outputs.append(out)
        assert outputs[0] == outputs[1]

    def test_cache_file_written_and_reused(self, capsys, tmp_path):
        code, first = run(
            capsys, "oracle", "pairs", "--n", "4", "--cache-dir", str(tmp_path)
        )
        assert code == 0
        assert len(list(tmp_path.glob("*.json"))) == 1
        code, second = run(
            capsys, "oracle", "pairs", "--n", "4", "--cache-dir", str(tmp_path)
        )
        assert second == first

    def test_no_cache_writes_nothing(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("LONGCYCLES_CACHE_DIR", str(tmp_path))
        code, _ = run(capsys, "oracle", "pairs", "--n", "4", "--no-cache")
        assert code == 0
        assert list(tmp_path.glob("*.json")) == []

    def test_env_var_sets_default_cache_dir(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("LONGCYCLES_CACHE_DIR", str(tmp_path))
        code, _ = run(capsys, "oracle", "pairs", "--n", "4")
        assert code == 0
        assert len(list(tmp_path.glob("*.json"))) == 1

    def test_diagonal_sweep(self, capsys):
        code, out = run(
            capsys, "oracle", "diagonal", "--n", "4", "--eta", "2+2", "--no-cache"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["total"] == "6"


class TestVerify:
    def test_small_run_passes(self, capsys):
        code, out = run(
            capsys, "verify", "--max-n", "3", "--suite", "classic", "--suite", "parity",
        )
        assert code == 0
        assert "PASS" in out

    def test_suite_filter(self, capsys):
        code, out = run(
            capsys, "verify", "--max-n", "4", "--suite", "baserecur", "--baserecur-max-n", "6"
        )
        assert code == 0
        assert "length_weight_base" in out
        assert "split_long" not in out

    def test_json_format(self, capsys):
        code, out = run(
            capsys, "verify", "--max-n", "3", "--suite", "plane", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["ok"] is True
        assert all(r["pass"] for r in doc["reports"])

    def test_failure_exit_code(self, capsys, monkeypatch):
        from longcycles.verify import IdentityReport, VerifyRun

        def broken(*args, **kwargs):
            return VerifyRun(reports=[IdentityReport("fake", "n=1", 0, 1)], audit=[])

        monkeypatch.setattr(verify, "run_suites", broken)
        code, out = run(capsys, "verify", "--max-n", "2")
        assert code == 1
        assert "FAIL" in out


class TestTable:
    def test_markdown_grid(self, capsys):
        code, out = run(capsys, "table", "zagier-stanley", "--n", "3..5")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("| n |")
        assert len(lines) == 5  # header, rule, three data rows

    def test_hultman_rational_grid(self, capsys):
        code, out = run(capsys, "table", "hultman", "--n", "3..4", "--format", "csv")
        assert code == 0
        assert "3/2" in out

    def test_separating_total_with_parts_filter(self, capsys):
        code, out = run(
            capsys, "table", "separating-total", "--n", "4", "--parts", "2", "--format", "csv"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "alpha,value"
        assert set(lines[1:]) == {'"(1,3)",12', '"(2,2)",8', '"(3,1)",12'}

    def test_json_round_trip(self, capsys):
        code, out = run(capsys, "table", "sep-prob", "--n", "4..5", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["columns"][0] == "n"
