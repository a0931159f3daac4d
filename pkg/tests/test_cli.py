import json
import subprocess
import sys

import pytest

from coxlen import campaigns, cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClasses:
    def test_b2_has_five_rows(self, capsys):
        code, out, _ = run_cli(capsys, "classes", "B", "2")
        assert code == 0
        assert len(out.strip().splitlines()) == 1 + 5

    def test_a1_has_two_rows(self, capsys):
        code, out, _ = run_cli(capsys, "classes", "A", "1")
        assert code == 0
        assert len(out.strip().splitlines()) == 1 + 2

    def test_single_class_row(self, capsys):
        code, out, _ = run_cli(capsys, "classes", "B", "9", "--class", "2,4;3")
        assert code == 0
        assert "12" in out
        assert "(+1,+2,+3)(+4,+5,+6,-7)(+8,-9)" in out

    def test_exhaustive_match_flags(self, capsys):
        code, out, _ = run_cli(capsys, "classes", "B", "3", "--exhaustive")
        assert code == 0
        rows = out.strip().splitlines()[1:]
        assert all("True" in r for r in rows)

    def test_budget_skip_marker(self, capsys):
        code, out, _ = run_cli(
            capsys, "classes", "B", "9", "--class", "2,4;3", "--exhaustive"
        )
        assert code == 0
        assert "skipped(budget)" in out

    def test_json_roundtrip(self, capsys):
        code, out, _ = run_cli(capsys, "classes", "B", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["group"] == {"type": "B", "rank": 2}
        assert len(payload["classes"]) == 5
        assert json.dumps(payload, indent=2, sort_keys=True) == out.strip()

    def test_csv_rows(self, capsys):
        code, out, _ = run_cli(capsys, "classes", "D", "4", "--format", "csv")
        assert code == 0
        rows = out.strip().splitlines()
        n_descriptors = len(
            __import__("coxlen.excess", fromlist=["x"]).all_class_descriptors("D", 4)
        )
        assert len(rows) == 1 + n_descriptors

    def test_explain_adds_alt_column(self, capsys):
        code, out, _ = run_cli(capsys, "classes", "B", "4", "--explain")
        assert code == 0
        assert "max_len_D_alt_display" in out

    def test_split_suffix(self, capsys):
        code, out, _ = run_cli(capsys, "classes", "D", "4", "--class", ";2,2")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 1 + 2  # both halves
        assert any(";2,2+" in ln for ln in lines)
        assert any(";2,2-" in ln for ln in lines)


class TestRep:
    def test_uc(self, capsys):
        code, out, _ = run_cli(capsys, "rep", "B", "9", "--class", "2,4;3", "--kind", "uc")
        assert code == 0
        assert "(+1,+2,+3)(+4,+5,+6,-7)(+8,-9)" in out
        assert "len_B: 12" in out

    def test_wlr_with_certificate(self, capsys):
        code, out, _ = run_cli(
            capsys, "rep", "B", "3", "--class", ";3", "--kind", "wlr", "--explain"
        )
        assert code == 0
        assert "(-1,-2,+3)" in out
        assert "'valid': True" in out

    def test_kim(self, capsys):
        code, out, _ = run_cli(capsys, "rep", "A", "8", "--class", "4,5", "--kind", "kim")
        assert code == 0
        assert "(+1,+9,+2,+8)(+3,+7,+4,+6,+5)" in out

    def test_kim_wrong_type(self, capsys):
        code, _, err = run_cli(capsys, "rep", "B", "3", "--class", ";3", "--kind", "kim")
        assert code == 2
        assert "error" in err


class TestExcess:
    def test_short_rep(self, capsys):
        code, out, _ = run_cli(capsys, "excess", "B", "2", "(-1,+2)")
        assert code == 0
        assert "excess: 0" in out
        assert "(+1)(-2)" in out and "(+1,+2)" in out

    def test_identity_window_type_a(self, capsys):
        code, out, _ = run_cli(capsys, "excess", "A", "4", "[1,2,3,4,5]")
        assert code == 0
        assert "excess: 0" in out

    def test_gadget_witness(self, capsys):
        code, out, _ = run_cli(capsys, "excess", "B", "4", "(-1,-2,-3,-4)")
        assert code == 0
        assert "excess: 0" in out

    def test_d_flavor_membership(self, capsys):
        code, _, err = run_cli(capsys, "excess", "D", "4", "(-1)")
        assert code == 2
        assert "subgroup" in err

    def test_parse_error(self, capsys):
        code, _, err = run_cli(capsys, "excess", "B", "2", "(1,")
        assert code == 2


class TestVerify:
    def test_lemma51_rank2(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "lemma51", "--rank", "2")
        assert code == 0
        assert "PASS" in out

    def test_alias(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "lemma-5.1", "--rank", "2")
        assert code == 0

    def test_eq1_with_flags(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "eq1", "--type", "B", "--rank", "6",
            "--samples", "1000", "--seed", "7",
        )
        assert code == 0
        assert "PASS" in out

    def test_unknown_statement(self, capsys):
        code, _, err = run_cli(capsys, "verify", "nonsense")
        assert code == 2
        assert "unknown statement" in err

    def test_e7_gated(self, capsys):
        code, _, err = run_cli(capsys, "verify", "e7")
        assert code == 2
        assert "--big" in err

    def test_json_needs_seed_for_randomized(self, capsys):
        code, _, err = run_cli(capsys, "verify", "eq1", "--format", "json")
        assert code == 2
        assert "--seed" in err or "seed" in err

    def test_json_deterministic(self, capsys):
        args = ("verify", "eq1", "--seed", "11", "--samples", "50", "--format", "json")
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        payload = json.loads(out1)
        assert payload["outcomes"][0]["status"] == "pass"

    def test_thread_count_does_not_change_output(self, capsys):
        base = ("verify", "lemma51", "--format", "json", "--seed", "3")
        _, out1, _ = run_cli(capsys, *base, "--threads", "1")
        _, out2, _ = run_cli(capsys, *base, "--threads", "4")
        assert out1 == out2

    def test_statement_failure_exit_code(self, capsys, monkeypatch):
        import time as _time

        def failing(cfg):
            return campaigns.VerificationOutcome(
                "lemma51", False, {"failures": [{"why": "forced"}]}, 0.0
            )

        broken = campaigns.Statement("lemma51", "x", failing)
        monkeypatch.setitem(campaigns.REGISTRY, "lemma51", broken)
        code, out, _ = run_cli(capsys, "verify", "lemma51")
        assert code == 1
        assert "FAIL" in out


class TestCensus:
    def test_classical_json_schema(self, capsys):
        code, out, _ = run_cli(capsys, "census", "B", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["group"] == {"type": "B", "rank": 2}
        row = payload["classes"][0]
        for key in ("label", "size", "min_len_B", "max_len_B", "max_count",
                    "excess_histogram", "all_max_zero_excess"):
            assert key in row

    def test_split_census_rows(self, capsys):
        code, out, _ = run_cli(capsys, "census", "D", "4", "--class", ";2,2",
                               "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert [r["size"] for r in payload["classes"]] == [6, 6]

    def test_generic_group(self, capsys):
        code, out, _ = run_cli(capsys, "census", "I2(5)", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["group"]["type"] == "I2(5)"
        assert sum(r["size"] for r in payload["classes"]) == 10
        assert all(r["all_max_zero_excess"] for r in payload["classes"])

    def test_matrix_file(self, capsys, tmp_path):
        mfile = tmp_path / "m.txt"
        mfile.write_text("2\n1 5\n5 1\n")
        code, out, _ = run_cli(capsys, "census", "--matrix", str(mfile),
                               "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert sum(r["size"] for r in payload["classes"]) == 10

    def test_bad_group_spec(self, capsys):
        code, _, err = run_cli(capsys, "census", "Q", "9")
        assert code == 2

    def test_census_without_spec(self, capsys):
        code, _, err = run_cli(capsys, "census")
        assert code == 2


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "coxlen", "classes", "B", "2", "--format", "json"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["group"] == {"type": "B", "rank": 2}
