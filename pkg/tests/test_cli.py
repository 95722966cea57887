import json
import shutil
import subprocess

import pytest

from knotshadows import cli, codes


def run_capture(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEnumerate:
    def test_listing_contains_trefoil(self, capsys):
        code, out, _ = run_capture(capsys, "enumerate", "--n", "3", "--irreducible")
        assert code == 0
        assert "a b c a b c" in out
        assert out.strip().splitlines()[-1] == "count 1"

    def test_count_matches_library(self, capsys):
        code, out, _ = run_capture(capsys, "enumerate", "--n", "4", "--count-only")
        assert code == 0
        assert int(out.strip()) == len(codes.enumerate_shadows(4, True))

    def test_json_envelope(self, capsys):
        code, out, _ = run_capture(capsys, "enumerate", "--n", "3", "--format", "json")
        rep = json.loads(out)
        assert rep["command"] == "enumerate"
        assert rep["config"]["table_version"].startswith("# knotshadows")
        assert rep["result"]["count"] == len(codes.enumerate_shadows(3, True))

    def test_ceiling_guard(self, capsys):
        code, out, _ = run_capture(capsys, "enumerate", "--n", "9")
        assert code == 1
        assert json.loads(out)["error"] == "ResourceLimit"


class TestInvariantCommands:
    def test_homfly_unknot_prints_one(self, capsys):
        code, out, _ = run_capture(capsys, "homfly", "--code", "-")
        assert code == 0 and out.strip() == "1"

    def test_homfly_from_file(self, tmp_path, capsys):
        f = tmp_path / "unknot.gauss"
        f.write_text("# comment line\n-\n")
        code, out, _ = run_capture(capsys, "homfly", "--in", str(f))
        assert code == 0 and out.strip() == "1"

    def test_stats_shadow(self, capsys):
        code, out, _ = run_capture(capsys, "stats", "--code", "a b c a b c")
        assert code == 0 and "s=2" in out and "g=1" in out

    def test_stats_diagram(self, capsys):
        code, out, _ = run_capture(
            capsys, "stats", "--code", "a b c a b c", "--bits", "101")
        assert code == 0 and "w=3" in out and "sl=1" in out

    def test_identify_json(self, capsys):
        code, out, _ = run_capture(capsys, "identify", "--code", "a b c a b c",
                                   "--bits", "101", "--format", "json")
        rep = json.loads(out)
        row = rep["result"]["identifications"][0]
        assert row["matches"] == ["3_1"]
        assert set(row) >= {"input", "fingerprint_hash", "matches", "collisions"}

    def test_identify_pd(self, capsys):
        code, out, _ = run_capture(
            capsys, "identify", "--pd", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
        assert code == 0 and "3_1" in out


class TestFertilityCommands:
    def test_fertile_negative_verdict_is_not_an_error(self, capsys):
        code, out, _ = run_capture(capsys, "fertile", "--knot", "5_1")
        assert code == 0
        assert "false" in out and "4_1" in out

    def test_fertile_json_embeds_config(self, capsys):
        code, out, _ = run_capture(capsys, "fertile", "--knot", "3_1",
                                   "--format", "json")
        rep = json.loads(out)
        assert rep["result"]["report"]["verdict"] is True
        assert rep["config"]["include_unknot"] is True

    def test_mnfertile(self, capsys):
        code, out, _ = run_capture(capsys, "mnfertile", "--knot", "5_2",
                                   "--m", "6", "--n", "6")
        assert code == 0 and "true" in out

    def test_fnumber(self, capsys):
        code, out, _ = run_capture(capsys, "fnumber", "--knot", "3_1")
        assert code == 0 and "3" in out

    def test_census_csv(self, capsys):
        code, out, _ = run_capture(capsys, "census", "--code", "a b c a b c",
                                   "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "shadow,name,count,witness"
        assert any("3_1" in line for line in lines[1:])

    def test_variation(self, capsys):
        code, out, _ = run_capture(capsys, "variation", "--knot", "4_1")
        assert code == 0 and "scv=0" in out

    def test_unknown_knot_is_domain_error(self, capsys):
        code, out, _ = run_capture(capsys, "fertile", "--knot", "99_1")
        assert code == 1
        assert json.loads(out)["error"] == "TableInsufficient"


class TestVerify:
    def test_single_knot(self, capsys):
        code, out, _ = run_capture(capsys, "verify", "--knot", "3_1")
        assert code == 0
        assert "all bounds hold: true" in out

    def test_all_small(self, capsys):
        code, out, _ = run_capture(capsys, "verify", "--all", "--max-c", "5")
        assert code == 0
        assert "all bounds hold: true" in out

    def test_needs_target(self, capsys):
        code, out, _ = run_capture(capsys, "verify")
        assert code == 1


class TestMachinery:
    def test_usage_error_exit_2(self, capsys):
        assert cli.run(["enumerate", "--no-such-flag"]) == 2
        assert cli.run(["not-a-command"]) == 2

    def test_figures_require_out(self, capsys):
        assert cli.run(["census", "--code", "a a", "--figures"]) == 2

    def test_domain_error_json(self, capsys):
        code, out, _ = run_capture(capsys, "census", "--code", "a b a b")
        assert code == 1
        err = json.loads(out)
        assert err["error"] == "NotRealizable"

    def test_reports_are_byte_identical(self, capsys):
        _, first, _ = run_capture(capsys, "verify", "--knot", "4_1",
                                  "--format", "json")
        _, second, _ = run_capture(capsys, "verify", "--knot", "4_1",
                                   "--format", "json")
        assert first == second

    def test_workers_flag_keeps_output_identical(self, capsys):
        _, seq, _ = run_capture(capsys, "fertile", "--knot", "4_1",
                                "--format", "json")
        _, par, _ = run_capture(capsys, "fertile", "--knot", "4_1",
                                "--format", "json", "--workers", "2")
        seq_rep, par_rep = json.loads(seq), json.loads(par)
        assert seq_rep["result"] == par_rep["result"]

    def test_out_file_and_figures(self, tmp_path, capsys):
        out_file = tmp_path / "census.csv"
        code, _, _ = run_capture(capsys, "census", "--code", "a b c a b c",
                                 "--format", "csv", "--out", str(out_file),
                                 "--figures")
        assert code == 0
        assert out_file.exists() and out_file.read_text().startswith("shadow,")
        png = tmp_path / "census_census.png"
        assert png.exists() and png.stat().st_size > 500

    def test_verify_figures(self, tmp_path, capsys):
        out_file = tmp_path / "verify.json"
        code, _, _ = run_capture(capsys, "verify", "--knot", "3_1",
                                 "--format", "json", "--out", str(out_file),
                                 "--figures")
        assert code == 0
        assert (tmp_path / "verify_bounds.png").exists()

    def test_variation_figures(self, tmp_path, capsys):
        out_file = tmp_path / "var.json"
        code, _, _ = run_capture(capsys, "variation", "--knot", "4_1",
                                 "--format", "json", "--out", str(out_file),
                                 "--figures")
        assert code == 0
        assert (tmp_path / "var_variation.png").exists()

    def test_table_env_var(self, tmp_path, capsys, monkeypatch, base):
        from knotshadows import knotbase
        table_text = knotbase.default_table_path().read_text()
        alt = tmp_path / "alt.tbl"
        alt.write_text(table_text)
        monkeypatch.setenv(cli.TABLE_ENV, str(alt))
        code, out, _ = run_capture(capsys, "table-check")
        assert code == 0 and "15 records" in out

    def test_table_check(self, capsys):
        code, out, _ = run_capture(capsys, "table-check", "--format", "json")
        rep = json.loads(out)
        assert rep["result"]["records"] == 15
        assert rep["result"]["collisions"] == []
        assert rep["result"]["covers_primes_through"] == 7

    @pytest.mark.skipif(shutil.which("knotshadows") is None,
                        reason="console script not installed")
    def test_console_script(self):
        proc = subprocess.run(["knotshadows", "homfly", "--code", "-"],
                              capture_output=True, text=True, timeout=120)
        assert proc.returncode == 0
        assert proc.stdout.strip() == "1"
