"""Command-line behavior: output lines, exit codes, stability."""

from divcrit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDerive:
    def test_all_lists_one_rule_per_q(self, capsys):
        code, out, _ = run_cli(capsys, "derive", "-b", "10", "-n", "17",
                               "--q-max", "3", "--all")
        assert code == 0
        assert out.splitlines() == [
            "q=1 N=17 w=2 u=3 rule=3B + 2b soundness=full",
            "q=2 N=34 w=3 u=-4 rule=4B - 3b soundness=full",
            "q=3 N=51 w=5 u=-1 rule=B - 5b soundness=full",
        ]

    def test_best_for_3(self, capsys):
        code, out, _ = run_cli(capsys, "derive", "-b", "10", "-n", "3")
        assert code == 0
        assert "w=1 u=1" in out
        assert "soundness=full" in out

    def test_2_has_nonempty_output(self, capsys):
        code, out, _ = run_cli(capsys, "derive", "-b", "10", "-n", "2")
        assert code == 0
        assert out.strip()

    def test_no_sound_rule_exits_1(self, capsys):
        code, out, _ = run_cli(capsys, "derive", "-b", "10", "-n", "20")
        assert code == 1
        assert "no sound rule" in out

    def test_unknown_flag_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "derive", "-n", "3", "--w", "1")
        assert code == 2

    def test_divisor_below_two_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "derive", "-n", "1")
        assert code == 2
        assert "error" in err


class TestCheck:
    def test_gdc_method(self, capsys):
        code, out, _ = run_cli(capsys, "check", "-b", "10", "-n", "7",
                               "1860523", "--method", "gdc")
        assert code == 0
        assert out == "divisible\n"

    def test_not_divisible_exits_1(self, capsys):
        code, out, _ = run_cli(capsys, "check", "-b", "10", "-n", "27", "9")
        assert code == 1
        assert out == "not divisible\n"

    def test_octal(self, capsys):
        code, out, _ = run_cli(capsys, "check", "-b", "8", "-n", "3", "41507")
        assert code == 0
        assert out == "divisible\n"

    def test_negative_numeral_after_double_dash(self, capsys):
        code, out, _ = run_cli(capsys, "check", "-b", "10", "-n", "17",
                               "--", "-5916")
        assert code == 0

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "check", "-b", "8", "-n", "3", "9")
        assert code == 2
        assert "invalid digit" in err

    def test_override_pair(self, capsys):
        code, out, _ = run_cli(capsys, "check", "-b", "10", "-n", "7",
                               "--w", "-2", "--u", "1", "35")
        assert code == 0

    def test_unsound_override_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "check", "-b", "10", "-n", "27",
                               "--w", "3", "--u", "3", "9")
        assert code == 2
        assert "forward-only" in err

    def test_override_with_oracle_conflicts(self, capsys):
        code, _, err = run_cli(capsys, "check", "-b", "10", "-n", "7",
                               "--method", "oracle", "--w", "-2", "--u", "1",
                               "35")
        assert code == 2

    def test_no_sound_criterion_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "check", "-b", "10", "-n", "20", "40")
        assert code == 2
        assert "no sound rule" in err


class TestReduce:
    def test_trace_and_verdict(self, capsys):
        code, out, _ = run_cli(capsys, "reduce", "-b", "10", "-n", "17",
                               "--bound", "100", "5916")
        assert code == 0
        assert out.splitlines() == [
            "step 0: R = 5916",
            "step 1: R = -561",
            "step 2: R = 51",
            "divisible",
        ]

    def test_default_threshold(self, capsys):
        code, out, _ = run_cli(capsys, "reduce", "-b", "10", "-n", "17", "5916")
        assert code == 0
        assert out.splitlines() == [
            "step 0: R = 5916",
            "step 1: R = -561",
            "divisible",
        ]

    def test_not_divisible(self, capsys):
        code, out, _ = run_cli(capsys, "reduce", "-b", "10", "-n", "17", "5917")
        assert code == 1
        assert out.endswith("not divisible\n")


class TestGdc:
    def test_coefficients_and_value(self, capsys):
        code, out, _ = run_cli(capsys, "gdc", "-b", "10", "-n", "7",
                               "1860523", "--show-coefficients")
        assert code == 0
        assert out.splitlines() == [
            "coefficients = [64, -32, 16, -8, 4, -2, 1]",
            "C = 217",
            "divisible",
        ]

    def test_single_digit(self, capsys):
        code, out, _ = run_cli(capsys, "gdc", "-b", "10", "-n", "7", "3")
        assert code == 1
        assert "C = 3" in out


class TestTable:
    def test_single_row_csv(self, capsys):
        code, out, _ = run_cli(capsys, "table", "-b", "10", "--from", "3",
                               "--to", "3", "--format", "csv")
        assert code == 0
        assert out == "n,q,N,u,w,rule,soundness\n3,3,9,1,1,B + b,full\n"

    def test_reproduces_sound_reference_rows(self, capsys):
        from divcrit.tables import PAPER_TABLE_1, audit_paper_table, FindingKind

        code, out, _ = run_cli(capsys, "table", "-b", "10", "--from", "3",
                               "--to", "33", "--format", "csv")
        assert code == 0
        generated = {}
        for line in out.splitlines()[1:]:
            n, q, N, u, w, rule, soundness = line.split(",")
            generated[int(n)] = (int(w), int(u))
        unsound = {f.n for f in audit_paper_table(1)
                   if f.kind is FindingKind.UNSOUND_ROW}
        for row in PAPER_TABLE_1:
            if row.n > 33 or row.n in unsound:
                continue
            assert generated[row.n] in {(row.w, row.u), (-row.w, -row.u)}

    def test_invalid_range_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "table", "-b", "10", "--from", "9",
                               "--to", "3")
        assert code == 2

    def test_byte_stable(self, capsys):
        _, first, _ = run_cli(capsys, "table", "-b", "8", "--from", "3",
                              "--to", "20")
        _, second, _ = run_cli(capsys, "table", "-b", "8", "--from", "3",
                               "--to", "20")
        assert first == second


class TestAudit:
    def test_paper_table_1_findings(self, capsys):
        code, out, _ = run_cli(capsys, "audit", "--paper-table", "1")
        assert code == 1
        assert "table 1 row n=27: unsound-row witness=9" in out

    def test_paper_table_2_findings(self, capsys):
        code, out, _ = run_cli(capsys, "audit", "--paper-table", "2")
        assert code == 1
        assert "n-equality-violation" in out

    def test_generated_range_is_clean(self, capsys):
        code, out, _ = run_cli(capsys, "audit", "-b", "10", "--from", "3",
                               "--to", "12")
        assert code == 0
        assert out == ""

    def test_conflicting_flags(self, capsys):
        code, _, err = run_cli(capsys, "audit", "--paper-table", "1",
                               "--from", "3", "--to", "5")
        assert code == 2

    def test_missing_selection(self, capsys):
        code, _, err = run_cli(capsys, "audit")
        assert code == 2


class TestFigures:
    def test_reduce_figure(self, capsys, tmp_path):
        path = tmp_path / "trace.png"
        code, _, _ = run_cli(capsys, "reduce", "-b", "10", "-n", "17",
                             "--figure", str(path), "5916")
        assert code == 0
        assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_table_figure(self, capsys, tmp_path):
        path = tmp_path / "rules.png"
        code, _, _ = run_cli(capsys, "table", "-b", "10", "--from", "3",
                             "--to", "12", "--figure", str(path))
        assert code == 0
        assert path.stat().st_size > 0

    def test_audit_figure(self, capsys, tmp_path):
        path = tmp_path / "findings.png"
        code, _, _ = run_cli(capsys, "audit", "--paper-table", "1",
                             "--figure", str(path))
        assert code == 1
        assert path.stat().st_size > 0


def test_missing_subcommand_exits_2(capsys):
    assert main([]) == 2


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
