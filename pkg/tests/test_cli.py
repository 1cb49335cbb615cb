from pathlib import Path

import pytest

from dyadtrig.cli import run

GOLDEN = Path(__file__).parent / "data" / "table_k4.golden"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_cos_half(self, capsys):
        code, out, _ = invoke(capsys, "eval", "--fn", "cos", "--x", "1/2")
        assert code == 0
        assert out == "0.70710678118654757\n"

    def test_tan_half(self, capsys):
        code, out, _ = invoke(capsys, "eval", "--fn", "tan", "--x", "1/2")
        assert code == 0
        assert out == "1\n"

    def test_non_dyadic_rejected(self, capsys):
        code, out, err = invoke(capsys, "eval", "--fn", "cos", "--x", "5/15")
        assert code == 1
        assert out == ""
        assert "power of two" in err

    def test_pole_rejected(self, capsys):
        code, _, err = invoke(capsys, "eval", "--fn", "tan", "--x", "1")
        assert code == 1
        assert "pole" in err

    def test_out_of_domain(self, capsys):
        code, _, err = invoke(capsys, "eval", "--fn", "cos", "--x", "9/8")
        assert code == 1

    def test_turns_mode(self, capsys):
        code, out, _ = invoke(capsys, "eval", "--fn", "cos", "--x", "3/8", "--turns")
        assert code == 0
        assert out == "-0.70710678118654757\n"

    def test_turns_rejects_tan(self, capsys):
        code, _, err = invoke(capsys, "eval", "--fn", "tan", "--x", "1/8", "--turns")
        assert code == 2

    def test_unknown_fn_is_usage_error(self, capsys):
        code, _, _ = invoke(capsys, "eval", "--fn", "sec", "--x", "1/2")
        assert code == 2

    def test_missing_argument_is_usage_error(self, capsys):
        code, _, _ = invoke(capsys, "eval", "--fn", "cos")
        assert code == 2


class TestInv:
    def test_atan_one(self, capsys):
        code, out, _ = invoke(capsys, "inv", "--fn", "atan", "--v", "1.0")
        assert code == 0
        assert out == "1/2 converged\n"

    def test_acos_five_sixteenths(self, capsys):
        code, out, _ = invoke(capsys, "inv", "--fn", "acos", "--v", "0.881921264348355")
        assert code == 0
        assert out == "5/16 converged\n"

    def test_unconverged_flag_shown(self, capsys):
        code, out, _ = invoke(capsys, "inv", "--fn", "acos", "--v", "0.5", "--depth", "12")
        assert code == 0
        assert out.endswith(" unconverged\n")

    def test_domain_error(self, capsys):
        code, _, err = invoke(capsys, "inv", "--fn", "acos", "--v", "1.5")
        assert code == 1
        assert "error" in err


class TestTable:
    def test_golden_byte_match(self, capsys):
        code, out, _ = invoke(capsys, "table", "--k", "4")
        assert code == 0
        assert out == GOLDEN.read_text()

    def test_out_of_range_k(self, capsys):
        code, _, _ = invoke(capsys, "table", "--k", "0")
        assert code == 1


class TestSweepCommand:
    def test_csv_header(self, capsys):
        code, out, _ = invoke(capsys, "sweep", "--fn", "cos", "--k", "2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "fn,k,n,value,reference,abs_err"
        assert len(lines) == 1 + 5

    def test_depth_column(self, capsys):
        code, out, _ = invoke(capsys, "sweep", "--fn", "acos", "--k", "3", "--depth", "8")
        assert code == 0
        assert out.splitlines()[0].endswith(",depth")

    def test_depth_on_forward_rejected(self, capsys):
        code, _, _ = invoke(capsys, "sweep", "--fn", "cos", "--k", "3", "--depth", "8")
        assert code == 1


class TestBenchCommand:
    def test_human_line(self, capsys):
        code, out, _ = invoke(capsys, "bench", "--fn", "cos", "--k", "3", "--reps", "1")
        assert code == 0
        assert "ns/call" in out

    def test_csv_row(self, capsys):
        code, out, _ = invoke(capsys, "bench", "--fn", "sin", "--k", "3", "--reps", "1", "--csv")
        assert code == 0
        assert out.splitlines()[0] == "fn,k,n,value,reference,abs_err,ns_per_call"


def test_no_subcommand_is_usage_error(capsys):
    assert run([]) == 2
