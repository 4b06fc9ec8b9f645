#!/usr/bin/env python3
"""
Test the command-line interface end to end with click's runner.
"""

import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli import cli
from src.core import sequence_from_string
from src.seqfile import SequenceFile, read_sequence_file


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def seqfile(tmp_path):
    """Write a sequence file from a digit string and return its path."""

    def write(text: str, q: int, n: int) -> str:
        path = tmp_path / f"s{q}{n}_{text}.txt"
        sf = SequenceFile(n=n, sequence=sequence_from_string(text, q))
        path.write_text(sf.to_text(), encoding="ascii")
        return str(path)

    return write


class TestGenerate:
    @pytest.mark.parametrize(
        "args, line",
        [
            (["--method", "nos-zf", "--q", "3", "--n", "3"], "nos_zerofree 4 2 11 7"),
            (["--method", "os2", "--q", "5"], "os2 10 0 10 0"),
            (["--method", "nos-pw", "--q", "4", "--n", "3"], "nos_pseudoweight 22 0 27 5"),
        ],
    )
    def test_report_line(self, runner, args, line):
        result = runner.invoke(cli, ["generate"] + args)
        assert result.exit_code == 0
        assert line in result.output.splitlines()

    def test_prints_sequence_file(self, runner):
        result = runner.invoke(cli, ["generate", "--method", "nos-zf", "--q", "3", "--n", "3"])
        assert "q=3 n=3 period=4" in result.output
        assert "canonical=1,1,1,2" in result.output

    def test_out_file(self, runner, tmp_path):
        path = tmp_path / "s43.txt"
        result = runner.invoke(cli, ["generate", "--method", "nos-pw", "--q", "4", "--n", "3", "--out", str(path)])
        assert result.exit_code == 0
        sf = read_sequence_file(path)
        assert sf.period == 22
        assert sf.n == 3

    @pytest.mark.parametrize(
        "args",
        [
            ["--method", "os2", "--q", "5", "--n", "3"],
            ["--method", "nos-pw", "--q", "4"],
            ["--method", "nos-zf", "--q", "2", "--n", "3"],
            ["--method", "debruijn", "--q", "3"],
        ],
    )
    def test_usage_errors(self, runner, args):
        assert runner.invoke(cli, ["generate"] + args).exit_code == 2


class TestLift:
    def test_order_two(self, runner, seqfile):
        result = runner.invoke(cli, ["lift", "--in", seqfile("110", 3, 2)])
        assert result.exit_code == 0
        assert "q=3 n=3 period=9" in result.output
        assert "canonical=0,0,1,2,2,0,1,1,2" in result.output

    def test_ensure_unit(self, runner, seqfile):
        result = runner.invoke(cli, ["lift", "--in", seqfile("0122120102100113111211", 4, 3), "--ensure-unit"])
        assert result.exit_code == 0
        assert "q=4 n=4 period=84" in result.output

    def test_non_unit_weight_warns(self, runner, seqfile):
        result = runner.invoke(cli, ["lift", "--in", seqfile("0122120102100113111211", 4, 3)])
        assert result.exit_code == 0
        assert "q=4 n=4 period=22" in result.output

    def test_rejects_non_negative_orientable(self, runner, seqfile):
        assert runner.invoke(cli, ["lift", "--in", seqfile("000", 3, 2)]).exit_code == 1

    def test_bad_file(self, runner, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("q=3 n=3\n1,1,1,2\n", encoding="ascii")
        assert runner.invoke(cli, ["lift", "--in", str(path)]).exit_code == 2


class TestRecurse:
    def test_trace_rows(self, runner, seqfile):
        result = runner.invoke(cli, ["recurse", "--in", seqfile("1112", 3, 3), "--target-n", "4"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert "3 4 2 NOS" in lines
        assert "4 13 1 OS" in lines
        assert "q=3 n=4 period=13" in lines

    def test_q4_seed(self, runner, seqfile, tmp_path):
        out = tmp_path / "os43.txt"
        result = runner.invoke(cli, ["recurse", "--in", seqfile("12", 4, 2), "--target-n", "3", "--out", str(out)])
        assert result.exit_code == 0
        assert read_sequence_file(out).period == 9

    def test_non_unit_seed(self, runner, seqfile):
        result = runner.invoke(cli, ["recurse", "--in", seqfile("112", 4, 2), "--target-n", "3"])
        assert result.exit_code == 1
        assert "not a unit" in result.output
        assert "unit-weight precondition" in result.output

    def test_target_below_seed(self, runner, seqfile):
        assert runner.invoke(cli, ["recurse", "--in", seqfile("1112", 3, 3), "--target-n", "2"]).exit_code == 2


class TestVerify:
    def test_holds(self, runner, seqfile):
        result = runner.invoke(cli, ["verify", "--in", seqfile("0112020121201", 3, 4), "--property", "orientable"])
        assert result.exit_code == 0
        assert "orientable holds" in result.output

    def test_fails_with_witness(self, runner, seqfile):
        result = runner.invoke(cli, ["verify", "--in", seqfile("0120201212011", 3, 4), "--property", "orientable"])
        assert result.exit_code == 1
        assert "orientable fails witness=(10, 10)" in result.output

    def test_order_override(self, runner, seqfile):
        path = seqfile("1112", 3, 3)
        assert runner.invoke(cli, ["verify", "--in", path, "--property", "negative-orientable"]).exit_code == 0
        assert runner.invoke(cli, ["verify", "--in", path, "--n", "2", "--property", "n-window"]).exit_code == 1

    def test_zero_order_is_not_replaced(self, runner, seqfile):
        path = seqfile("1112", 3, 3)
        assert runner.invoke(cli, ["verify", "--in", path, "--n", "0", "--property", "negative-orientable"]).exit_code == 2


class TestTables:
    def test_bound(self, runner):
        result = runner.invoke(cli, ["bound", "--q", "4", "--n", "5"])
        assert result.exit_code == 0
        assert result.output.strip() == "495"

    def test_construction_period(self, runner):
        result = runner.invoke(cli, ["bound", "--q", "4", "--n", "3", "--kind", "nos-zf"])
        assert result.output.strip() == "10"

    def test_bound_usage_error(self, runner):
        assert runner.invoke(cli, ["bound", "--q", "2", "--kind", "os2"]).exit_code == 2

    def test_table(self, runner):
        result = runner.invoke(cli, ["table"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[1].split() == ["2", "0", "3", "5", "10"]
        assert lines[-1].split() == ["7", "55", "1067", "8127", "38938"]

    def test_enum_pseudo(self, runner):
        result = runner.invoke(cli, ["enum", "--q", "3", "--n", "3"])
        assert "4.5 7" in result.output.splitlines()

    def test_enum_zero_free(self, runner):
        result = runner.invoke(cli, ["enum", "--q", "4", "--n", "3", "--weights", "zerofree"])
        assert "6 7" in result.output.splitlines()


class TestSearch:
    def test_longest(self, runner):
        result = runner.invoke(cli, ["search", "--q", "3", "--n", "3"])
        assert result.exit_code == 0
        assert result.output.startswith("negative_orientable 10 [")

    def test_refuses(self, runner):
        assert runner.invoke(cli, ["search", "--q", "3", "--n", "6"]).exit_code == 2

    def test_bad_cap(self, runner):
        assert runner.invoke(cli, ["search", "--q", "3", "--n", "2", "--cap", "0"]).exit_code == 2


class TestDemo:
    def test_all_checks_pass(self, runner):
        result = runner.invoke(cli, ["demo", "--paper-examples"])
        assert result.exit_code == 0
        assert "10/10 checks passed" in result.output

    def test_broken_tie_break_fails(self, runner):
        result = runner.invoke(cli, ["demo", "--paper-examples", "--tie-break", "broken"])
        assert result.exit_code == 1
        assert "FAIL" in result.output

    def test_needs_flag(self, runner):
        assert runner.invoke(cli, ["demo"]).exit_code == 2


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert "0.1.0" in result.output
