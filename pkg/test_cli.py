"""
Tests for the command-line front end: outputs, formats and exit codes
"""
import json

import pytest

from balseg.checks.identities import SymmetryCheck
from balseg.cli import main
from balseg.tools.count_tool import CountTool


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


@pytest.mark.parametrize("argv, expected", [
    (["count", "s", "5", "2"], "6"),
    (["count", "p", "5", "2"], "2"),
    (["count", "s", "-1", "3"], "0"),
])
def test_count(capsys, argv, expected):
    assert run(capsys, *argv) == (0, expected)


def test_count_deep_recurrence(capsys):
    code, out = run(capsys, "count", "s", "100000", "50")
    assert code == 0
    assert int(out) > 0


def test_table_single_row_csv(capsys):
    assert run(capsys, "table", "s", "--max-L", "0", "--format", "csv") == (0, "L,0,total\n0,1,1")


def test_table_pretty_is_default(capsys):
    code, out = run(capsys, "table", "s", "--max-L", "10")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].split()[-1] == "total"
    assert lines[-1].split() == ["10", "1", "10", "20", "16", "16", "10", "16", "16", "20", "10", "1", "|", "136"]
    assert lines[3].split() == ["1", "1", "1", "|", "2"]


def test_table_csv_is_rectangular(capsys):
    code, out = run(capsys, "table", "p", "--max-L", "6", "--format", "csv")
    rows = [line.split(",") for line in out.splitlines()]
    assert code == 0
    assert len({len(row) for row in rows}) == 1


def test_table_json_has_no_floats(capsys):
    code, out = run(capsys, "table", "p", "--max-L", "10", "--format", "json")
    document = json.loads(out)

    def leaves(node):
        if isinstance(node, dict):
            for value in node.values():
                yield from leaves(value)
        elif isinstance(node, list):
            for value in node:
                yield from leaves(value)
        else:
            yield node

    assert code == 0
    assert document["status"] == "ok"
    assert document["result"]["rows"][10] == ["1", "0", "4", "0", "2", "0", "2", "0", "4", "0", "1"]
    assert not any(isinstance(leaf, float) for leaf in leaves(document))


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "5", "2")
    assert code == 0
    assert out.splitlines() == ["00101", "01001", "01010", "10001", "10010", "10100"]


def test_enumerate_palindromes(capsys):
    assert run(capsys, "enumerate", "5", "2", "--palindromes") == (0, "01010\n10001")


def test_enumerate_trivial(capsys):
    assert run(capsys, "enumerate", "3", "0") == (0, "000")


def test_enumerate_render(capsys):
    code, out = run(capsys, "enumerate", "2", "1", "--render")
    assert code == 0
    assert out == "01\n..*\n_|.\n\n10\n._*\n|.."


def test_enumerate_above_cap(capsys):
    code, out = run(capsys, "enumerate", "30", "2")
    assert code == 3
    assert out.startswith("error:")
    assert run(capsys, "enumerate", "30", "2", "--cap", "30", "--format", "csv")[0] == 0


def test_enumerate_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("BALSEG_CAP", "3")
    assert run(capsys, "enumerate", "5", "2")[0] == 3


def test_invalid_environment(capsys, monkeypatch):
    monkeypatch.setenv("BALSEG_CAP", "many")
    assert run(capsys, "count", "s", "5", "2")[0] == 2


def test_enumerate_height_above_length(capsys):
    assert run(capsys, "enumerate", "3", "5")[0] == 2


def test_genfunc(capsys):
    code, out = run(capsys, "genfunc", "s", "0", "--terms", "3")
    assert code == 0
    assert "coefficients: 1, 1, 1, 1" in out
    code, out = run(capsys, "genfunc", "p", "4", "--terms", "10")
    assert "numerator: 0, 1, 1, 1" in out
    assert "denominator: (1-X^3)(1-X^5)" in out


def test_asymptotic(capsys):
    code, out = run(capsys, "asymptotic", "s", "2")
    assert code == 0
    assert "alpha: 1/6" in out.splitlines()
    assert "beta: 1/3" in out.splitlines()
    assert "period: 6" in out.splitlines()
    code, out = run(capsys, "asymptotic", "p", "3")
    assert "parity_form: true" in out.splitlines()


def test_asymptotic_small_height(capsys):
    assert run(capsys, "asymptotic", "s", "1")[0] == 2


def test_verify_without_oracle(capsys):
    code, out = run(capsys, "verify", "--max-L", "6", "--brute-max", "0", "--h-max", "3")
    assert code == 0
    assert "oracle: skipped (0 cases) - brute_max is 0" in out
    assert out.splitlines()[-1] == "all_passed: true"


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["count", "x", "1", "1"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["table", "s", "--format", "xml"])
    assert excinfo.value.code == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "genfunc", "s", "3", "--terms", "20", "--format", "json")
    second = run(capsys, "genfunc", "s", "3", "--terms", "20", "--format", "json")
    assert first == second


def test_invalid_log_level(capsys, monkeypatch):
    monkeypatch.setenv("BALSEG_LOG_LEVEL", "loud")
    assert run(capsys, "count", "s", "5", "2")[0] == 2


def test_enumerate_long_word(capsys):
    assert run(capsys, "enumerate", "1200", "0", "--cap", "2000") == (0, "0" * 1200)


def test_unexpected_error_exits_4(capsys, monkeypatch):
    def broken(self, params):
        raise RuntimeError("broken tool")

    monkeypatch.setattr(CountTool, "execute", broken)
    code, out = run(capsys, "count", "s", "5", "2")
    assert code == 4
    assert out == "error: RuntimeError: broken tool"


def test_failed_verify_exits_4(capsys, monkeypatch):
    def failing(self, config, evaluator):
        yield False, "s(3,1) != s(3,2)"

    monkeypatch.setattr(SymmetryCheck, "cases", failing)
    code, out = run(capsys, "verify", "--max-L", "6", "--brute-max", "0", "--h-max", "3")
    assert code == 4
    assert "symmetry: fail (1 cases)" in out
    assert "all_passed: false" in out


def test_default_verify(capsys):
    code, out = run(capsys, "verify")
    assert code == 0
    assert out.splitlines()[-1] == "all_passed: true"
