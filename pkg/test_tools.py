"""
Tests for the tool layer shared by the command line and the server
"""
import pytest

from balseg.errors import InvalidArgumentError, ResourceCapError
from balseg.tools.tool_registry import tool_registry

TOOLS = ["count", "table", "enumerate", "genfunc", "asymptotic", "verify"]


def test_registry_lists_all_tools():
    assert [t["name"] for t in tool_registry.list_tools()] == TOOLS
    assert tool_registry.get_tool_count() == len(TOOLS)
    with pytest.raises(InvalidArgumentError):
        tool_registry.get_tool("add")


def test_input_schemas_come_from_params_models():
    schemas = {t["name"]: t["inputSchema"] for t in tool_registry.list_tools()}
    assert set(schemas["count"]["required"]) == {"family", "L", "h"}
    assert "max_L" in schemas["verify"]["properties"]


def test_count_tool():
    assert tool_registry.execute_tool("count", {"family": "s", "L": 5, "h": 2})["count"] == "6"
    assert tool_registry.execute_tool("count", {"family": "p", "L": 5, "h": 2})["count"] == "2"
    assert tool_registry.execute_tool("count", {"family": "s", "L": -1, "h": 3})["count"] == "0"


def test_count_tool_rejects_bad_family():
    with pytest.raises(InvalidArgumentError):
        tool_registry.execute_tool("count", {"family": "q", "L": 5, "h": 2})
    with pytest.raises(InvalidArgumentError):
        tool_registry.execute_tool("count", {"family": "s", "L": 5})


def test_table_tool():
    result = tool_registry.execute_tool("table", {"family": "p", "max_L": 5})
    assert result["rows"][5] == ["1", "1", "2", "2", "1", "1"]
    assert result["totals"] == ["1", "2", "2", "4", "4", "8"]


def test_enumerate_tool():
    result = tool_registry.execute_tool("enumerate", {"L": 5, "h": 2, "palindromes": True, "render": "standard"})
    assert result["words"] == ["01010", "10001"]
    assert result["count"] == "2"
    assert len(result["paths"]) == 2


def test_enumerate_tool_cap_from_environment(monkeypatch):
    monkeypatch.setenv("BALSEG_CAP", "4")
    with pytest.raises(ResourceCapError):
        tool_registry.execute_tool("enumerate", {"L": 5, "h": 2})
    result = tool_registry.execute_tool("enumerate", {"L": 5, "h": 2, "cap": 5})
    assert result["count"] == "6"


def test_enumerate_tool_rejects_height_above_length():
    with pytest.raises(InvalidArgumentError):
        tool_registry.execute_tool("enumerate", {"L": 3, "h": 4})


def test_genfunc_tool():
    result = tool_registry.execute_tool("genfunc", {"family": "s", "h": 2, "terms": 10})
    assert result["numerator"] == "0, 1, 0, 1"
    assert result["denominator_factors"] == ["(1-X^1)", "(1-X^2)", "(1-X^3)"]
    assert result["coefficients"] == ["0", "1", "1", "3", "4", "6", "8", "11", "13", "17", "20"]


def test_asymptotic_tool():
    result = tool_registry.execute_tool("asymptotic", {"family": "s", "h": 2})
    assert (result["alpha"], result["beta"], result["period"]) == ("1/6", "1/3", "6")
    with pytest.raises(InvalidArgumentError):
        tool_registry.execute_tool("asymptotic", {"family": "s", "h": 1})


def test_verify_tool():
    result = tool_registry.execute_tool("verify", {"max_L": 6, "brute_max": 0, "h_max": 3})
    assert result["all_passed"] is True
    statuses = {s["name"]: s["status"] for s in result["suites"]}
    assert statuses["oracle"] == "skipped"
    assert statuses["identities"] == "pass"
