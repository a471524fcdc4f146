"""
Output Controller
Runs a tool on behalf of the CLI and renders its OutputRecord as text, json, csv or pretty
"""
import csv
import io
import logging
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from ..errors import BalsegError, InternalInconsistencyError
from ..tools.tool_registry import tool_registry

logger = logging.getLogger(__name__)

OutputFormat = Literal["text", "json", "csv", "pretty"]
FORMATS = ("text", "json", "csv", "pretty")


class OutputRecord(BaseModel):
    command: str
    parameters: Dict[str, Any]
    result: Optional[Dict[str, Any]] = None
    status: Literal["ok", "error"] = "ok"
    message: Optional[str] = None
    exit_code: int = Field(default=0, exclude=True)


def default_format(command: str) -> OutputFormat:
    return "pretty" if command == "table" else "text"


class OutputController:
    """Orchestration layer between the command line and the tool registry"""

    def run(self, command: str, parameters: Dict[str, Any]) -> OutputRecord:
        try:
            result = tool_registry.execute_tool(command, parameters)
        except BalsegError as e:
            return OutputRecord(command=command, parameters=parameters, status="error",
                                message=str(e), exit_code=e.exit_code)
        except Exception as e:
            logger.exception(f"❌ {command} failed unexpectedly")
            return OutputRecord(command=command, parameters=parameters, status="error",
                                message=f"{type(e).__name__}: {e}",
                                exit_code=InternalInconsistencyError.exit_code)
        record = OutputRecord(command=command, parameters=parameters, result=result)
        if command == "verify" and not result["all_passed"]:
            failed = [s["name"] for s in result["suites"] if s["status"] == "fail"]
            record.status = "error"
            record.message = f"Failed suites: {', '.join(failed)}"
            record.exit_code = InternalInconsistencyError.exit_code
        return record

    def render(self, record: OutputRecord, fmt: Optional[OutputFormat] = None) -> str:
        fmt = fmt or default_format(record.command)
        if fmt == "json":
            return record.model_dump_json(indent=2)
        if fmt == "csv":
            return _render_csv(record)
        if record.result is None:
            return f"error: {record.message}"
        if fmt == "pretty" and record.command == "table":
            return _render_pretty_table(record.result)
        text = _TEXT_RENDERERS.get(record.command, _render_mapping)(record.result)
        if record.status == "error":
            text += f"\nerror: {record.message}"
        return text


def _render_count(result: Dict[str, Any]) -> str:
    return result["count"]


def _render_table_text(result: Dict[str, Any]) -> str:
    return "\n".join(
        f"{' '.join(row)} | {total}" for row, total in zip(result["rows"], result["totals"])
    )


def _render_pretty_table(result: Dict[str, Any]) -> str:
    """Triangular layout: one row per L, one column per h, row total on the right"""
    rows: List[List[str]] = result["rows"]
    max_L = len(rows) - 1
    cells = [v for row in rows for v in row] + [str(max_L)]
    width = max(len(v) for v in cells + ["L\\h"])
    total_width = max(len(t) for t in result["totals"] + ["total"])
    header = ["L\\h".rjust(width)] + [str(h).rjust(width) for h in range(max_L + 1)]
    lines = [" ".join(header) + " | " + "total".rjust(total_width)]
    lines.append("-" * len(lines[0]))
    for L, (row, total) in enumerate(zip(rows, result["totals"])):
        padded = [v.rjust(width) for v in row] + [" " * width] * (max_L - L)
        lines.append(" ".join([str(L).rjust(width)] + padded) + " | " + total.rjust(total_width))
    return "\n".join(lines)


def _render_enumerate(result: Dict[str, Any]) -> str:
    if "paths" not in result:
        return "\n".join(result["words"])
    return "\n\n".join(f"{w}\n{path}" for w, path in zip(result["words"], result["paths"]))


def _render_genfunc(result: Dict[str, Any]) -> str:
    factors = "".join(result["denominator_factors"]) or result["denominator"]
    return "\n".join([
        f"numerator: {result['numerator']}",
        f"denominator: {factors}",
        f"coefficients: {', '.join(result['coefficients'])}",
    ])


def _render_verify(result: Dict[str, Any]) -> str:
    lines = []
    for suite in result["suites"]:
        line = f"{suite['name']}: {suite['status']} ({suite['cases']} cases)"
        if suite.get("message"):
            line += f" - {suite['message']}"
        lines.append(line)
        lines.extend(f"  failed: {failure}" for failure in suite["failures"])
    lines.append(f"all_passed: {str(result['all_passed']).lower()}")
    return "\n".join(lines)


def _render_mapping(result: Dict[str, Any]) -> str:
    return "\n".join(f"{key}: {_flat(value)}" for key, value in result.items())


def _flat(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, list):
        return ", ".join(_flat(v) for v in value)
    return str(value)


_TEXT_RENDERERS = {
    "count": _render_count,
    "table": _render_table_text,
    "enumerate": _render_enumerate,
    "genfunc": _render_genfunc,
    "verify": _render_verify,
}


def _render_csv(record: OutputRecord) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    result = record.result
    if result is None:
        writer.writerows([["status", "message"], [record.status, record.message]])
    elif record.command == "table":
        size = len(result["rows"])
        writer.writerow(["L"] + [str(h) for h in range(size)] + ["total"])
        for L, (row, total) in enumerate(zip(result["rows"], result["totals"])):
            writer.writerow([str(L)] + row + [""] * (size - len(row)) + [total])
    elif record.command == "enumerate":
        writer.writerow(["word"])
        writer.writerows([w] for w in result["words"])
    elif record.command == "verify":
        writer.writerow(["suite", "status", "cases", "failures"])
        for suite in result["suites"]:
            writer.writerow([suite["name"], suite["status"], suite["cases"], len(suite["failures"])])
    else:
        writer.writerow(["key", "value"])
        for key, value in result.items():
            writer.writerow([key, " ".join(_flat(v) for v in value) if isinstance(value, list) else _flat(value)])
    return buffer.getvalue().rstrip("\n")


controller = OutputController()
