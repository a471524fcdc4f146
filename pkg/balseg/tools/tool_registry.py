"""
Tool Registry - one entry per operation, in the order the CLI lists its subcommands
"""
from typing import Dict, Any, List
import logging

from .base_tool import BaseTool
from .count_tool import CountTool
from .table_tool import TableTool
from .enumerate_tool import EnumerateTool
from .genfunc_tool import GenFuncTool
from .asymptotic_tool import AsymptoticTool
from .verify_tool import VerifyTool
from ..errors import InvalidArgumentError

logger = logging.getLogger(__name__)

DEFAULT_TOOLS = (CountTool, TableTool, EnumerateTool, GenFuncTool, AsymptoticTool, VerifyTool)


class ToolRegistry:
    """Name -> tool lookup shared by the command line and the JSON-RPC server"""

    def __init__(self):
        self.tools: Dict[str, BaseTool] = {}
        for tool_class in DEFAULT_TOOLS:
            self.register_tool(tool_class())

    def register_tool(self, tool: BaseTool):
        if tool.name in self.tools:
            raise ValueError(f"Tool '{tool.name}' registered twice")
        self.tools[tool.name] = tool
        logger.debug(f"Registered tool: {tool.name}")

    def get_tool(self, name: str) -> BaseTool:
        try:
            return self.tools[name]
        except KeyError:
            raise InvalidArgumentError(f"Tool '{name}' not found (available: {', '.join(self.tools)})") from None

    def list_tools(self) -> List[Dict[str, Any]]:
        return [tool.to_dict() for tool in self.tools.values()]

    def execute_tool(self, name: str, params: Dict[str, Any]) -> Dict[str, Any]:
        """Run a tool; every tool call gets its own counting evaluator"""
        return self.get_tool(name).execute(params)

    def has_tool(self, name: str) -> bool:
        return name in self.tools

    def get_tool_count(self) -> int:
        return len(self.tools)


# Global tool registry instance
tool_registry = ToolRegistry()
