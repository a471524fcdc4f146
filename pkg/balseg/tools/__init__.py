"""
Tools package for balseg
One tool per exposed operation, shared by the CLI and the JSON-RPC server
"""
from .count_tool import CountTool
from .table_tool import TableTool
from .enumerate_tool import EnumerateTool
from .genfunc_tool import GenFuncTool
from .asymptotic_tool import AsymptoticTool
from .verify_tool import VerifyTool
from .tool_registry import tool_registry

__all__ = ['CountTool', 'TableTool', 'EnumerateTool', 'GenFuncTool', 'AsymptoticTool', 'VerifyTool', 'tool_registry']
