"""
Base Tool Class
A tool validates its arguments through a pydantic model and returns a JSON-ready payload
(numbers as decimal or "num/den" strings)
"""
from typing import Dict, Any, Type
from abc import ABC, abstractmethod

from pydantic import BaseModel, ValidationError

from ..errors import InvalidArgumentError


class BaseTool(ABC):
    """Base class for all balseg tools"""

    params_model: Type[BaseModel]

    def __init__(self):
        self.name = self.get_name()
        self.description = self.get_description()
        self.input_schema = self.get_input_schema()

    @abstractmethod
    def get_name(self) -> str:
        """Return the tool name"""
        pass

    @abstractmethod
    def get_description(self) -> str:
        """Return the tool description"""
        pass

    def get_input_schema(self) -> Dict[str, Any]:
        """JSON schema of the parameters, derived from params_model"""
        return self.params_model.model_json_schema()

    def parse_params(self, params: Dict[str, Any]) -> BaseModel:
        try:
            return self.params_model.model_validate(params or {})
        except ValidationError as e:
            raise InvalidArgumentError(f"Invalid parameters for '{self.name}': {e}") from e

    @abstractmethod
    def execute(self, params: Dict[str, Any]) -> Dict[str, Any]:
        """Execute the tool with given parameters"""
        pass

    def to_dict(self) -> Dict[str, Any]:
        """Convert tool to dictionary format for MCP protocol"""
        return {
            "name": self.name,
            "description": self.description,
            "inputSchema": self.input_schema
        }
