"""
Verification suites run by the verify command
"""
from .base_check import BaseCheck, VerifyConfig
from .check_registry import check_registry

__all__ = ['BaseCheck', 'VerifyConfig', 'check_registry']
