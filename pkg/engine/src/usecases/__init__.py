"""Use cases package"""
from .commands import CommandOutput, CommandUseCase, cache_command, verify_suite

__all__ = ['CommandOutput', 'CommandUseCase', 'cache_command', 'verify_suite']
