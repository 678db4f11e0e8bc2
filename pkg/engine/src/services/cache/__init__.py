"""Caching services."""
from .store import SubspaceCache

__all__ = [
    'SubspaceCache',
]
