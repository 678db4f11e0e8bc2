"""Verified statements about orthogonality graphs, one class per claim."""
from .base import BaseClaim, ClaimResult, ClaimStatus
from .context import VerificationContext
from .registry import ClaimManager

__all__ = ['BaseClaim', 'ClaimResult', 'ClaimStatus', 'VerificationContext', 'ClaimManager']
