"""Evaluation package"""
from .metrics import MetricsCalculator
from .evaluator import ClaimVerifier, VerificationReport
from .benchmark_data import (
    ALL_INSTANCES,
    CLIQUE_INSTANCES,
    DEGREE_INSTANCES,
    EDGELESS_INSTANCES,
    IDENTITY_INSTANCES,
    SPECTRAL_INSTANCES,
    TRANSITIVITY_INSTANCES,
)

__all__ = [
    'MetricsCalculator',
    'ClaimVerifier',
    'VerificationReport',
    'ALL_INSTANCES',
    'CLIQUE_INSTANCES',
    'DEGREE_INSTANCES',
    'EDGELESS_INSTANCES',
    'IDENTITY_INSTANCES',
    'SPECTRAL_INSTANCES',
    'TRANSITIVITY_INSTANCES',
]
