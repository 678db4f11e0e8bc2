"""Spectral verification."""
from .eigensolver import EigenResult, residual, round_robin_pairs, jacobi_eigh, lapack_eigh, symmetric_eigen
from .fixtures import FIXTURES, fixture_adjacency, fixture_spectrum
from .identity import IdentityResidual, squared_rows, adjacency_square, intersection_dims, identity_residual
from .analysis import (
    SpectralReport,
    InterlacingReport,
    second_largest_abs,
    eigenvalues,
    interlacing_inequalities,
    interlacing_check,
)
from .gap import (
    EdgeGuarantee,
    GapTrialReport,
    gap_threshold,
    spectral_gap_threshold,
    find_crossing_edge,
    edge_guarantee,
    gap_trials,
)

__all__ = [
    'EigenResult',
    'residual',
    'round_robin_pairs',
    'jacobi_eigh',
    'lapack_eigh',
    'symmetric_eigen',
    'FIXTURES',
    'fixture_adjacency',
    'fixture_spectrum',
    'IdentityResidual',
    'squared_rows',
    'adjacency_square',
    'intersection_dims',
    'identity_residual',
    'SpectralReport',
    'InterlacingReport',
    'second_largest_abs',
    'eigenvalues',
    'interlacing_inequalities',
    'interlacing_check',
    'EdgeGuarantee',
    'GapTrialReport',
    'gap_threshold',
    'spectral_gap_threshold',
    'find_crossing_edge',
    'edge_guarantee',
    'gap_trials',
]
