"""Subspace enumeration and arithmetic."""
from .subspace import (
    Subspace,
    SubspaceSet,
    canonicalize,
    zero_subspace,
    full_space,
    subspace_sum,
    intersection,
    is_subset,
    contains_vector,
)
from .enumeration import gaussian_binomial, enumerate_subspaces

__all__ = [
    'Subspace',
    'SubspaceSet',
    'canonicalize',
    'zero_subspace',
    'full_space',
    'subspace_sum',
    'intersection',
    'is_subset',
    'contains_vector',
    'gaussian_binomial',
    'enumerate_subspaces',
]
