"""Quadratic spaces over F_q."""
from .space import (
    HYPERBOLIC_GRAM,
    LineType,
    QuadraticSpace,
    diagonal_space,
    standard_space,
    parse_space,
    hyperbolic_plane,
    direct_sum,
    evaluate,
    bilinear,
    quadratic_values,
    line_type,
    restricted_gram,
    restrict,
    orthogonal_complement,
    radical,
)
from .classify import (
    FormKind,
    FormClass,
    Diagonalization,
    diagonalize,
    class_of_diagonal,
    classify,
    discriminant,
    is_dotk_subspace,
    dotk_mask,
)
from .witt import WittType, WittDecomposition, witt_decompose, witt_type
from .isometry import (
    standard_basis_change,
    is_isometry,
    construct_isometry,
    reflection,
    reflection_generators,
)

__all__ = [
    'HYPERBOLIC_GRAM',
    'LineType',
    'QuadraticSpace',
    'diagonal_space',
    'standard_space',
    'parse_space',
    'hyperbolic_plane',
    'direct_sum',
    'evaluate',
    'bilinear',
    'quadratic_values',
    'line_type',
    'restricted_gram',
    'restrict',
    'orthogonal_complement',
    'radical',
    'FormKind',
    'FormClass',
    'Diagonalization',
    'diagonalize',
    'class_of_diagonal',
    'classify',
    'discriminant',
    'is_dotk_subspace',
    'dotk_mask',
    'WittType',
    'WittDecomposition',
    'witt_decompose',
    'witt_type',
    'standard_basis_change',
    'is_isometry',
    'construct_isometry',
    'reflection',
    'reflection_generators',
]
