"""Finite field services."""
from .field import (
    FieldSpec,
    FieldElement,
    is_square,
    is_zero,
    enumerate_field,
    find_nonsquare,
)
from .moduli import factor_prime_power, parse_modulus, parse_field_spec, get_field

__all__ = [
    'FieldSpec',
    'FieldElement',
    'is_square',
    'is_zero',
    'enumerate_field',
    'find_nonsquare',
    'factor_prime_power',
    'parse_modulus',
    'parse_field_spec',
    'get_field',
]
