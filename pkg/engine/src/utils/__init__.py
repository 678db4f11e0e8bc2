"""Utils package"""
from .errors import (
    FrameworkError,
    FieldArithmeticError,
    FieldSpecError,
    QuadFormError,
    SubspaceError,
    GraphError,
    SpectralError,
    BudgetExceededError,
    ConfigError,
    ValidationError,
    ErrorCategory,
    ErrorSeverity
)
from .tracing import Tracer, TraceContext

__all__ = [
    'FrameworkError',
    'FieldArithmeticError',
    'FieldSpecError',
    'QuadFormError',
    'SubspaceError',
    'GraphError',
    'SpectralError',
    'BudgetExceededError',
    'ConfigError',
    'ValidationError',
    'ErrorCategory',
    'ErrorSeverity',
    'Tracer',
    'TraceContext'
]
