"""
Centralized Error Classification
Structured error types for the verifier
"""
from enum import Enum
from typing import Optional


class ErrorCategory(Enum):
    """Error categories for classification"""
    FIELD = "field"
    GEOMETRY = "geometry"
    GRAPH = "graph"
    SPECTRAL = "spectral"
    BUDGET = "budget"
    CONFIG = "config"
    VALIDATION = "validation"


class ErrorSeverity(Enum):
    """Error severity levels"""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


class FrameworkError(Exception):
    """Base exception for framework errors"""

    def __init__(
        self,
        message: str,
        category: ErrorCategory,
        severity: ErrorSeverity = ErrorSeverity.MEDIUM,
        details: Optional[dict] = None
    ):
        super().__init__(message)
        self.message = message
        self.category = category
        self.severity = severity
        self.details = details or {}

    def to_dict(self):
        """Convert to structured dict"""
        return {
            "error": self.message,
            "category": self.category.value,
            "severity": self.severity.value,
            "details": self.details
        }


class FieldArithmeticError(FrameworkError):
    """Arithmetic errors inside F_q (zero divisors, mixed fields)"""
    def __init__(self, message: str, **kwargs):
        super().__init__(message, ErrorCategory.FIELD, details=kwargs)


class FieldSpecError(FrameworkError):
    """Unsupported or malformed field specification"""
    def __init__(self, message: str, spec: Optional[str] = None, **kwargs):
        super().__init__(
            message,
            ErrorCategory.FIELD,
            severity=ErrorSeverity.HIGH,
            details={"spec": spec, **kwargs}
        )


class QuadFormError(FrameworkError):
    """Quadratic-space errors (degenerate input, isotropic vectors, shapes)"""
    def __init__(self, message: str, **kwargs):
        super().__init__(message, ErrorCategory.GEOMETRY, details=kwargs)


class SubspaceError(FrameworkError):
    """Subspace construction and set-operation errors"""
    def __init__(self, message: str, **kwargs):
        super().__init__(message, ErrorCategory.GEOMETRY, details=kwargs)


class GraphError(FrameworkError):
    """Graph construction and analysis errors"""
    def __init__(self, message: str, graph: Optional[str] = None, **kwargs):
        super().__init__(
            message,
            ErrorCategory.GRAPH,
            details={"graph": graph, **kwargs}
        )


class SpectralError(FrameworkError):
    """Eigensolver errors"""
    def __init__(self, message: str, **kwargs):
        super().__init__(
            message,
            ErrorCategory.SPECTRAL,
            severity=ErrorSeverity.CRITICAL,
            details=kwargs
        )


class BudgetExceededError(FrameworkError):
    """A configured size or work budget was exceeded"""
    def __init__(self, message: str, budget: str, limit: int, **kwargs):
        super().__init__(
            message,
            ErrorCategory.BUDGET,
            details={"budget": budget, "limit": limit, **kwargs}
        )


class ConfigError(FrameworkError):
    """Configuration errors"""
    def __init__(self, message: str, config_path: Optional[str] = None, **kwargs):
        super().__init__(
            message,
            ErrorCategory.CONFIG,
            severity=ErrorSeverity.HIGH,
            details={"config_path": config_path, **kwargs}
        )


class ValidationError(FrameworkError):
    """Validation errors"""
    def __init__(self, message: str, field: Optional[str] = None, **kwargs):
        super().__init__(
            message,
            ErrorCategory.VALIDATION,
            details={"field": field, **kwargs}
        )
