"""Configuration models with Pydantic validation."""
from pydantic import BaseModel, Field, field_validator, model_validator
from typing import Dict, List, Optional


class FieldConfig(BaseModel):
    """Finite field configuration."""
    max_q: int = Field(default=81, ge=3)
    moduli: Dict[int, List[int]] = Field(default_factory=dict)


class CacheConfig(BaseModel):
    """Subspace cache configuration."""
    enabled: bool = True
    dir: Optional[str] = None
    default_dir: str = "~/.cache/quadgraph"

    @field_validator('dir')
    @classmethod
    def _unset_env_is_none(cls, value: Optional[str]) -> Optional[str]:
        # An unexpanded ${VAR} means the variable was not set
        if value is None or value.startswith('${') or not value.strip():
            return None
        return value


class GraphConfig(BaseModel):
    """Graph construction configuration."""
    loop_policy: str = Field(default="include", pattern="^(include|exclude)$")
    max_vertices: int = Field(default=30000, ge=1)
    arc_check_max_arcs: int = Field(default=20000, ge=0)
    clique_node_budget: int = Field(default=2_000_000, ge=1)
    workers: int = Field(default=4, ge=1, le=64)


class SpectralConfig(BaseModel):
    """Spectral verification configuration."""
    max_vertices: int = Field(default=5000, ge=1)
    eigensolver: str = Field(default="auto", pattern="^(auto|jacobi|lapack)$")
    jacobi_max_dim: int = Field(default=400, ge=1)
    off_tolerance: float = Field(default=1e-10, gt=0.0)
    max_sweeps: int = Field(default=100, ge=1)
    eigen_tolerance: float = Field(default=1e-6, gt=0.0)
    report_digits: int = Field(default=8, ge=1, le=15)


class VerificationConfig(BaseModel):
    """Verification battery configuration."""
    ratio_band: List[float] = Field(default=[0.8, 1.25], min_length=2, max_length=2)
    band_qs: List[int] = Field(default=[3, 5, 7, 9])
    band_instances: List[List[int]] = Field(default=[[4, 1], [5, 1], [5, 2]])
    gap_trials: int = Field(default=200, ge=0)
    seed: int = 0

    @field_validator('ratio_band')
    @classmethod
    def _ordered_band(cls, value: List[float]) -> List[float]:
        if not 0 < value[0] <= 1 <= value[1]:
            raise ValueError("ratio_band must satisfy 0 < low <= 1 <= high")
        return value


class LoggingConfig(BaseModel):
    """Logging configuration."""
    level: str = Field(default="INFO", pattern="^(DEBUG|INFO|WARNING|ERROR)$")


class QuadgraphConfig(BaseModel):
    """Complete configuration."""
    field: FieldConfig = Field(default_factory=FieldConfig)
    cache: CacheConfig = Field(default_factory=CacheConfig)
    graph: GraphConfig = Field(default_factory=GraphConfig)
    spectral: SpectralConfig = Field(default_factory=SpectralConfig)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


class RunConfig(BaseModel):
    """Parameters of one CLI run."""
    n: int = Field(ge=2)
    k: int = Field(ge=1)
    q: int = Field(ge=3)
    modulus: Optional[List[int]] = None
    cache_dir: Optional[str] = None
    loop_policy: str = Field(default="include", pattern="^(include|exclude|both)$")
    eigen_cap: int = Field(default=5000, ge=1)
    clique_budget: int = Field(default=2_000_000, ge=1)
    seed: int = 0
    trials: int = Field(default=200, ge=0)
    output_format: str = Field(default="json", pattern="^(json|csv|dot|edgelist)$")
    output: Optional[str] = None
    graph: str = Field(default="square", pattern="^(square|bar)$")
    claims: Optional[List[str]] = None

    @model_validator(mode='after')
    def _k_below_n(self) -> "RunConfig":
        if not self.n > self.k >= 1:
            raise ValueError("require n > k >= 1")
        return self
