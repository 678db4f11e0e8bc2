"""Configuration constants for the application."""
import os
import re
from functools import lru_cache
from pathlib import Path
from typing import Optional

import yaml
from pydantic import ValidationError as PydanticValidationError

from config.models import QuadgraphConfig
from utils.errors import ConfigError

CONFIG_PATH = Path(__file__).parent.parent.parent / 'config.yaml'
CACHE_ENV_VAR = 'QUADGRAPH_CACHE'


def _expand_env_vars(config):
    """Recursively expand ${VAR} in config values."""
    if isinstance(config, dict):
        return {k: _expand_env_vars(v) for k, v in config.items()}
    elif isinstance(config, list):
        return [_expand_env_vars(item) for item in config]
    elif isinstance(config, str):
        # Replace ${VAR} with environment variable value
        return re.sub(r'\$\{(\w+)\}', lambda m: os.getenv(m.group(1), m.group(0)), config)
    return config


@lru_cache(maxsize=4)
def load_config(path: Optional[str] = None) -> QuadgraphConfig:
    """Load, expand and validate the YAML configuration."""
    config_path = Path(path) if path else CONFIG_PATH
    try:
        with open(config_path, 'r') as f:
            raw = yaml.safe_load(f) or {}
    except OSError as e:
        raise ConfigError(f"Cannot read config: {e}", config_path=str(config_path))
    try:
        return QuadgraphConfig(**_expand_env_vars(raw))
    except PydanticValidationError as e:
        raise ConfigError(f"Invalid config: {e}", config_path=str(config_path))


def resolve_cache_dir(override: Optional[str] = None) -> Path:
    """Cache directory: explicit flag, then QUADGRAPH_CACHE, then config."""
    if override:
        return Path(override).expanduser()
    env = os.getenv(CACHE_ENV_VAR)
    if env:
        return Path(env).expanduser()
    cache = load_config().cache
    return Path(cache.dir or cache.default_dir).expanduser()


_config = load_config()

# Fields
MAX_Q = _config.field.max_q
BUILTIN_MODULI = {q: tuple(coeffs) for q, coeffs in _config.field.moduli.items()}

# Cache
CACHE_ENABLED = _config.cache.enabled

# Graphs
LOOP_POLICY = _config.graph.loop_policy
MAX_GRAPH_VERTICES = _config.graph.max_vertices
ARC_CHECK_MAX_ARCS = _config.graph.arc_check_max_arcs
CLIQUE_NODE_BUDGET = _config.graph.clique_node_budget
GRAPH_WORKERS = _config.graph.workers

# Spectral
EIGEN_MAX_VERTICES = _config.spectral.max_vertices
EIGENSOLVER = _config.spectral.eigensolver
JACOBI_MAX_DIM = _config.spectral.jacobi_max_dim
OFF_TOLERANCE = _config.spectral.off_tolerance
MAX_SWEEPS = _config.spectral.max_sweeps
EIGEN_TOLERANCE = _config.spectral.eigen_tolerance
REPORT_DIGITS = _config.spectral.report_digits

# Verification
RATIO_BAND = tuple(_config.verification.ratio_band)
BAND_QS = tuple(_config.verification.band_qs)
BAND_INSTANCES = tuple(tuple(pair) for pair in _config.verification.band_instances)
GAP_TRIALS = _config.verification.gap_trials
DEFAULT_SEED = _config.verification.seed

# Logging
LOG_LEVEL = _config.logging.level
