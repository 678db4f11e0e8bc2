"""Field specification parsing and the shared field registry."""
import logging
import re
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import sympy

from config.constants import BUILTIN_MODULI, MAX_Q
from utils.errors import FieldSpecError
from .field import FieldSpec

logger = logging.getLogger(__name__)

_SPEC_PATTERN = re.compile(r'^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$')


def factor_prime_power(q: int) -> Tuple[int, int]:
    """Return (p, e) with q = p^e, or raise for non prime powers."""
    if q < 2:
        raise FieldSpecError(f"{q} is not a prime power", spec=str(q))
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise FieldSpecError(f"{q} is not a prime power", spec=str(q))
    (p, e), = factors.items()
    return int(p), int(e)


def parse_modulus(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    """Comma-separated coefficients, constant term first."""
    if text is None or not str(text).strip():
        return None
    try:
        return tuple(int(part) for part in str(text).split(','))
    except ValueError:
        raise FieldSpecError(f"malformed modulus '{text}'", spec=None, modulus=text)


def parse_field_spec(text: str, modulus: Optional[Sequence[int]] = None,
                     max_q: int = MAX_Q) -> FieldSpec:
    """Parse "p^e" or "q" (e.g. "3", "9", "3^2") into a FieldSpec."""
    match = _SPEC_PATTERN.match(str(text))
    if not match:
        raise FieldSpecError(f"malformed field specification '{text}'", spec=str(text))
    base = int(match.group(1))
    if match.group(2) is not None:
        p, e = base, int(match.group(2))
        if not sympy.isprime(p):
            raise FieldSpecError(f"{p} is not prime", spec=str(text))
        q = p ** e
    else:
        q = base
    return get_field(q, tuple(modulus) if modulus else None, max_q=max_q)


@lru_cache(maxsize=32)
def get_field(q: int, modulus: Optional[Tuple[int, ...]] = None, max_q: int = MAX_Q) -> FieldSpec:
    """Shared FieldSpec for q, with the built-in modulus unless overridden."""
    p, e = factor_prime_power(q)
    if p == 2:
        raise FieldSpecError(f"q = {q} is even; only odd q are supported", spec=str(q))
    if q > max_q:
        raise FieldSpecError(f"q = {q} exceeds the configured cap {max_q}", spec=str(q), max_q=max_q)
    if e > 1 and modulus is None:
        modulus = BUILTIN_MODULI.get(q)
        if modulus is None:
            raise FieldSpecError(f"no built-in modulus for q = {q}; pass one explicitly", spec=str(q))
    spec = FieldSpec(p, e, modulus or ())
    logger.info(f"Field F_{q} ready")
    return spec
