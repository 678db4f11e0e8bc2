"""On-disk cache for enumerated subspace arrays (JSON header + .npy payload)."""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from config.constants import CACHE_ENABLED, resolve_cache_dir
from services.field import FieldSpec

logger = logging.getLogger(__name__)

HEADER_VERSION = 1


class SubspaceCache:
    """File cache keyed by (n, k, q, modulus); any mismatch or read error is a miss."""

    def __init__(self, cache_dir: Optional[str] = None, enabled: bool = CACHE_ENABLED):
        self.enabled = enabled
        self.directory: Path = resolve_cache_dir(cache_dir)

    def _stem(self, field: FieldSpec, n: int, k: int) -> Path:
        name = f"subspaces_n{n}_k{k}_q{field.q}"
        if field.modulus:
            name += "_m" + "-".join(str(c) for c in field.modulus)
        return self.directory / name

    @staticmethod
    def _header(field: FieldSpec, n: int, k: int, count: int) -> Dict[str, Any]:
        return {
            "version": HEADER_VERSION,
            "n": n,
            "k": k,
            "q": field.q,
            "p": field.p,
            "e": field.e,
            "modulus": list(field.modulus),
            "count": count,
        }

    def load(self, field: FieldSpec, n: int, k: int, expected_count: int) -> Optional[np.ndarray]:
        """Cached (count, k, n) array, or None on miss."""
        if not self.enabled:
            return None
        stem = self._stem(field, n, k)
        try:
            header_path = stem.with_suffix('.json')
            if not header_path.exists():
                return None
            header = json.loads(header_path.read_text())
            if header != self._header(field, n, k, expected_count):
                logger.warning(f"Cache header mismatch for {stem.name}, ignoring entry")
                return None
            bases = np.load(stem.with_suffix('.npy'), allow_pickle=False)
            if bases.shape != (expected_count, k, n):
                logger.warning(f"Cache payload shape {bases.shape} invalid for {stem.name}")
                return None
            logger.debug(f"Subspace cache hit: {stem.name}")
            return bases.astype(np.intp)
        except Exception as e:
            logger.warning(f"Cache read error: {e}")
            return None

    def store(self, field: FieldSpec, n: int, k: int, bases: np.ndarray):
        if not self.enabled:
            return
        stem = self._stem(field, n, k)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            np.save(stem.with_suffix('.npy'), np.asarray(bases, dtype=np.uint8), allow_pickle=False)
            # Header last: a half-written payload is never read
            stem.with_suffix('.json').write_text(
                json.dumps(self._header(field, n, k, len(bases)), sort_keys=True)
            )
            logger.debug(f"Subspaces cached: {stem.name}")
        except Exception as e:
            logger.warning(f"Cache write error: {e} - caching disabled")
            self.enabled = False

    def entries(self) -> List[Dict[str, Any]]:
        """Headers of all cache entries, sorted by file name."""
        if not self.directory.exists():
            return []
        found = []
        for header_path in sorted(self.directory.glob('subspaces_*.json')):
            try:
                header = json.loads(header_path.read_text())
                header["file"] = header_path.stem
                found.append(header)
            except Exception as e:
                logger.warning(f"Unreadable cache header {header_path.name}: {e}")
        return found

    def clear(self) -> int:
        """Remove all cache files; returns the number of entries removed."""
        if not self.directory.exists():
            return 0
        removed = 0
        for path in sorted(self.directory.glob('subspaces_*')):
            try:
                path.unlink()
                if path.suffix == '.json':
                    removed += 1
            except OSError as e:
                logger.warning(f"Cannot remove {path}: {e}")
        logger.info(f"Cleared {removed} cache entries from {self.directory}")
        return removed
