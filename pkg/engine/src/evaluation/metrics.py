"""
Metrics calculator for verification runs
Ratio bands against leading-order counts and report aggregation
"""
from collections import Counter
from typing import Any, Dict, List, Optional, Tuple

from config.constants import RATIO_BAND
from services.field import FieldSpec
from services.graph import GraphKind, counted_vertices_and_degree, leading_counts

_BAND_SLACK = 1e-9


class MetricsCalculator:
    """Calculate ratio metrics and summaries"""

    @staticmethod
    def gating_band(q: int, nominal: Tuple[float, float] = RATIO_BAND) -> Tuple[float, float]:
        """Nominal band widened by the leading finite-q correction 1 -/+ 1/q."""
        low, high = nominal
        return min(low, 1.0 - 1.0 / q), max(high, 1.0 + 1.0 / q)

    @staticmethod
    def in_band(value: Optional[float], band: Tuple[float, float]) -> Optional[bool]:
        if value is None:
            return None
        return band[0] - _BAND_SLACK <= value <= band[1] + _BAND_SLACK

    @staticmethod
    def table_ratios(n: int, k: int, field: FieldSpec, cache=None,
                     nominal: Tuple[float, float] = RATIO_BAND) -> Dict[str, Any]:
        """Exact GammaSquare counts divided by q^{k(n-k)}/2 and q^{k(n-2k)}/2."""
        q = field.q
        vertex_count, degree = counted_vertices_and_degree(n, k, field, cache=cache)
        leading = leading_counts(GraphKind.GAMMA_SQUARE, n, k, q)
        vertex_ratio = vertex_count / leading["vertices"]
        degree_ratio = degree / leading["degree"] if degree is not None and leading["degree"] else None
        gating = MetricsCalculator.gating_band(q, nominal)
        row = {
            "n": n,
            "k": k,
            "q": q,
            "vertex_count": vertex_count,
            "degree": degree,
            "vertex_ratio": round(vertex_ratio, 8),
            "degree_ratio": None if degree_ratio is None else round(degree_ratio, 8),
            "gating_band": [round(b, 8) for b in gating],
        }
        for name, value in (("vertex", vertex_ratio), ("degree", degree_ratio)):
            row[f"{name}_in_nominal_band"] = MetricsCalculator.in_band(value, nominal)
            row[f"{name}_in_gating_band"] = MetricsCalculator.in_band(value, gating)
        return row

    @staticmethod
    def row_passes(row: Dict[str, Any]) -> bool:
        return row["vertex_in_gating_band"] is not False and row["degree_in_gating_band"] is not False

    @staticmethod
    def aggregate_results(results: List[Dict[str, Any]]) -> Dict[str, Any]:
        """Counts per status plus the failing claim ids."""
        statuses = Counter(r["status"] for r in results)
        return {
            "total": len(results),
            "passed": sum(1 for r in results if r["pass"]),
            "failed": statuses.get("fail", 0),
            "by_status": dict(sorted(statuses.items())),
            "failures": [f"{r['claimId']}@{r['instance']['n']},{r['instance']['k']},{r['instance']['q']}"
                         for r in results if not r["pass"]],
        }
