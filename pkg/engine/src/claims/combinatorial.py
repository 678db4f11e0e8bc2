"""Claims about the structure of GammaSquare(n,k,q): edges, cliques, symmetry, neighbourhoods, sizes."""
import logging

from services.field import get_field
from services.graph import clique_sum_class, is_direct_sum_witness
from .base import BaseClaim, ClaimResult, ClaimStatus

logger = logging.getLogger(__name__)


def clique_bound(n: int, k: int) -> int:
    """floor((n-1)/k): the largest l with k*l <= n-1."""
    return (n - 1) // k


class EdgelessAboveHalfClaim(BaseClaim):
    claim_id = "edgeless-above-half"
    description = "GammaSquare(n,k,q) has no edges when k >= n/2"

    def skip_reason(self, context):
        if context.below_half:
            return "only for k >= n/2"
        return None

    def check(self, context) -> ClaimResult:
        graph = context.gamma_square
        return self.verdict(context, 0, graph.edge_count, graph.edge_count == 0,
                            vertex_count=graph.vertex_count)


class CliqueBoundClaim(BaseClaim):
    claim_id = "clique-bound"
    description = "clique number of GammaSquare(n,k,q) is at most floor((n-1)/k)"

    def check(self, context) -> ClaimResult:
        expected = clique_bound(context.n, context.k)
        result = context.clique
        return self.verdict(context, expected, result.size, result.size <= expected,
                            nodes=result.nodes)


class CliqueAttainedClaim(BaseClaim):
    claim_id = "clique-attained"
    description = "a clique of size floor((n-1)/k) exists and its vertices sum to a dot_{kl}-subspace"

    def check(self, context) -> ClaimResult:
        expected = clique_bound(context.n, context.k)
        result = context.clique
        graph = context.gamma_square
        witness = bool(result.clique) and is_direct_sum_witness(graph, result.clique)
        sum_class = str(clique_sum_class(graph, result.clique)) if result.clique else None
        return self.verdict(
            context, expected, result.size, result.size == expected and witness,
            clique=[graph.vertices[v].to_dict() for v in result.clique],
            sum_class=sum_class,
            direct_sum_witness=witness,
        )


class VertexTransitiveClaim(BaseClaim):
    claim_id = "vertex-transitive"
    description = "the group generated by reflections acts transitively on the vertices"

    def check(self, context) -> ClaimResult:
        report = context.orbits
        return self.verdict(context, report.vertex_count, report.vertex_orbit_size,
                            report.vertex_transitive, generators=report.generator_count)


class ArcTransitiveClaim(BaseClaim):
    claim_id = "arc-transitive"
    description = "the group generated by reflections acts transitively on ordered adjacent pairs"

    def check(self, context) -> ClaimResult:
        report = context.orbits
        if report.arc_check_skipped:
            return self.result(context, report.arc_count, None, ClaimStatus.SKIPPED,
                               reason=report.skip_reason)
        return self.verdict(context, report.arc_count, report.arc_orbit_size,
                            bool(report.arc_transitive), generators=report.generator_count)


class NeighborhoodIsomorphismClaim(BaseClaim):
    claim_id = "neighborhood-isomorphism"
    description = "every neighbourhood maps onto GammaSquare(n-k,k,q) by an isometry, preserving adjacency"

    def skip_reason(self, context):
        if not context.below_half:
            return "neighbourhoods are empty when k >= n/2"
        return None

    def check(self, context) -> ClaimResult:
        maps = context.neighborhood_maps
        failures = [m.vertex for m in maps if not m.ok]
        return self.verdict(
            context,
            expected=context.neighborhood_graph.label,
            observed=f"{len(maps) - len(failures)}/{len(maps)} neighbourhoods mapped",
            holds=not failures,
            failing_vertices=failures[:20],
        )


class NeighborhoodDegreeClaim(BaseClaim):
    claim_id = "neighborhood-degree"
    description = "GammaSquare(n,k,q) is regular of degree |V(GammaSquare(n-k,k,q))|"

    def check(self, context) -> ClaimResult:
        expected = context.neighborhood_count
        graph = context.gamma_square
        regular = graph.is_regular()
        degree = int(graph.degrees[0]) if regular and graph.vertex_count else None
        return self.verdict(context, expected, degree, regular and degree == expected,
                            regular=regular)


class AsymptoticRatiosClaim(BaseClaim):
    claim_id = "asymptotic-ratios"
    description = "vertex and degree counts against q^{k(n-k)}/2 and q^{k(n-2k)}/2"

    def check(self, context) -> ClaimResult:
        from evaluation.metrics import MetricsCalculator

        banded = (context.n, context.k) in context.band_instances
        qs = sorted(set(context.band_qs) | {context.q}) if banded else [context.q]
        rows = []
        for q in qs:
            field = context.field if q == context.q else get_field(q)
            rows.append(MetricsCalculator.table_ratios(context.n, context.k, field, cache=context.cache))
        observed = {str(r["q"]): {"vertex_ratio": r["vertex_ratio"], "degree_ratio": r["degree_ratio"]}
                    for r in rows}
        expected = {str(r["q"]): r["gating_band"] for r in rows}
        if not banded:
            return self.result(context, expected, observed, ClaimStatus.MEASURED, rows=rows,
                               reason="(n,k) outside the configured band instances")
        return self.verdict(context, expected, observed,
                            all(MetricsCalculator.row_passes(r) for r in rows), rows=rows)
