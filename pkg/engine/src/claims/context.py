"""Shared, lazily built artifacts for one verification run."""
import logging
from typing import Any, Callable, Dict, List, Optional

from config.constants import (
    ARC_CHECK_MAX_ARCS,
    BAND_INSTANCES,
    BAND_QS,
    CLIQUE_NODE_BUDGET,
    DEFAULT_SEED,
    EIGEN_MAX_VERTICES,
    EIGENSOLVER,
    GAP_TRIALS,
    GRAPH_WORKERS,
    LOOP_POLICY,
    MAX_GRAPH_VERTICES,
)
from services.field import FieldSpec
from services.graph import (
    CliqueResult,
    LoopPolicy,
    NeighborhoodMap,
    OrbitReport,
    OrthGraph,
    build_gamma_bar,
    build_gamma_square,
    dotk_subspaces,
    max_clique,
    orbit_check,
    verify_neighborhoods,
    with_loop_policy,
)
from services.spectral import IdentityResidual, SpectralReport, eigenvalues, identity_residual

logger = logging.getLogger(__name__)


class VerificationContext:
    """
    Parameters of one (n, k, q) instance plus memoised graphs and reports.

    Every artifact is built at most once; a budget error raised while building
    is memoised too, so all claims depending on it are skipped consistently.
    """

    def __init__(self, n: int, k: int, field: FieldSpec, cache=None,
                 loop_policy: str = LOOP_POLICY,
                 max_vertices: int = MAX_GRAPH_VERTICES,
                 clique_budget: int = CLIQUE_NODE_BUDGET,
                 eigen_cap: int = EIGEN_MAX_VERTICES,
                 eigensolver: str = EIGENSOLVER,
                 max_arcs: int = ARC_CHECK_MAX_ARCS,
                 trials: int = GAP_TRIALS,
                 seed: int = DEFAULT_SEED,
                 band_qs=BAND_QS,
                 band_instances=BAND_INSTANCES,
                 workers: int = GRAPH_WORKERS):
        self.n = n
        self.k = k
        self.field = field
        self.cache = cache
        self.loop_policy = LoopPolicy(loop_policy)
        self.max_vertices = max_vertices
        self.clique_budget = clique_budget
        self.eigen_cap = eigen_cap
        self.eigensolver = eigensolver
        self.max_arcs = max_arcs
        self.trials = trials
        self.seed = seed
        self.band_qs = tuple(band_qs)
        self.band_instances = tuple(tuple(pair) for pair in band_instances)
        self.workers = workers
        self._artifacts: Dict[str, Any] = {}

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def instance(self) -> Dict[str, int]:
        return {"n": self.n, "k": self.k, "q": self.q}

    @property
    def label(self) -> str:
        return f"(n={self.n}, k={self.k}, q={self.q})"

    @property
    def below_half(self) -> bool:
        """k < n/2: neighbourhoods are nonempty."""
        return 2 * self.k < self.n

    @property
    def below_third(self) -> bool:
        """k < n/3: the sqrt(d_bar - a_bar) bound carries over to GammaSquare."""
        return 3 * self.k < self.n

    def _memo(self, key: str, builder: Callable[[], Any]) -> Any:
        if key not in self._artifacts:
            try:
                self._artifacts[key] = builder()
            except Exception as e:
                self._artifacts[key] = e
                raise
        value = self._artifacts[key]
        if isinstance(value, Exception):
            raise value
        return value

    def _build_kwargs(self) -> Dict[str, Any]:
        return {"cache": self.cache, "max_vertices": self.max_vertices, "workers": self.workers}

    @property
    def gamma_square(self) -> OrthGraph:
        return self._memo("gamma_square", lambda: build_gamma_square(
            self.n, self.k, self.field, **self._build_kwargs()))

    def gamma_bar(self, loop_policy: Optional[LoopPolicy] = None) -> OrthGraph:
        policy = LoopPolicy(loop_policy or self.loop_policy)
        base = self._memo("gamma_bar", lambda: build_gamma_bar(
            self.n, self.k, self.field, loop_policy=self.loop_policy, **self._build_kwargs()))
        return self._memo(f"gamma_bar:{policy.value}", lambda: with_loop_policy(base, policy))

    @property
    def neighborhood_graph(self) -> OrthGraph:
        """GammaSquare(n-k, k, q)."""
        return self._memo("neighborhood_graph", lambda: build_gamma_square(
            self.n - self.k, self.k, self.field, **self._build_kwargs()))

    @property
    def neighborhood_count(self) -> int:
        """|V(GammaSquare(n-k, k, q))| by direct enumeration, 0 when k > n - k."""
        def count():
            if self.k > self.n - self.k:
                return 0
            return len(dotk_subspaces(self.n - self.k, self.k, self.field, cache=self.cache))
        return self._memo("neighborhood_count", count)

    @property
    def clique(self) -> CliqueResult:
        return self._memo("clique", lambda: max_clique(self.gamma_square, node_budget=self.clique_budget))

    @property
    def orbits(self) -> OrbitReport:
        return self._memo("orbits", lambda: orbit_check(self.gamma_square, max_arcs=self.max_arcs))

    @property
    def neighborhood_maps(self) -> List[NeighborhoodMap]:
        return self._memo("neighborhood_maps", lambda: verify_neighborhoods(
            self.gamma_square, target=self.neighborhood_graph))

    @property
    def square_spectrum(self) -> SpectralReport:
        return self._memo("square_spectrum", lambda: eigenvalues(
            self.gamma_square, cap=self.eigen_cap, solver=self.eigensolver))

    def bar_spectrum(self, loop_policy: Optional[LoopPolicy] = None) -> SpectralReport:
        policy = LoopPolicy(loop_policy or self.loop_policy)
        return self._memo(f"bar_spectrum:{policy.value}", lambda: eigenvalues(
            self.gamma_bar(policy), cap=self.eigen_cap, solver=self.eigensolver))

    def identity(self, loop_policy: Optional[LoopPolicy] = None) -> IdentityResidual:
        policy = LoopPolicy(loop_policy or self.loop_policy)
        return self._memo(f"identity:{policy.value}", lambda: identity_residual(
            self.gamma_bar(policy), workers=self.workers))
