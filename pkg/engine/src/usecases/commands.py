"""Command use cases - one method per CLI subcommand."""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from claims import VerificationContext
from config.constants import EIGENSOLVER, MAX_GRAPH_VERTICES
from config.models import RunConfig
from evaluation import ClaimVerifier
from services.cache import SubspaceCache
from services.field import FieldSpec, get_field
from services.graph import (
    LoopPolicy,
    OrthGraph,
    build_gamma_bar,
    build_gamma_square,
    clique_sum_class,
    dot_text,
    edgelist_text,
    is_direct_sum_witness,
    json_text,
    max_clique,
    orbit_check,
    stats,
    write_edgelist,
)
from services.spectral import eigenvalues, gap_trials, identity_residual, spectral_gap_threshold
from utils.errors import ValidationError
from utils.tracing import Tracer

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2


@dataclass
class CommandOutput:
    """What a command prints to stdout, plus its exit status."""
    payload: Optional[Dict[str, Any]] = None
    text: Optional[str] = None
    exit_code: int = EXIT_OK

    def render(self) -> str:
        if self.text is not None:
            return self.text
        return json_text(self.payload or {})


def _policies(loop_policy: str) -> List[LoopPolicy]:
    if loop_policy == "both":
        return [LoopPolicy.INCLUDE, LoopPolicy.EXCLUDE]
    return [LoopPolicy(loop_policy)]


def _eigen_csv(report) -> str:
    lines = [f"# {report.graph} loop_policy={report.loop_policy}", "index,eigenvalue"]
    lines += [f"{i},{report.rounded(v):.{report.digits}f}" for i, v in enumerate(report.eigenvalues)]
    return "\n".join(lines) + "\n"


class CommandUseCase:
    """
    Orchestration layer between the CLI and the services.

    Resolves the field and cache once, builds graphs on demand and formats
    each command's result. Contains no graph logic of its own.
    """

    def __init__(self, run: RunConfig, cache: Optional[SubspaceCache] = None,
                 max_vertices: int = MAX_GRAPH_VERTICES, eigensolver: str = EIGENSOLVER):
        self.run = run
        self.field: FieldSpec = get_field(run.q, tuple(run.modulus) if run.modulus else None)
        self.cache = cache or SubspaceCache(run.cache_dir)
        self.max_vertices = max_vertices
        self.eigensolver = eigensolver

    @property
    def commands(self) -> Dict[str, Callable[[], CommandOutput]]:
        return {
            "build": self.build,
            "stats": self.stats,
            "cliques": self.cliques,
            "orbits": self.orbits,
            "spectrum": self.spectrum,
            "verify-identity": self.verify_identity,
            "gap-test": self.gap_test,
            "verify-all": self.verify_all,
            "export": self.export,
        }

    def execute(self, command: str) -> CommandOutput:
        if command not in self.commands:
            raise ValidationError(f"Unknown command: {command}", field="command")
        ctx = Tracer.start_trace(command)
        try:
            return self.commands[command]()
        finally:
            Tracer.end_trace(ctx, command)

    # graphs

    def _default_policy(self) -> LoopPolicy:
        return _policies(self.run.loop_policy)[0]

    def gamma_square(self) -> OrthGraph:
        return build_gamma_square(self.run.n, self.run.k, self.field, cache=self.cache,
                                  max_vertices=self.max_vertices)

    def gamma_bar(self, loop_policy: Optional[LoopPolicy] = None) -> OrthGraph:
        return build_gamma_bar(self.run.n, self.run.k, self.field,
                               loop_policy=loop_policy or self._default_policy(),
                               cache=self.cache, max_vertices=self.max_vertices)

    def selected_graph(self) -> OrthGraph:
        return self.gamma_bar() if self.run.graph == "bar" else self.gamma_square()

    def context(self) -> VerificationContext:
        if self.run.loop_policy == "both":
            raise ValidationError("verify-all runs under a single loop policy", field="loop_policy")
        return VerificationContext(
            self.run.n, self.run.k, self.field, cache=self.cache,
            loop_policy=self.run.loop_policy,
            max_vertices=self.max_vertices,
            clique_budget=self.run.clique_budget,
            eigen_cap=self.run.eigen_cap,
            eigensolver=self.eigensolver,
            trials=self.run.trials,
            seed=self.run.seed,
        )

    # commands

    def _write_graph(self, graph: OrthGraph, output_format: str) -> Optional[str]:
        """Write the graph to --output in the given format; returns stdout text when no file is given."""
        output = self.run.output
        if output_format == "edgelist":
            if not output:
                raise ValidationError("edgelist export needs --output (a vertex table is written beside it)",
                                      field="output")
            write_edgelist(graph, output)
            return None
        if output_format == "dot":
            text = dot_text(graph)
        elif output_format == "csv":
            text = "u,v\n" + edgelist_text(graph).replace(" ", ",")
        else:
            text = json_text(stats(graph).to_dict())
        if output:
            Path(output).write_text(text)
            logger.info(f"Wrote {output_format} for {graph.label} to {output}")
            return None
        return text

    def build(self) -> CommandOutput:
        graph = self.selected_graph()
        summary = stats(graph).to_dict()
        if self.run.output:
            self._write_graph(graph, self.run.output_format)
            summary["output"] = self.run.output
        return CommandOutput(payload=summary)

    def export(self) -> CommandOutput:
        graph = self.selected_graph()
        output_format = self.run.output_format
        text = self._write_graph(graph, output_format)
        if text is not None:
            return CommandOutput(text=text)
        return CommandOutput(payload={"graph": graph.label, "format": output_format, "output": self.run.output})

    def stats(self) -> CommandOutput:
        graph = self.selected_graph()
        clique = None
        if graph.vertex_count and self.run.graph == "square":
            clique = max_clique(graph, node_budget=self.run.clique_budget).size
        return CommandOutput(payload=stats(graph, clique_number=clique).to_dict())

    def cliques(self) -> CommandOutput:
        graph = self.gamma_square()
        result = max_clique(graph, node_budget=self.run.clique_budget)
        bound = (self.run.n - 1) // self.run.k
        payload = {
            "graph": graph.label,
            "clique_number": result.size,
            "bound": bound,
            "attains_bound": result.size == bound,
            "clique": [repr(graph.vertices[v]) for v in result.clique],
            "sum_class": str(clique_sum_class(graph, result.clique)) if result.clique else None,
            "direct_sum_witness": bool(result.clique) and is_direct_sum_witness(graph, result.clique),
            "search_nodes": result.nodes,
        }
        return CommandOutput(payload=payload)

    def orbits(self) -> CommandOutput:
        graph = self.selected_graph()
        payload = {"graph": graph.label, **orbit_check(graph).to_dict()}
        return CommandOutput(payload=payload)

    def spectrum(self) -> CommandOutput:
        if self.run.graph == "square":
            graphs = [self.gamma_square()]
        else:
            graphs = [self.gamma_bar(policy) for policy in _policies(self.run.loop_policy)]
        reports = [eigenvalues(g, cap=self.run.eigen_cap, solver=self.eigensolver) for g in graphs]
        if self.run.output_format == "csv":
            return CommandOutput(text="".join(_eigen_csv(r) for r in reports))
        return CommandOutput(payload={"reports": [r.to_dict() for r in reports]})

    def verify_identity(self) -> CommandOutput:
        results = [identity_residual(self.gamma_bar(policy)) for policy in _policies(self.run.loop_policy)]
        failed = any(r.loop_policy == LoopPolicy.INCLUDE.value and not r.transverse_holds for r in results)
        return CommandOutput(payload={"reports": [r.to_dict() for r in results]},
                             exit_code=EXIT_CLAIM_FAILED if failed else EXIT_OK)

    def gap_test(self) -> CommandOutput:
        graph = self.gamma_square()
        report = eigenvalues(graph, cap=self.run.eigen_cap, solver=self.eigensolver)
        n_star = spectral_gap_threshold(graph, report)
        trials = gap_trials(graph, n_star, trials=self.run.trials, seed=self.run.seed)
        payload = {
            "graph": graph.label,
            "n_star": round(n_star, report.digits),
            "n_star_over_q_nk_half": round(n_star / graph.q ** (graph.n * graph.k / 2), report.digits),
            **trials.to_dict(),
        }
        return CommandOutput(payload=payload, exit_code=EXIT_OK if trials.passed else EXIT_CLAIM_FAILED)

    def verify_all(self) -> CommandOutput:
        report = ClaimVerifier().verify([self.context()], claim_ids=self.run.claims)
        return CommandOutput(payload=report.to_dict(),
                             exit_code=EXIT_OK if report.passed else EXIT_CLAIM_FAILED)


def verify_suite(runs: List[RunConfig], cache: Optional[SubspaceCache] = None,
                 max_vertices: int = MAX_GRAPH_VERTICES) -> CommandOutput:
    """verify-all over several instances in one report."""
    contexts = [CommandUseCase(run, cache=cache, max_vertices=max_vertices).context() for run in runs]
    claim_ids = runs[0].claims if runs else None
    report = ClaimVerifier().verify(contexts, claim_ids=claim_ids)
    return CommandOutput(payload=report.to_dict(),
                         exit_code=EXIT_OK if report.passed else EXIT_CLAIM_FAILED)


def cache_command(action: str, cache_dir: Optional[str] = None) -> CommandOutput:
    cache = SubspaceCache(cache_dir)
    if action == "list":
        return CommandOutput(payload={"directory": str(cache.directory), "entries": cache.entries()})
    if action == "clear":
        return CommandOutput(payload={"directory": str(cache.directory), "removed": cache.clear()})
    raise ValidationError(f"Unknown cache action: {action}", field="action")
