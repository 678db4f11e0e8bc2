"""
Claim verifier: runs the registered claims against one or more instances
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from claims import ClaimManager, ClaimResult, ClaimStatus, VerificationContext
from utils.errors import FrameworkError
from .metrics import MetricsCalculator

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    """Per-claim entries for every requested instance; no timings, so reruns are byte-identical."""
    instances: List[Dict[str, int]]
    loop_policy: str
    seed: int
    results: List[ClaimResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[ClaimResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        entries = [r.to_dict() for r in self.results]
        return {
            "instances": self.instances,
            "loop_policy": self.loop_policy,
            "seed": self.seed,
            "claims": entries,
            "summary": MetricsCalculator.aggregate_results(entries),
            "pass": self.passed,
        }


class ClaimVerifier:
    """Evaluate registered claims"""

    def __init__(self, claim_manager: Optional[ClaimManager] = None):
        self.claim_manager = claim_manager or ClaimManager()

    def evaluate_claim(self, claim, context: VerificationContext) -> ClaimResult:
        """Run one claim; a framework error inside it is a failed entry, not a crash."""
        try:
            return claim.run(context)
        except FrameworkError as e:
            logger.error(f"{claim.claim_id} raised on {context.label}: {e.message}")
            return claim.result(context, None, None, ClaimStatus.FAIL, error=e.to_dict())

    def verify_instance(self, context: VerificationContext,
                        claim_ids: Optional[Sequence[str]] = None) -> List[ClaimResult]:
        claims = self.claim_manager.select(claim_ids)
        logger.info(f"Verifying {len(claims)} claims on {context.label}")
        return [self.evaluate_claim(claim, context) for claim in claims]

    def verify(self, contexts: Sequence[VerificationContext],
               claim_ids: Optional[Sequence[str]] = None) -> VerificationReport:
        """Every selected claim exactly once per instance, in registry order."""
        first = contexts[0] if contexts else None
        report = VerificationReport(
            instances=[c.instance for c in contexts],
            loop_policy=first.loop_policy.value if first else "",
            seed=first.seed if first else 0,
        )
        for context in contexts:
            report.results.extend(self.verify_instance(context, claim_ids))
        summary = MetricsCalculator.aggregate_results([r.to_dict() for r in report.results])
        if report.passed:
            logger.info(f"All {summary['total']} claim entries passed")
        else:
            logger.error(f"{summary['failed']} claim entries failed: {summary['failures']}")
        return report
