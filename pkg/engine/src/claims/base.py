"""
Claim Abstraction Layer
Base class for every verified statement about the orthogonality graphs
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from utils.errors import BudgetExceededError
from utils.tracing import Tracer

logger = logging.getLogger(__name__)


class ClaimStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    MEASURED = "measured"  # reported, not asserted
    SKIPPED = "skipped"  # over a configured budget
    NOT_APPLICABLE = "not_applicable"


@dataclass
class ClaimResult:
    """One entry of the verification report."""
    claim_id: str
    instance: Dict[str, int]
    expected: Any
    observed: Any
    status: ClaimStatus
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is not ClaimStatus.FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claimId": self.claim_id,
            "instance": dict(self.instance),
            "expected": self.expected,
            "observed": self.observed,
            "pass": self.passed,
            "status": self.status.value,
            "details": self.details,
        }


class BaseClaim(ABC):
    """A statement checked against one (n, k, q) instance."""

    claim_id: str = ""
    description: str = ""

    def skip_reason(self, context) -> Optional[str]:
        """Reason the claim says nothing about this instance, or None."""
        return None

    @abstractmethod
    def check(self, context) -> ClaimResult:
        """Evaluate the claim (implemented by subclasses)"""
        pass

    def run(self, context) -> ClaimResult:
        """check() with applicability, budget handling and tracing."""
        reason = self.skip_reason(context)
        if reason:
            return self.result(context, None, None, ClaimStatus.NOT_APPLICABLE, reason=reason)
        ctx = Tracer.start_trace(f"claim {self.claim_id}")
        try:
            result = self.check(context)
        except BudgetExceededError as e:
            logger.warning(f"{self.claim_id} skipped on {context.label}: {e.message}")
            result = self.result(context, None, None, ClaimStatus.SKIPPED, reason=e.message, **e.details)
        finally:
            Tracer.end_trace(ctx, f"claim {self.claim_id}")
        if result.passed:
            logger.info(f"{self.claim_id} on {context.label}: {result.status.value}")
        else:
            logger.error(f"{self.claim_id} FAILED on {context.label}: expected {result.expected}, "
                         f"observed {result.observed}")
        return result

    def result(self, context, expected, observed, status, **details) -> ClaimResult:
        return ClaimResult(self.claim_id, context.instance, expected, observed, ClaimStatus(status), details)

    def verdict(self, context, expected, observed, holds: bool, **details) -> ClaimResult:
        status = ClaimStatus.PASS if holds else ClaimStatus.FAIL
        return self.result(context, expected, observed, status, **details)
