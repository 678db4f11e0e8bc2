"""
Claim Manager - registry of every verified statement
"""
import logging
from typing import Dict, List, Optional, Sequence, Type

from utils.errors import ValidationError
from .base import BaseClaim
from .combinatorial import (
    ArcTransitiveClaim,
    AsymptoticRatiosClaim,
    CliqueAttainedClaim,
    CliqueBoundClaim,
    EdgelessAboveHalfClaim,
    NeighborhoodDegreeClaim,
    NeighborhoodIsomorphismClaim,
    VertexTransitiveClaim,
)
from .forms import ClassificationTableClaim, EnumerationCountClaim, SpacelikeLinesClaim
from .spectral import (
    EigensolverFixturesClaim,
    EigenvalueBoundClaim,
    FullGraphBoundClaim,
    InterlacingClaim,
    IntersectionBucketsClaim,
    SpectralGapEdgesClaim,
    TransverseIdentityClaim,
)

logger = logging.getLogger(__name__)


class ClaimManager:
    """Resolves claim ids to claim instances, in report order"""

    # Registry of available claims; insertion order is report order
    CLAIM_REGISTRY: Dict[str, Type[BaseClaim]] = {
        cls.claim_id: cls for cls in (
            ClassificationTableClaim,
            EnumerationCountClaim,
            SpacelikeLinesClaim,
            EdgelessAboveHalfClaim,
            CliqueBoundClaim,
            CliqueAttainedClaim,
            VertexTransitiveClaim,
            ArcTransitiveClaim,
            NeighborhoodIsomorphismClaim,
            NeighborhoodDegreeClaim,
            AsymptoticRatiosClaim,
            TransverseIdentityClaim,
            IntersectionBucketsClaim,
            FullGraphBoundClaim,
            EigenvalueBoundClaim,
            InterlacingClaim,
            SpectralGapEdgesClaim,
            EigensolverFixturesClaim,
        )
    }

    def __init__(self):
        self.loaded_claims: Dict[str, BaseClaim] = {}

    def load_claim(self, claim_id: str) -> BaseClaim:
        if claim_id in self.loaded_claims:
            return self.loaded_claims[claim_id]
        if claim_id not in self.CLAIM_REGISTRY:
            raise ValidationError(
                f"Unknown claim: {claim_id}",
                field="claims",
                available=self.list_available_claims(),
            )
        claim = self.CLAIM_REGISTRY[claim_id]()
        self.loaded_claims[claim_id] = claim
        logger.debug(f"Loaded claim: {claim_id}")
        return claim

    def select(self, claim_ids: Optional[Sequence[str]] = None) -> List[BaseClaim]:
        """Claims in registry order; all of them when claim_ids is None."""
        if claim_ids is None:
            wanted = list(self.CLAIM_REGISTRY)
        else:
            unknown = [c for c in claim_ids if c not in self.CLAIM_REGISTRY]
            if unknown:
                raise ValidationError(f"Unknown claims: {', '.join(unknown)}", field="claims",
                                      available=self.list_available_claims())
            wanted = [c for c in self.CLAIM_REGISTRY if c in set(claim_ids)]
        return [self.load_claim(c) for c in wanted]

    def list_available_claims(self) -> List[str]:
        return list(self.CLAIM_REGISTRY.keys())
