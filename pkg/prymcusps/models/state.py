"""Per-discriminant state passed between property checks in a sweep."""

from typing import Any, Dict, List, TypedDict

from prymcusps.models.schemas import AlgebraicPrototype, Prototype


class SweepState(TypedDict):
    """
    State object threaded through the checks for one discriminant.

    The orchestrator fills the inputs; each check adds its entry to
    ``results`` and timing to ``metadata``.
    """

    # Input
    discriminant: int
    prototypes: List[Prototype]
    algebraic: List[AlgebraicPrototype]

    # Output: check name -> {"checked": int, "failures": [str, ...]}
    results: Dict[str, Dict[str, Any]]

    # Metadata
    errors: List[str]
    metadata: Dict[str, Any]
