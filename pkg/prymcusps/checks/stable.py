"""Identities of the stable fibers over the cusps."""

from prymcusps.checks.base import BaseCheck, CheckOutcome, tally
from prymcusps.config import get_settings
from prymcusps.models.state import SweepState
from prymcusps.services.stablecurve import (
    fiber_ids,
    galois_compatible,
    marked_points_distinct,
    node_constant,
    residue_identity_check,
    s_from_residues,
    s_param,
    same_fiber,
    stable_fiber,
)


class MarkedPointIdentityCheck(BaseCheck):
    """x1 + x3 = -2s and x1 x3 = (4s^2 - 1)/3 exactly; complex exactly when u < 0."""

    name = "marked_point_identities"

    def execute(self, state: SweepState) -> CheckOutcome:
        def holds(A) -> bool:
            fiber = stable_fiber(A)
            s = fiber.s
            return (
                fiber.x1.pair_sum(fiber.x3) == -2 * s
                and fiber.x1.pair_product(fiber.x3) == (4 * s * s - 1) / 3
                and fiber.is_complex == (s > 1)
            )

        return tally(state["algebraic"], holds)


class MarkedPointDistinctCheck(BaseCheck):
    name = "marked_points_distinct"

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(state["algebraic"], lambda A: marked_points_distinct(stable_fiber(A)))


class GaloisFiberCheck(BaseCheck):
    """s(A^sigma) = +-conj(s(A))."""

    name = "galois_s_compatibility"

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(state["algebraic"], galois_compatible)


class FiberSeparationCheck(BaseCheck):
    """same_fiber is reflexive and separates distinct algebraic prototypes."""

    name = "fiber_equivalence"

    def execute(self, state: SweepState) -> CheckOutcome:
        prototypes = state["algebraic"]
        outcome = tally(prototypes, lambda A: same_fiber(A, A))
        ids = fiber_ids(prototypes)
        outcome.record(
            len(set(ids.values())) == len(prototypes),
            lambda: f"{len(set(ids.values()))} fibers for {len(prototypes)} algebraic prototypes",
        )
        return outcome


class ResidueConsistencyCheck(BaseCheck):
    """s = r2/(2 r1) > 0 and the node constant is nonzero."""

    name = "residue_s_consistency"

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(
            state["algebraic"],
            lambda A: s_from_residues(A) == s_param(A) and s_param(A) > 0 and bool(node_constant(A)),
        )


class ResidueIdentityCheck(BaseCheck):
    """The residue polynomial is numerically constant (runs up to the configured bound)."""

    name = "residue_identity"

    def applies(self, D: int) -> bool:
        return D <= get_settings().residue_dmax

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(state["algebraic"], residue_identity_check)
