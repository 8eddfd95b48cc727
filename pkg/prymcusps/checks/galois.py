"""The Galois involution on algebraic prototypes and the component swap."""

from prymcusps.checks.base import BaseCheck, CheckOutcome, tally
from prymcusps.models.schemas import ComponentLabel
from prymcusps.models.state import SweepState
from prymcusps.services.galois import conjugate
from prymcusps.services.homology import component_census, spin_component
from prymcusps.services.prototypes import switching_pair, twist_count, validate_algebraic


class GaloisInvolutionCheck(BaseCheck):
    name = "galois_involution"

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(state["algebraic"], lambda A: conjugate(conjugate(A)) == A)


class GaloisValidityCheck(BaseCheck):
    """Conjugates validate and are among the enumerated algebraic prototypes."""

    name = "galois_validity"

    def execute(self, state: SweepState) -> CheckOutcome:
        known = set(state["algebraic"])

        def holds(A) -> bool:
            B = conjugate(A)
            return validate_algebraic(B.w, B.h, B.e, B.eps, B.D) == B and B in known

        return tally(state["algebraic"], holds)


class ComponentSwapCheck(BaseCheck):
    """For D = 1 mod 8 conjugation changes the spin label, so it has no fixed points."""

    name = "component_swap"

    def applies(self, D: int) -> bool:
        return D % 8 == 1

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(state["algebraic"], lambda A: spin_component(conjugate(A)) != spin_component(A))


class TwistCountSymmetryCheck(BaseCheck):
    name = "twist_count_symmetry"

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(state["algebraic"], lambda A: twist_count(conjugate(A)) == twist_count(A))


class ComponentBalanceCheck(BaseCheck):
    """Both components carry the same number of cusps, with and without twists."""

    name = "component_balance"

    def applies(self, D: int) -> bool:
        return D % 8 == 1

    def execute(self, state: SweepState) -> CheckOutcome:
        census = component_census(state["discriminant"])
        first, second = census.components
        outcome = CheckOutcome()
        outcome.record(
            first.cusps == second.cusps and first.algebraic_prototypes == second.algebraic_prototypes,
            lambda: f"cusps {first.cusps} vs {second.cusps}",
        )
        return outcome


class SwitchingPairCheck(BaseCheck):
    """[(D-1)/8, 1, -1, -1] and [(D-1)/8, 1, 1, -1] are conjugate with labels (1, 2)."""

    name = "switching_pair"

    def applies(self, D: int) -> bool:
        return D % 8 == 1

    def execute(self, state: SweepState) -> CheckOutcome:
        first, second = switching_pair(state["discriminant"])
        outcome = CheckOutcome()
        outcome.record(
            conjugate(first) == second
            and spin_component(first) is ComponentLabel.FIRST
            and spin_component(second) is ComponentLabel.SECOND,
            lambda: f"{first.label} <-> {second.label}",
        )
        return outcome
