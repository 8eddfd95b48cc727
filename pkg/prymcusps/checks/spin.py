"""Real multiplication matrices and the spin oracles (odd D)."""

from prymcusps.checks.base import BaseCheck, CheckOutcome, tally
from prymcusps.models.schemas import ComponentLabel
from prymcusps.models.state import SweepState
from prymcusps.services.homology import (
    determinant_matches_norm,
    eigenform_relation_holds,
    iota_T,
    is_self_adjoint,
    minimal_polynomial_holds,
    pairing_on_imT_mod2,
    spin_component,
    square_entry_criterion,
)


class _OddDiscriminantCheck(BaseCheck):
    def applies(self, D: int) -> bool:
        return D % 2 == 1


class IotaMinimalPolynomialCheck(_OddDiscriminantCheck):
    """M^2 - M - ((D-1)/4) I = 0."""

    name = "iota_minimal_polynomial"

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(state["prototypes"], lambda P: minimal_polynomial_holds(iota_T(P)))


class IotaSelfAdjointCheck(_OddDiscriminantCheck):
    """M^T J = J M."""

    name = "iota_self_adjoint"

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(state["prototypes"], lambda P: is_self_adjoint(iota_T(P)))


class IotaDeterminantCheck(_OddDiscriminantCheck):
    """det M = ((1-D)/4)^2."""

    name = "iota_determinant"

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(state["prototypes"], lambda P: determinant_matches_norm(iota_T(P)))


class PeriodEigenformCheck(_OddDiscriminantCheck):
    """The period vector is a left eigenvector of M with eigenvalue T."""

    name = "period_eigenform"

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(state["prototypes"], eigenform_relation_holds)


class SpinOracleCheck(BaseCheck):
    """Restricted pairing mod 2, the T^2 entry, e + eps mod 4 and the label all agree."""

    name = "spin_oracle"

    def applies(self, D: int) -> bool:
        return D % 8 == 1

    def execute(self, state: SweepState) -> CheckOutcome:
        def holds(P) -> bool:
            formula = (P.e + P.eps) % 4 == 0
            return (
                pairing_on_imT_mod2(P) == formula
                and square_entry_criterion(P) == formula
                and (spin_component(P) is ComponentLabel.SECOND) == formula
            )

        return tally(state["prototypes"], holds)


class TwistIndependenceCheck(BaseCheck):
    """The spin label depends only on the algebraic prototype."""

    name = "spin_twist_independence"

    def execute(self, state: SweepState) -> CheckOutcome:
        return tally(
            state["prototypes"],
            lambda P: spin_component(P) == spin_component(P.forget_twist()),
        )
