"""Properties of the prototype enumeration and of the flat geometry."""

from prymcusps.checks.base import BaseCheck, CheckOutcome, tally
from prymcusps.models.schemas import GeometricType
from prymcusps.models.state import SweepState
from prymcusps.services.prototypes import (
    cylinder_data,
    flat_area,
    geometric_type,
    validate,
    width_ratio,
)
from prymcusps.services.quadfield import QuadElem, lambda_of
from prymcusps.services.stablecurve import residues


class EmptinessCheck(BaseCheck):
    """No prototypes exist for D = 5 mod 8."""

    name = "empty_for_5_mod_8"

    def applies(self, D: int) -> bool:
        return D % 8 == 5

    def execute(self, state: SweepState) -> CheckOutcome:
        outcome = CheckOutcome()
        outcome.record(not state["prototypes"], lambda: f"{len(state['prototypes'])} prototypes")
        return outcome


class EnumerationValidityCheck(BaseCheck):
    """Every enumerated prototype validates, and the list is strictly in canonical order."""

    name = "enumeration_validity"

    def execute(self, state: SweepState) -> CheckOutcome:
        prototypes = state["prototypes"]
        outcome = tally(
            prototypes,
            lambda P: validate(P.w, P.h, P.t, P.e, P.eps, P.D) == P,
        )
        for before, after in zip(prototypes, prototypes[1:]):
            outcome.record(
                before.sort_key() < after.sort_key(),
                lambda: f"order {before.label} !< {after.label}",
            )
        return outcome


class GeometricTypeCheck(BaseCheck):
    """Exactly one of A+, A-, B applies, decided by exact comparison with lambda."""

    name = "geometric_type"

    def execute(self, state: SweepState) -> CheckOutcome:
        def holds(P) -> bool:
            lam = lambda_of(P.e, P.D)
            w = QuadElem(P.w, 0, P.D)
            cases = {
                GeometricType.A_PLUS: P.eps == 1,
                GeometricType.A_MINUS: P.eps == -1 and w > lam,
                GeometricType.B: P.eps == -1 and lam / 2 < w < lam,
            }
            matching = [kind for kind, applies in cases.items() if applies]
            return matching == [geometric_type(P)]

        return tally(state["prototypes"], holds)


class CylinderDataCheck(BaseCheck):
    """Three cylinders, r1 = r3, area formula, irrational circumference ratio, residues agree."""

    name = "cylinder_data"

    def execute(self, state: SweepState) -> CheckOutcome:
        def holds(P) -> bool:
            data = cylinder_data(P)
            r1, r2, r3 = data.residues
            return (
                len(data.cylinders) == 3
                and r1 == r3
                and data.area == flat_area(P)
                and not width_ratio(P).is_rational
                and (r1, r2, r3) == residues(P.forget_twist())
            )

        return tally(state["prototypes"], holds)
