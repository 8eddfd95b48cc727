"""Property checks for the verification sweep, in execution order."""

from typing import Dict, List, Type

from prymcusps.checks.arithmetic import ConjugationCheck, LambdaIdentityCheck
from prymcusps.checks.base import BaseCheck, CheckOutcome
from prymcusps.checks.enumeration import (
    CylinderDataCheck,
    EmptinessCheck,
    EnumerationValidityCheck,
    GeometricTypeCheck,
)
from prymcusps.checks.galois import (
    ComponentBalanceCheck,
    ComponentSwapCheck,
    GaloisInvolutionCheck,
    GaloisValidityCheck,
    SwitchingPairCheck,
    TwistCountSymmetryCheck,
)
from prymcusps.checks.spin import (
    IotaDeterminantCheck,
    IotaMinimalPolynomialCheck,
    IotaSelfAdjointCheck,
    PeriodEigenformCheck,
    SpinOracleCheck,
    TwistIndependenceCheck,
)
from prymcusps.checks.stable import (
    FiberSeparationCheck,
    GaloisFiberCheck,
    MarkedPointDistinctCheck,
    MarkedPointIdentityCheck,
    ResidueConsistencyCheck,
    ResidueIdentityCheck,
)

ALL_CHECKS: List[Type[BaseCheck]] = [
    LambdaIdentityCheck,
    ConjugationCheck,
    EmptinessCheck,
    EnumerationValidityCheck,
    GeometricTypeCheck,
    CylinderDataCheck,
    IotaMinimalPolynomialCheck,
    IotaSelfAdjointCheck,
    IotaDeterminantCheck,
    PeriodEigenformCheck,
    SpinOracleCheck,
    TwistIndependenceCheck,
    GaloisInvolutionCheck,
    GaloisValidityCheck,
    ComponentSwapCheck,
    TwistCountSymmetryCheck,
    ComponentBalanceCheck,
    SwitchingPairCheck,
    MarkedPointIdentityCheck,
    MarkedPointDistinctCheck,
    GaloisFiberCheck,
    FiberSeparationCheck,
    ResidueConsistencyCheck,
    ResidueIdentityCheck,
]

CHECK_REGISTRY: Dict[str, Type[BaseCheck]] = {check.name: check for check in ALL_CHECKS}

__all__ = ["ALL_CHECKS", "CHECK_REGISTRY", "BaseCheck", "CheckOutcome"]
