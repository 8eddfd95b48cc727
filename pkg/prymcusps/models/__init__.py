"""Data models for prototypes, stable curves and reports."""

from prymcusps.models.schemas import (
    AlgebraicPrototype,
    ComponentCensus,
    ComponentCount,
    ComponentLabel,
    Cylinder,
    CylinderData,
    GaloisOrbit,
    GeometricType,
    HomologyRep,
    MarkedPoints,
    NestedRadical,
    PairingMatrix,
    PropertyTally,
    Prototype,
    ReportRecord,
    StableFiber,
    VerificationReport,
)
from prymcusps.models.state import SweepState

__all__ = [
    "AlgebraicPrototype",
    "ComponentCensus",
    "ComponentCount",
    "ComponentLabel",
    "Cylinder",
    "CylinderData",
    "GaloisOrbit",
    "GeometricType",
    "HomologyRep",
    "MarkedPoints",
    "NestedRadical",
    "PairingMatrix",
    "PropertyTally",
    "Prototype",
    "ReportRecord",
    "StableFiber",
    "SweepState",
    "VerificationReport",
]
