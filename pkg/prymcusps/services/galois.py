"""The Galois conjugation sqrt(D) -> -sqrt(D) acting on algebraic prototypes.

Conjugating the flat surface of a cusp and renormalising gives the cusp
    eps = +1:  [h, w, e, -1] if h > lambda/2, else [w, h, -e, +1]
    eps = -1:  [h, w, e, +1] if h > lambda,   else [w, h, -e, -1]
which is again valid for the same D. The map is an involution; for
D = 1 mod 8 it exchanges the two spin components.
"""

from typing import Dict, List

from prymcusps.models.schemas import AlgebraicPrototype, GaloisOrbit
from prymcusps.services.homology import has_two_components, spin_component
from prymcusps.services.prototypes import (
    algebraic_prototypes,
    exceeds_half_lambda,
    exceeds_lambda,
)
from prymcusps.utils.logger import get_logger

logger = get_logger(__name__)


def conjugate(A: AlgebraicPrototype) -> AlgebraicPrototype:
    """
    Galois conjugate of an algebraic prototype.

    The comparisons h > lambda/2 and h > lambda are exact; equality is
    impossible because lambda is irrational.

    Args:
        A: Valid algebraic prototype

    Returns:
        The conjugate algebraic prototype of the same discriminant
    """
    if A.eps == 1:
        if exceeds_half_lambda(A.h, A.e, A.D):
            return AlgebraicPrototype(D=A.D, w=A.h, h=A.w, e=A.e, eps=-1)
        return AlgebraicPrototype(D=A.D, w=A.w, h=A.h, e=-A.e, eps=1)
    if exceeds_lambda(A.h, A.e, A.D):
        return AlgebraicPrototype(D=A.D, w=A.h, h=A.w, e=A.e, eps=1)
    return AlgebraicPrototype(D=A.D, w=A.w, h=A.h, e=-A.e, eps=-1)


def orbits(D: int) -> List[GaloisOrbit]:
    """
    Partition the algebraic prototypes of D into conjugation orbits.

    Orbits are listed in the canonical order of their first member; the
    second member is the conjugate of the first. Component labels are
    attached when D = 1 mod 8.

    Args:
        D: Discriminant

    Returns:
        Ordered list of GaloisOrbit (empty for D = 5 mod 8)
    """
    prototypes = algebraic_prototypes(D)
    placed: Dict[AlgebraicPrototype, int] = {}
    result: List[GaloisOrbit] = []
    labelled = has_two_components(D)
    for A in prototypes:
        if A in placed:
            continue
        partner = conjugate(A)
        members = (A,) if partner == A else (A, partner)
        for member in members:
            placed[member] = len(result)
        labels = tuple(spin_component(m) for m in members) if labelled else None
        result.append(GaloisOrbit(members=members, labels=labels))
    logger.debug(
        "galois_orbits_complete",
        discriminant=D,
        orbits=len(result),
        fixed_points=sum(1 for o in result if o.is_fixed),
    )
    return result
