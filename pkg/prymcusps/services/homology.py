"""Real multiplication on the anti-invariant homology and the spin components.

For odd D the order O_D is Z[T] with T = (1 + sqrt D)/2. In the basis
(alpha1, alpha2, beta1, beta2) adapted to eps, T acts by an integer 4x4
matrix (on column vectors) that is self-adjoint for the (1,2)-polarised
intersection form. Whether the form vanishes mod 2 on the image of T
decides the spin component: 2i = e + eps mod 4.
"""

from typing import List, Sequence, Tuple, Union

import numpy as np

from prymcusps.errors import OddDiscriminantRequiredError
from prymcusps.models.schemas import (
    AlgebraicPrototype,
    ComponentCensus,
    ComponentCount,
    ComponentLabel,
    HomologyRep,
    PairingMatrix,
    Prototype,
)
from prymcusps.services.prototypes import algebraic_prototypes, twist_count
from prymcusps.services.quadfield import QuadElem, lambda_of, order_generator
from prymcusps.utils.gf2 import gf2_column_space, gf2_form_vanishes
from prymcusps.utils.logger import get_logger

logger = get_logger(__name__)

Period = Tuple[QuadElem, QuadElem]


def _require_odd(D: int) -> None:
    if D % 2 == 0:
        raise OddDiscriminantRequiredError(D)


def intersection_matrix(eps: int) -> PairingMatrix:
    """
    Intersection form J^eps in the basis b^eps = (alpha1, alpha2, beta1, beta2).

    Args:
        eps: +1 or -1

    Returns:
        Skew-symmetric J with (1,3) = 1, (2,4) = 2 for eps = +1 and the two
        values exchanged for eps = -1
    """
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    a, b = (1, 2) if eps == 1 else (2, 1)
    return PairingMatrix(
        eps=eps,
        entries=((0, 0, a, 0), (0, 0, 0, b), (-a, 0, 0, 0), (0, -b, 0, 0)),
    )


def iota_T(P: Prototype) -> HomologyRep:
    """
    Matrix of T = (1 + sqrt D)/2 on H1^- of the prototypical surface.

    Args:
        P: Prototype of odd discriminant

    Returns:
        HomologyRep with the generator matrix and J^eps

    Raises:
        OddDiscriminantRequiredError: D is even
    """
    _require_odd(P.D)
    w, h, t, e = P.w, P.h, P.t, P.e
    p, q = (e + 1) // 2, -(e - 1) // 2
    if P.eps == 1:
        generator = (
            (p, 2 * w, 0, 2 * t),
            (h, q, -t, 0),
            (0, 0, p, 2 * h),
            (0, 0, w, q),
        )
    else:
        generator = (
            (p, w, 0, t),
            (2 * h, q, -2 * t, 0),
            (0, 0, p, h),
            (0, 0, 2 * w, q),
        )
    return HomologyRep(prototype=P, generator=generator, pairing=intersection_matrix(P.eps))


def determinant(M: Union[np.ndarray, Sequence[Sequence[int]]]) -> int:
    """
    Exact integer determinant by fraction-free (Bareiss) elimination.

    Args:
        M: Square integer matrix

    Returns:
        det(M) as a Python int
    """
    rows = [[int(x) for x in row] for row in np.asarray(M, dtype=object)]
    n = len(rows)
    sign, prev = 1, 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


def minimal_polynomial_holds(rep: HomologyRep) -> bool:
    """M^2 - M - ((D-1)/4) I = 0 exactly."""
    M = rep.matrix
    c = (rep.prototype.D - 1) // 4
    return bool(np.array_equal(M @ M - M, c * np.eye(4, dtype=np.int64)))


def is_self_adjoint(rep: HomologyRep) -> bool:
    """M^T J = J M exactly."""
    M, J = rep.matrix, rep.pairing.array
    return bool(np.array_equal(M.T @ J, J @ M))


def determinant_matches_norm(rep: HomologyRep) -> bool:
    """det(M) = Norm(T)^2 = ((1 - D)/4)^2."""
    return determinant(rep.generator) == ((1 - rep.prototype.D) // 4) ** 2


def pairing_on_imT_mod2(P: Prototype) -> bool:
    """
    Whether the intersection form vanishes mod 2 on the image of T.

    The image is the column space of the generator matrix over GF(2).

    Args:
        P: Prototype of odd discriminant

    Returns:
        True iff every pairing between image vectors is even

    Raises:
        OddDiscriminantRequiredError: D is even
    """
    rep = iota_T(P)
    basis = gf2_column_space(rep.matrix)
    return gf2_form_vanishes(basis, rep.pairing.array)


def square_entry_criterion(P: Prototype) -> bool:
    """
    Shortcut for the restricted-pairing test read off T^2.

    The form restricted to Im T vanishes mod 2 iff the (1,1) entry of T^2
    (eps = +1) or the (2,2) entry of T^2 (eps = -1) is even.
    """
    M = iota_T(P).matrix
    square = M @ M
    entry = square[0, 0] if P.eps == 1 else square[1, 1]
    return int(entry) % 2 == 0


def has_two_components(D: int) -> bool:
    """The locus has two spin components exactly when D = 1 mod 8."""
    return D % 8 == 1


def spin_component(P: Union[Prototype, AlgebraicPrototype]) -> ComponentLabel:
    """
    Spin component label i with 2i = e + eps mod 4.

    For D not 1 mod 8 there is a single component, labelled 1.

    Args:
        P: Prototype or algebraic prototype

    Returns:
        ComponentLabel.FIRST or ComponentLabel.SECOND
    """
    if not has_two_components(P.D):
        logger.debug("single_component_discriminant", discriminant=P.D)
        return ComponentLabel.FIRST
    return ComponentLabel.SECOND if (P.e + P.eps) % 4 == 0 else ComponentLabel.FIRST


def period_vector(P: Prototype) -> List[Period]:
    """
    Periods of the basis b^eps as (real, imaginary) pairs in Q(sqrt D).

    eps = +1: (lambda, 2w, i lambda, 2t + 2ih); eps = -1: (lambda, w, i lambda, t + ih).
    """
    lam = lambda_of(P.e, P.D)
    zero = QuadElem(0, 0, P.D)
    k = 2 if P.eps == 1 else 1
    return [
        (lam, zero),
        (QuadElem(k * P.w, 0, P.D), zero),
        (zero, lam),
        (QuadElem(k * P.t, 0, P.D), QuadElem(k * P.h, 0, P.D)),
    ]


def eigenform_relation_holds(P: Prototype) -> bool:
    """
    Whether the period row vector p satisfies p * M = T * p exactly.

    Integrating the eigenform over T(gamma) multiplies its period by T, so
    this certifies the generator matrix against the flat geometry.
    """
    M = iota_T(P).generator
    T = order_generator(P.D)
    periods = period_vector(P)
    for j in range(4):
        re = sum((periods[i][0] * M[i][j] for i in range(4)), QuadElem(0, 0, P.D))
        im = sum((periods[i][1] * M[i][j] for i in range(4)), QuadElem(0, 0, P.D))
        if re != T * periods[j][0] or im != T * periods[j][1]:
            return False
    return True


def component_census(D: int) -> ComponentCensus:
    """
    Cusp counts per spin component, with and without twists.

    Args:
        D: Discriminant

    Returns:
        ComponentCensus; a single component for D not 1 mod 8
    """
    two = has_two_components(D)
    labels = [ComponentLabel.FIRST, ComponentLabel.SECOND] if two else [ComponentLabel.FIRST]
    grouped = {label: [] for label in labels}
    for A in algebraic_prototypes(D):
        grouped[spin_component(A)].append(A)
    cusps = {label: twist_weighted_count(As) for label, As in grouped.items()}
    algebraic_counts = {label: len(As) for label, As in grouped.items()}
    logger.debug("component_census_complete", discriminant=D, cusps={int(k): v for k, v in cusps.items()})
    return ComponentCensus(
        D=D,
        two_components=two,
        components=[
            ComponentCount(label=label, cusps=cusps[label], algebraic_prototypes=algebraic_counts[label])
            for label in labels
        ],
    )


def twist_weighted_count(As: Sequence[AlgebraicPrototype]) -> int:
    """Number of cusps lying over a list of algebraic prototypes."""
    return sum(twist_count(A) for A in As)

