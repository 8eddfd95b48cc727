"""Enumeration, validation and flat geometry of prototypes [w,h,t,e,eps].

A prototype of discriminant D satisfies
    D = e^2 + 8wh,  w > lambda/2 (and w > lambda when eps = +1),
    0 <= t < gcd(w, h),  gcd(w, h, t, e) = 1,
with lambda = (e + sqrt D)/2. Each prototype is one cusp of the Prym
eigenform locus of discriminant D.
"""

import math
from typing import List, Tuple, Union

from cachetools import cached
from cachetools.keys import hashkey

from prymcusps.errors import InvalidPrototypeError, PrototypeCondition
from prymcusps.models.schemas import (
    AlgebraicPrototype,
    Cylinder,
    CylinderData,
    GeometricType,
    Prototype,
)
from prymcusps.services.quadfield import QuadElem, lambda_of, validate_discriminant
from prymcusps.utils.cache import algebraic_cache, cache_lock, enumeration_cache
from prymcusps.utils.logger import get_logger

logger = get_logger(__name__)

AnyPrototype = Union[Prototype, AlgebraicPrototype]


def exceeds_half_lambda(w: int, e: int, D: int) -> bool:
    """w > (e + sqrt D)/4, i.e. 4w - e > sqrt D, decided on integers."""
    k = 4 * w - e
    return k > 0 and k * k > D


def exceeds_lambda(w: int, e: int, D: int) -> bool:
    """w > (e + sqrt D)/2, i.e. 2w - e > sqrt D, decided on integers."""
    k = 2 * w - e
    return k > 0 and k * k > D


def _width_ok(w: int, e: int, eps: int, D: int) -> bool:
    if not exceeds_half_lambda(w, e, D):
        return False
    return eps == -1 or exceeds_lambda(w, e, D)


def _divisor_pairs(n: int) -> List[Tuple[int, int]]:
    """All (w, h) with w*h = n, ascending in w."""
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append((d, n // d))
            if d != n // d:
                large.append((n // d, d))
    return small + large[::-1]


def _check_algebraic(w: int, h: int, e: int, eps: int, D: int) -> None:
    validate_discriminant(D)
    if eps not in (1, -1):
        raise InvalidPrototypeError(PrototypeCondition.EPS_SIGN, f"eps must be +1 or -1, got {eps}")
    if w <= 0 or h <= 0:
        raise InvalidPrototypeError(PrototypeCondition.POSITIVITY, f"w={w}, h={h} must be positive")
    if e * e + 8 * w * h != D:
        raise InvalidPrototypeError(
            PrototypeCondition.ARITHMETIC,
            f"e^2 + 8wh = {e * e + 8 * w * h} differs from D={D}",
        )
    if not exceeds_half_lambda(w, e, D):
        raise InvalidPrototypeError(PrototypeCondition.WIDTH_BOUND, f"w={w} must exceed lambda/2")
    if eps == 1 and not exceeds_lambda(w, e, D):
        raise InvalidPrototypeError(
            PrototypeCondition.WIDTH_BOUND, f"w={w} must exceed lambda when eps=+1"
        )


def validate(w: int, h: int, t: int, e: int, eps: int, D: int) -> Prototype:
    """
    Validate a tuple against the prototype conditions.

    Args:
        w, h, t, e, eps: Prototype parameters
        D: Discriminant

    Returns:
        The Prototype

    Raises:
        InvalidDiscriminantError: D is not a discriminant
        InvalidPrototypeError: first failing condition, in the order sign,
            positivity, arithmetic, width bound, twist range, gcd
    """
    _check_algebraic(w, h, e, eps, D)
    g = math.gcd(w, h)
    if not 0 <= t < g:
        raise InvalidPrototypeError(
            PrototypeCondition.TWIST_RANGE, f"t={t} must lie in [0, gcd(w,h)={g})"
        )
    if math.gcd(g, t, e) != 1:
        raise InvalidPrototypeError(PrototypeCondition.GCD, f"gcd(w,h,t,e) = {math.gcd(g, t, e)} != 1")
    return Prototype(D=D, w=w, h=h, t=t, e=e, eps=eps)


def twist_count(A: AlgebraicPrototype) -> int:
    """Number of twists t in [0, gcd(w,h)) with gcd(w,h,t,e) = 1."""
    g = math.gcd(A.w, A.h)
    ge = math.gcd(g, A.e)
    return sum(1 for t in range(g) if math.gcd(ge, t) == 1)


def validate_algebraic(w: int, h: int, e: int, eps: int, D: int) -> AlgebraicPrototype:
    """
    Validate the twist-free conditions and require at least one admissible twist.

    Raises:
        InvalidPrototypeError: a twist-free condition fails, or no twist works
    """
    _check_algebraic(w, h, e, eps, D)
    A = AlgebraicPrototype(D=D, w=w, h=h, e=e, eps=eps)
    if twist_count(A) < 1:
        raise InvalidPrototypeError(PrototypeCondition.NO_TWIST, f"{A} admits no twist")
    return A


@cached(enumeration_cache, key=lambda D: hashkey(D), lock=cache_lock)
def _enumerate_cached(D: int) -> Tuple[Prototype, ...]:
    found: List[Prototype] = []
    e_max = math.isqrt(D)
    for e in range(-e_max, e_max + 1):
        rest = D - e * e
        if rest <= 0 or rest % 8:
            continue
        for w, h in _divisor_pairs(rest // 8):
            g = math.gcd(w, h)
            ge = math.gcd(g, e)
            for eps in (1, -1):
                if not _width_ok(w, e, eps, D):
                    continue
                for t in range(g):
                    if math.gcd(ge, t) == 1:
                        found.append(Prototype(D=D, w=w, h=h, t=t, e=e, eps=eps))
    logger.debug("enumeration_complete", discriminant=D, prototypes=len(found))
    return tuple(found)


def enumerate_prototypes(D: int) -> List[Prototype]:
    """
    All prototypes of discriminant D in canonical order.

    The order is e ascending, then w, then h, then eps (+1 before -1), then t.

    Args:
        D: Discriminant

    Returns:
        Ordered list of prototypes; empty when D = 5 mod 8, since then e is
        odd and D - e^2 = 4 mod 8 is never a multiple of 8

    Raises:
        InvalidDiscriminantError: D is not a discriminant
    """
    validate_discriminant(D)
    return list(_enumerate_cached(D))


# Name used by the public API and the CLI
enumerate = enumerate_prototypes  # noqa: A001


def algebraic(P: Prototype) -> AlgebraicPrototype:
    """Forget the twist."""
    return P.forget_twist()


@cached(algebraic_cache, key=lambda D: hashkey(D), lock=cache_lock)
def _algebraic_cached(D: int) -> Tuple[AlgebraicPrototype, ...]:
    seen = {}
    for P in _enumerate_cached(D):
        A = P.forget_twist()
        if A not in seen:
            seen[A] = None
    return tuple(seen)


def algebraic_prototypes(D: int) -> List[AlgebraicPrototype]:
    """Distinct algebraic prototypes of D in canonical order."""
    validate_discriminant(D)
    return list(_algebraic_cached(D))


def twists(A: AlgebraicPrototype) -> List[Prototype]:
    """The prototypes extending A, ordered by t."""
    g = math.gcd(A.w, A.h)
    ge = math.gcd(g, A.e)
    return [
        Prototype(D=A.D, w=A.w, h=A.h, t=t, e=A.e, eps=A.eps)
        for t in range(g)
        if math.gcd(ge, t) == 1
    ]


def geometric_type(P: AnyPrototype) -> GeometricType:
    """
    Cylinder configuration of a prototype.

    A+ when eps = +1, A- when eps = -1 and w > lambda, B otherwise.
    """
    if P.eps == 1:
        return GeometricType.A_PLUS
    if exceeds_lambda(P.w, P.e, P.D):
        return GeometricType.A_MINUS
    return GeometricType.B


def cylinder_data(P: Prototype) -> CylinderData:
    """
    Horizontal cylinders of the prototypical surface, ordered by node index.

    A+: a w x h cylinder with twist t, a simple lambda x lambda cylinder fixed
    by the Prym involution, and the swapped copy of the first.
    A-/B: two swapped lambda/2 x lambda/2 cylinders around a fixed w x h
    cylinder with twist t; the small ones are simple exactly for A-.

    Args:
        P: Prototype

    Returns:
        CylinderData with cylinder i of circumference r_i
    """
    kind = geometric_type(P)
    lam = lambda_of(P.e, P.D)
    w = QuadElem(P.w, 0, P.D)
    h = QuadElem(P.h, 0, P.D)
    if kind is GeometricType.A_PLUS:
        outer = Cylinder(
            width=w, height=h, twist=QuadElem(P.t, 0, P.D), simple=False, fixed_by_involution=False
        )
        middle = Cylinder(
            width=lam, height=lam, twist=QuadElem(0, 0, P.D), simple=True, fixed_by_involution=True
        )
    else:
        half = lam / 2
        outer = Cylinder(
            width=half,
            height=half,
            twist=QuadElem(0, 0, P.D),
            simple=kind is GeometricType.A_MINUS,
            fixed_by_involution=False,
        )
        middle = Cylinder(
            width=w, height=h, twist=QuadElem(P.t, 0, P.D), simple=False, fixed_by_involution=True
        )
    return CylinderData(prototype=P, geometric_type=kind, cylinders=(outer, middle, outer))


def flat_area(P: AnyPrototype) -> QuadElem:
    """Area of the prototypical surface: lambda^2 + 2wh for A+, lambda^2/2 + wh otherwise."""
    lam = lambda_of(P.e, P.D)
    if P.eps == 1:
        return lam * lam + 2 * P.w * P.h
    return lam * lam / 2 + P.w * P.h


def width_ratio(P: AnyPrototype) -> QuadElem:
    """Circumference of the long cylinder over that of the short one; irrational."""
    lam = lambda_of(P.e, P.D)
    short = lam if P.eps == 1 else lam / 2
    return QuadElem(P.w, 0, P.D) / short


def switching_pair(D: int) -> Tuple[AlgebraicPrototype, AlgebraicPrototype]:
    """
    The algebraic prototypes [(D-1)/8, 1, -1, -1] and [(D-1)/8, 1, 1, -1].

    They are Galois conjugate and lie on different spin components.

    Raises:
        InvalidPrototypeError: D is not 1 mod 8 (or too small)
    """
    validate_discriminant(D)
    if D % 8 != 1:
        raise InvalidPrototypeError(PrototypeCondition.ARITHMETIC, f"D={D} is not 1 mod 8")
    w = (D - 1) // 8
    return (
        validate_algebraic(w, 1, -1, -1, D),
        validate_algebraic(w, 1, 1, -1, D),
    )
