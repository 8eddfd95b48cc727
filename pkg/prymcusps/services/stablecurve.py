"""Stable trinodal fibers over the cusps.

The stable curve over a cusp is a projective line with the pairs
(x1, -x3), (1, -1), (x3, -x1) glued, where
    x1 = -s - sqrt(u),  x3 = -s + sqrt(u),  u = (1 - s^2)/3,
and s = r2/(2 r1) is read off the cylinder circumferences. The limiting
differential has residues r1, r2, r3 = r1 at the three nodes; its residue
polynomial is the nonzero constant returned by ``node_constant``.
"""

from typing import Dict, Iterable, Optional, Sequence, Tuple

from mpmath.ctx_mp import MPContext

from prymcusps.config import get_settings
from prymcusps.errors import DiscriminantMismatchError
from prymcusps.models.schemas import AlgebraicPrototype, MarkedPoints, NestedRadical, StableFiber
from prymcusps.services.galois import conjugate
from prymcusps.services.quadfield import QuadElem, lambda_of
from prymcusps.utils.formatters import format_mpf
from prymcusps.utils.logger import get_logger

logger = get_logger(__name__)

Residues = Tuple[QuadElem, QuadElem, QuadElem]


def s_param(A: AlgebraicPrototype) -> QuadElem:
    """
    Parameter s of the stable fiber, normalised to be positive.

    eps = +1: s = (e + sqrt D)/(4w); eps = -1: s = 2w/(e + sqrt D) = (-e + sqrt D)/(4h).
    """
    if A.eps == 1:
        return lambda_of(A.e, A.D) / (2 * A.w)
    return QuadElem(-A.e, 1, A.D) / (4 * A.h)


def residues(A: AlgebraicPrototype) -> Residues:
    """Residues (r1, r2, r3) at the nodes: (w, lambda, w) for eps = +1, (lambda/2, w, lambda/2) for eps = -1."""
    lam = lambda_of(A.e, A.D)
    w = QuadElem(A.w, 0, A.D)
    if A.eps == 1:
        return (w, lam, w)
    return (lam / 2, w, lam / 2)


def s_from_residues(A: AlgebraicPrototype) -> QuadElem:
    """s recovered as r2/(2 r1); agrees with ``s_param``."""
    r1, r2, _ = residues(A)
    return r2 / (2 * r1)


def stable_fiber(A: AlgebraicPrototype) -> StableFiber:
    """
    Exact data of the stable fiber over the cusps of A.

    Args:
        A: Algebraic prototype

    Returns:
        StableFiber with s, u, symbolic x1 and x3, and the residues
    """
    s = s_param(A)
    u = (1 - s * s) / 3
    return StableFiber(
        algebraic=A,
        s=s,
        u=u,
        x1=NestedRadical(rational_part=-s, radicand=u, sign=-1),
        x3=NestedRadical(rational_part=-s, radicand=u, sign=1),
        residues=residues(A),
    )


def node_constant(A: AlgebraicPrototype) -> QuadElem:
    """
    The constant value C of the residue polynomial.

    C = 2 r1 (x1 + x3) x1 x3 (1 - x1 x3) = -4 r1 s p (1 - p) with
    p = (4 s^2 - 1)/3. It is nonzero for every prototype.
    """
    s = s_param(A)
    p = (4 * s * s - 1) / 3
    r1 = residues(A)[0]
    return -4 * r1 * s * p * (1 - p)


def marked_points_distinct(fiber: StableFiber) -> bool:
    """
    Exact test that +-1, +-x1, +-x3 are six distinct points.

    x1, x3 are the roots of q(z) = z^2 + 2 s z + p with p = (4 s^2 - 1)/3, so
    distinctness reduces to s != 0, s^2 != 1, 4 s^2 != 1 and q(+-1) != 0.
    """
    s = fiber.s
    p = fiber.x1.pair_product(fiber.x3)
    q_plus = 1 + 2 * s + p
    q_minus = 1 - 2 * s + p
    return all(x.sign() != 0 for x in (s, s * s - 1, 4 * s * s - 1, q_plus, q_minus))


def same_fiber(A1: AlgebraicPrototype, A2: AlgebraicPrototype) -> bool:
    """
    Whether two cusps have the same stable fiber, i.e. s(A1) = +-s(A2).

    Raises:
        DiscriminantMismatchError: the prototypes have different D
    """
    if A1.D != A2.D:
        raise DiscriminantMismatchError(A1.D, A2.D)
    s1, s2 = s_param(A1), s_param(A2)
    return s1 == s2 or s1 == -s2


def galois_compatible(A: AlgebraicPrototype) -> bool:
    """s(A^sigma) = +-conj(s(A)) exactly."""
    target = s_param(A).conj()
    s_conj = s_param(conjugate(A))
    return s_conj == target or s_conj == -target


def fiber_ids(prototypes: Iterable[AlgebraicPrototype]) -> Dict[AlgebraicPrototype, int]:
    """
    Number the distinct fibers 1, 2, ... in order of first appearance.

    Args:
        prototypes: Algebraic prototypes of one discriminant, in canonical order

    Returns:
        Mapping from each prototype to its 1-based fiber id
    """
    by_s: Dict[QuadElem, int] = {}
    ids: Dict[AlgebraicPrototype, int] = {}
    for A in prototypes:
        key = abs(s_param(A))
        if key not in by_s:
            by_s[key] = len(by_s) + 1
        ids[A] = by_s[key]
    return ids


def _evaluate_points(fiber: StableFiber, digits: int):
    ctx = MPContext()
    ctx.dps = digits
    return ctx, fiber.x1.evaluate(ctx), fiber.x3.evaluate(ctx)


def marked_points(A: AlgebraicPrototype, precision: Optional[int] = None) -> MarkedPoints:
    """
    Decimal values of x1 and x3 to a requested number of digits.

    Values are computed at a working precision and again at twice that
    precision; the precision doubles until both agree to 10^-(precision+1).
    For u < 0 the points are complex conjugates (sqrt(u) = i sqrt(|u|)).

    Args:
        A: Algebraic prototype
        precision: Decimal digits after the point (default from settings)

    Returns:
        MarkedPoints with fixed-point strings and the error bound
    """
    settings = get_settings()
    precision = precision if precision is not None else settings.stable_precision
    if precision < 1:
        raise ValueError(f"precision must be positive, got {precision}")
    fiber = stable_fiber(A)
    digits = precision + settings.guard_digits
    while True:
        _, low1, low3 = _evaluate_points(fiber, digits)
        ctx, x1, x3 = _evaluate_points(fiber, 2 * digits)
        drift = max(
            abs(ctx.mpf(low1.real) - x1.real), abs(ctx.mpf(low1.imag) - x1.imag),
            abs(ctx.mpf(low3.real) - x3.real), abs(ctx.mpf(low3.imag) - x3.imag),
        )
        if drift < ctx.mpf(10) ** (-(precision + 1)):
            break
        logger.debug("marked_points_precision_doubled", algebraic=A.label, digits=2 * digits)
        digits *= 2
    # rounding to `precision` decimals adds at most half a unit in the last place
    bound = drift + ctx.mpf(10) ** (-precision) / 2
    return MarkedPoints(
        algebraic=A,
        precision=precision,
        x1_real=format_mpf(x1.real, precision, ctx),
        x1_imag=format_mpf(x1.imag, precision, ctx),
        x3_real=format_mpf(x3.real, precision, ctx),
        x3_imag=format_mpf(x3.imag, precision, ctx),
        error_bound=ctx.nstr(bound, 3),
        is_complex=fiber.is_complex,
    )


def node_points(fiber: StableFiber, ctx, residues_override: Optional[Residues] = None):
    """
    Node pairs and residues of a fiber as context numbers.

    Args:
        fiber: Stable fiber
        ctx: mpmath context
        residues_override: Residues to use instead of the fiber's

    Returns:
        (points, weights) with points ((x1, -x3), (1, -1), (x3, -x1))
    """
    x1 = fiber.x1.evaluate(ctx)
    x3 = fiber.x3.evaluate(ctx)
    one = ctx.mpc(1)
    points = ((x1, -x3), (one, -one), (x3, -x1))
    exact = residues_override if residues_override is not None else fiber.residues
    weights = tuple(r.evaluate(ctx) for r in exact)
    return points, weights


def _node_coefficients(points: Sequence, weights: Sequence):
    # (r_i (x_i - y_i), x_i + y_i, x_i y_i) per node
    return tuple((r * (x - y), x + y, x * y) for (x, y), r in zip(points, weights))


def _polynomial_at(z, z2, coefficients):
    (c0, a0, b0), (c1, a1, b1), (c2, a2, b2) = coefficients
    f0 = z2 - a0 * z + b0
    f1 = z2 - a1 * z + b1
    f2 = z2 - a2 * z + b2
    return c2 * (f0 * f1) + f2 * (c0 * f1 + c1 * f0)


def residue_polynomial(ctx, z, points: Sequence, weights: Sequence):
    """
    Evaluate sum_i r_i (x_i - y_i)/((z - x_i)(z - y_i)) * prod_k (z - x_k)(z - y_k).

    Args:
        ctx: mpmath context
        z: Sample point
        points: The three node pairs (x_i, y_i) as context numbers
        weights: Residues r_i as context numbers

    Returns:
        The polynomial value at z
    """
    z = ctx.mpc(z)
    return _polynomial_at(z, z * z, _node_coefficients(points, weights))


def residue_identity_check(
    A: AlgebraicPrototype,
    sample_count: Optional[int] = None,
    tol: Optional[float] = None,
    residues_override: Optional[Residues] = None,
) -> bool:
    """
    Numerically confirm that the residue polynomial is constant in z.

    Samples lie on a circle of radius 1 + 2 max(1, |x1|, |x3|), away from
    every pole, at equally spaced angles with a half-step offset.

    Args:
        A: Algebraic prototype
        sample_count: Number of sample points, at least 2 (default from settings)
        tol: Allowed relative deviation from the first sample (default from settings)
        residues_override: Residues to use instead of those of A

    Returns:
        True iff every sample agrees with the first to relative tolerance tol

    Raises:
        ValueError: If sample_count < 2 or tol <= 0
    """
    settings = get_settings()
    sample_count = sample_count if sample_count is not None else settings.residue_samples
    tol = tol if tol is not None else settings.residue_tolerance
    if sample_count < 2:
        raise ValueError("sample_count must be at least 2")
    if tol <= 0:
        raise ValueError("tol must be positive")
    fiber = stable_fiber(A)

    ctx = MPContext()
    ctx.dps = settings.residue_working_digits
    points, weights = node_points(fiber, ctx, residues_override)
    coefficients = _node_coefficients(points, weights)

    x1, x3 = points[0][0], points[2][0]
    radius = 1 + 2 * max(ctx.mpf(1), abs(x1), abs(x3))
    step = ctx.expjpi(ctx.mpf(2) / sample_count)
    z = radius * ctx.expjpi(ctx.mpf(1) / sample_count)
    values = []
    for _ in range(sample_count):
        values.append(_polynomial_at(z, z * z, coefficients))
        z *= step
    reference = values[0]
    if reference == 0:
        return False
    deviation = max(abs(v - reference) for v in values) / abs(reference)
    if deviation >= tol:
        logger.debug("residue_identity_deviation", algebraic=A.label, deviation=float(deviation))
    return bool(deviation < tol)
