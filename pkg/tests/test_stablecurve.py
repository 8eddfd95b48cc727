"""Stable fibers over the cusps."""

from fractions import Fraction

import pytest
from mpmath.ctx_mp import MPContext

from prymcusps.errors import DiscriminantMismatchError
from prymcusps.services.prototypes import algebraic_prototypes, validate_algebraic
from prymcusps.services.quadfield import QuadElem
from prymcusps.services.stablecurve import (
    fiber_ids,
    galois_compatible,
    marked_points,
    marked_points_distinct,
    node_constant,
    node_points,
    residue_identity_check,
    residue_polynomial,
    residues,
    s_from_residues,
    s_param,
    same_fiber,
    stable_fiber,
)


def test_s_for_eps_minus(switching_b):
    assert s_param(switching_b) == QuadElem(Fraction(-1, 4), Fraction(1, 4), 17)


def test_s_for_eps_plus():
    A = validate_algebraic(2, 1, -1, 1, 17)
    assert s_param(A) == QuadElem(Fraction(-1, 8), Fraction(1, 8), 17)


def test_u_and_exact_marked_point_identities(switching_b):
    fiber = stable_fiber(switching_b)
    assert fiber.u == QuadElem(Fraction(-1, 24), Fraction(1, 24), 17)
    assert not fiber.is_complex
    assert fiber.x1.is_real and fiber.x3.is_real
    assert fiber.x1.pair_sum(fiber.x3) == -2 * fiber.s
    assert fiber.x1.pair_product(fiber.x3) == (4 * fiber.s * fiber.s - 1) / 3
    assert fiber.identified_pairs == (("x1", "-x3"), ("1", "-1"), ("x3", "-x1"))


def test_marked_points_real(switching_b):
    points = marked_points(switching_b, 12)
    assert not points.is_complex
    assert points.x1 == pytest.approx(complex(-1.1415109, 0), abs=1e-6)
    assert points.x3 == pytest.approx(complex(-0.4200419, 0), abs=1e-6)
    assert points.x1_real.startswith("-1.141510")
    assert float(points.error_bound) < 1e-12


def test_marked_points_complex():
    A = validate_algebraic(2, 1, -1, -1, 17)
    fiber = stable_fiber(A)
    assert float(fiber.s) == pytest.approx(1.2807764, abs=1e-6)
    assert fiber.is_complex
    assert not fiber.x1.is_real
    points = marked_points(A, 10)
    assert points.is_complex
    assert points.x1 == pytest.approx(points.x3.conjugate(), abs=1e-9)
    assert points.x1.real == pytest.approx(-float(fiber.s), abs=1e-9)


def test_marked_points_rejects_bad_precision(switching_b):
    with pytest.raises(ValueError):
        marked_points(switching_b, 0)


@pytest.mark.parametrize("D", [8, 12, 17, 33, 41, 60, 73])
def test_fiber_identities(D):
    for A in algebraic_prototypes(D):
        fiber = stable_fiber(A)
        assert s_param(A) > 0
        assert s_from_residues(A) == s_param(A)
        assert marked_points_distinct(fiber), A.label
        assert node_constant(A).sign() != 0
        assert fiber.is_complex == (fiber.s > 1)
        assert galois_compatible(A), A.label


def test_residues_follow_cylinders(switching_b):
    r1, r2, r3 = residues(switching_b)
    assert r1 == r3
    assert r2 == 2
    assert r1 == QuadElem(Fraction(1, 4), Fraction(1, 4), 17)


def test_same_fiber():
    As = algebraic_prototypes(17)
    assert all(same_fiber(A, A) for A in As)
    assert not same_fiber(As[0], As[1])
    with pytest.raises(DiscriminantMismatchError):
        same_fiber(As[0], algebraic_prototypes(12)[0])


def test_fiber_ids_d17():
    As = algebraic_prototypes(17)
    ids = fiber_ids(As)
    assert [ids[A] for A in As] == [1, 2, 3, 4, 5, 6]


@pytest.mark.parametrize("D", [12, 17, 33])
def test_residue_identity(D):
    for A in algebraic_prototypes(D):
        assert residue_identity_check(A, sample_count=12)


def test_residue_identity_detects_wrong_residues(switching_b):
    one = QuadElem(1, 0, 17)
    assert not residue_identity_check(switching_b, sample_count=12, residues_override=(one, one, one))


def test_residue_identity_rejects_bad_tolerance(switching_b):
    with pytest.raises(ValueError):
        residue_identity_check(switching_b, tol=0)


def test_residue_identity_rejects_too_few_samples(switching_b):
    with pytest.raises(ValueError):
        residue_identity_check(switching_b, sample_count=1)
    with pytest.raises(ValueError):
        residue_identity_check(switching_b, sample_count=0)


@pytest.mark.parametrize("D", [17, 41])
def test_residue_polynomial_equals_node_constant(D):
    ctx = MPContext()
    ctx.dps = 30
    for A in algebraic_prototypes(D):
        points, weights = node_points(stable_fiber(A), ctx)
        expected = node_constant(A).evaluate(ctx)
        for z in (ctx.mpc(7, 3), ctx.mpc(-11, 0.5), ctx.mpc(0.25, -19)):
            value = residue_polynomial(ctx, z, points, weights)
            assert abs(value - expected) < 1e-12 * abs(expected), (A.label, z)


@pytest.mark.parametrize("D", [17, 41])
def test_residue_identity_passes_and_detects_shifted_r2(D):
    for A in algebraic_prototypes(D):
        r1, r2, r3 = residues(A)
        assert residue_identity_check(A, sample_count=32, tol=1e-9), A.label
        assert not residue_identity_check(A, sample_count=32, tol=1e-9, residues_override=(r1, r2 + 1, r3)), A.label
