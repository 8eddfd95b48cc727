"""Exhaustive sweeps over all discriminants up to 4000 (marked slow)."""

import time

import pytest

from prymcusps.models.schemas import ComponentLabel
from prymcusps.services.galois import conjugate, orbits
from prymcusps.services.homology import (
    component_census,
    iota_T,
    is_self_adjoint,
    minimal_polynomial_holds,
    pairing_on_imT_mod2,
    spin_component,
)
from prymcusps.services.prototypes import (
    algebraic_prototypes,
    enumerate_prototypes,
    switching_pair,
    validate_algebraic,
)
from prymcusps.services.quadfield import lambda_of, order_generator
from prymcusps.services.stablecurve import (
    galois_compatible,
    marked_points_distinct,
    residue_identity_check,
    stable_fiber,
)
from prymcusps.workflows.orchestrator import discriminants_up_to

DMAX = 4000
STABLE_DMAX = 1000

ALL_D = discriminants_up_to(DMAX)
ODD_D = [D for D in ALL_D if D % 2 == 1]
ONE_MOD_8 = [D for D in ALL_D if D % 8 == 1]

pytestmark = pytest.mark.slow


def test_spin_oracle_matches_formula():
    for D in ONE_MOD_8:
        for P in enumerate_prototypes(D):
            assert pairing_on_imT_mod2(P) == ((P.e + P.eps) % 4 == 0), (D, P.label)


def test_real_multiplication_matrices():
    for D in ODD_D:
        for P in enumerate_prototypes(D):
            rep = iota_T(P)
            assert minimal_polynomial_holds(rep), (D, P.label)
            assert is_self_adjoint(rep), (D, P.label)


def test_galois_involution_and_component_swap():
    for D in ONE_MOD_8:
        for A in algebraic_prototypes(D):
            B = conjugate(A)
            assert conjugate(B) == A, (D, A.label)
            assert validate_algebraic(B.w, B.h, B.e, B.eps, D) == B
            assert spin_component(B) != spin_component(A), (D, A.label)
    for D in (17, 41, 73, 89):
        first, second = switching_pair(D)
        assert conjugate(first) == second
        assert (spin_component(first), spin_component(second)) == (ComponentLabel.FIRST, ComponentLabel.SECOND)


def test_d17_census():
    assert len(enumerate_prototypes(17)) == 6
    assert [c.cusps for c in component_census(17).components] == [3, 3]
    result = orbits(17)
    assert len(result) == 3
    assert all(o.labels == (ComponentLabel.FIRST, ComponentLabel.SECOND) for o in result)


def test_empty_for_5_mod_8():
    assert all(enumerate_prototypes(D) == [] for D in ALL_D if D % 8 == 5)


def test_stable_fiber_identities():
    for D in [D for D in ALL_D if D <= STABLE_DMAX]:
        for A in algebraic_prototypes(D):
            fiber = stable_fiber(A)
            assert fiber.x1.pair_sum(fiber.x3) == -2 * fiber.s
            assert residue_identity_check(A, tol=1e-9), (D, A.label)
            assert galois_compatible(A), (D, A.label)
            assert marked_points_distinct(fiber), (D, A.label)


def test_residue_sweep_runtime():
    start = time.perf_counter()
    checked = 0
    for D in [D for D in ALL_D if D <= STABLE_DMAX]:
        for A in algebraic_prototypes(D):
            assert residue_identity_check(A, tol=1e-9), (D, A.label)
            checked += 1
    elapsed = time.perf_counter() - start
    assert checked > 20000
    assert elapsed < 120, f"{checked} residue checks took {elapsed:.1f}s"


def test_lambda_identities():
    for D in ODD_D:
        T = order_generator(D)
        for A in algebraic_prototypes(D):
            lam = lambda_of(A.e, D)
            assert lam * lam == A.e * lam + 2 * A.w * A.h
            assert T == lam - (A.e - 1) // 2
