"""Prototype validation, enumeration and cylinder data."""

import pytest

from prymcusps.errors import InvalidDiscriminantError, InvalidPrototypeError, PrototypeCondition
from prymcusps.models.schemas import AlgebraicPrototype, GeometricType, Prototype
from prymcusps.services.prototypes import (
    algebraic_prototypes,
    cylinder_data,
    enumerate_prototypes,
    flat_area,
    geometric_type,
    switching_pair,
    twist_count,
    twists,
    validate,
    validate_algebraic,
    width_ratio,
)
from prymcusps.services.quadfield import QuadElem, lambda_of
from prymcusps.utils.cache import get_all_cache_stats

D17_LABELS = [
    "[1,1,0,-3,+1]",
    "[1,1,0,-3,-1]",
    "[1,2,0,-1,-1]",
    "[2,1,0,-1,+1]",
    "[2,1,0,-1,-1]",
    "[2,1,0,1,-1]",
]


def test_d17_canonical_enumeration(d17_prototypes):
    assert [P.label for P in d17_prototypes] == D17_LABELS
    assert all(P.D == 17 for P in d17_prototypes)


def test_d12_enumeration():
    assert [P.label for P in enumerate_prototypes(12)] == ["[1,1,0,-2,+1]", "[1,1,0,-2,-1]"]


def test_d8_enumeration():
    assert [P.label for P in enumerate_prototypes(8)] == ["[1,1,0,0,-1]"]


@pytest.mark.parametrize("D", [5, 13, 21, 29, 37, 45, 53, 61, 101])
def test_empty_for_5_mod_8(D):
    assert enumerate_prototypes(D) == []
    assert algebraic_prototypes(D) == []


@pytest.mark.parametrize("D", [8, 12, 17, 24, 28, 33, 41, 56, 57, 60, 73, 97, 105])
def test_enumeration_is_valid_sorted_and_unique(D):
    prototypes = enumerate_prototypes(D)
    assert prototypes
    for P in prototypes:
        assert validate(P.w, P.h, P.t, P.e, P.eps, D) == P
    keys = [P.sort_key() for P in prototypes]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_enumeration_is_complete_against_brute_force():
    D = 41
    # wh <= (D - 1)/8 = 5
    found = set()
    for e in range(-7, 8):
        for w in range(1, 6):
            for h in range(1, 6):
                for t in range(0, 6):
                    for eps in (1, -1):
                        try:
                            found.add(validate(w, h, t, e, eps, D))
                        except InvalidPrototypeError:
                            pass
    assert found == set(enumerate_prototypes(D))


def test_enumerate_rejects_invalid_discriminant():
    with pytest.raises(InvalidDiscriminantError):
        enumerate_prototypes(16)
    with pytest.raises(InvalidDiscriminantError):
        enumerate_prototypes(15)


@pytest.mark.parametrize(
    "args, condition",
    [
        ((1, 1, 0, -3, 0, 17), PrototypeCondition.EPS_SIGN),
        ((0, 2, 0, 1, -1, 17), PrototypeCondition.POSITIVITY),
        ((1, 1, 0, 1, 1, 17), PrototypeCondition.ARITHMETIC),
        ((1, 2, 0, -1, 1, 17), PrototypeCondition.WIDTH_BOUND),
        ((1, 4, 0, 1, -1, 33), PrototypeCondition.WIDTH_BOUND),
        ((2, 2, 2, 1, -1, 33), PrototypeCondition.TWIST_RANGE),
        ((2, 2, 0, 0, -1, 32), PrototypeCondition.GCD),
    ],
)
def test_validate_reports_first_failing_condition(args, condition):
    with pytest.raises(InvalidPrototypeError) as exc_info:
        validate(*args)
    assert exc_info.value.condition is condition


def test_validate_twist_one_at_32():
    P = validate(2, 2, 1, 0, -1, 32)
    assert P == Prototype(D=32, w=2, h=2, t=1, e=0, eps=-1)


def test_validate_algebraic_without_twist():
    with pytest.raises(InvalidPrototypeError) as exc_info:
        validate_algebraic(2, 2, 0, 1, 32)
    assert exc_info.value.condition is PrototypeCondition.WIDTH_BOUND
    A = validate_algebraic(2, 2, 0, -1, 32)
    assert twist_count(A) == 1
    assert [P.t for P in twists(A)] == [1]


def test_twist_count(twisted_33):
    A = twisted_33.forget_twist()
    assert twist_count(A) == 2
    assert [P.t for P in twists(A)] == [0, 1]
    assert len([P for P in enumerate_prototypes(33) if P.forget_twist() == A]) == 2


def test_algebraic_prototypes_forget_twist():
    As = algebraic_prototypes(33)
    assert len(set(As)) == len(As)
    assert set(As) == {P.forget_twist() for P in enumerate_prototypes(33)}
    assert [A.sort_key() for A in As] == sorted(A.sort_key() for A in As)


def test_enumeration_is_cached():
    enumerate_prototypes(17)
    enumerate_prototypes(17)
    assert get_all_cache_stats()["enumeration_cache"]["size"] == 1


@pytest.mark.parametrize(
    "label, expected",
    [
        ((1, 1, 0, -3, 1), GeometricType.A_PLUS),
        ((1, 1, 0, -3, -1), GeometricType.A_MINUS),
        ((2, 1, 0, -1, -1), GeometricType.A_MINUS),
        ((1, 2, 0, -1, -1), GeometricType.B),
        ((2, 1, 0, 1, -1), GeometricType.B),
    ],
)
def test_geometric_type(label, expected):
    P = validate(*label, 17)
    assert geometric_type(P) is expected


def test_cylinder_data_a_plus():
    P = validate(2, 1, 0, -1, 1, 17)
    data = cylinder_data(P)
    lam = lambda_of(-1, 17)
    first, middle, third = data.cylinders
    assert first == third
    assert (first.width, first.height) == (QuadElem(2, 0, 17), QuadElem(1, 0, 17))
    assert not first.simple and not first.fixed_by_involution
    assert (middle.width, middle.height) == (lam, lam)
    assert middle.simple and middle.fixed_by_involution
    assert data.residues == (QuadElem(2, 0, 17), lam, QuadElem(2, 0, 17))
    assert data.area == lam * lam + 4


@pytest.mark.parametrize("label, simple", [((2, 1, 0, -1, -1), True), ((2, 1, 0, 1, -1), False)])
def test_cylinder_data_eps_minus(label, simple):
    P = validate(*label, 17)
    data = cylinder_data(P)
    half = lambda_of(P.e, 17) / 2
    first, middle, _ = data.cylinders
    assert (first.width, first.height) == (half, half)
    assert first.simple is simple
    assert middle.width == QuadElem(2, 0, 17)
    assert middle.fixed_by_involution
    assert data.area == flat_area(P)


def test_cylinder_twist_is_carried(twisted_33):
    data = cylinder_data(twisted_33)
    assert data.cylinders[1].twist == 1


def test_width_ratio_is_irrational(d17_prototypes):
    assert all(not width_ratio(P).is_rational for P in d17_prototypes)


def test_switching_pair():
    first, second = switching_pair(17)
    assert first == AlgebraicPrototype(D=17, w=2, h=1, e=-1, eps=-1)
    assert second == AlgebraicPrototype(D=17, w=2, h=1, e=1, eps=-1)
    with pytest.raises(InvalidPrototypeError):
        switching_pair(12)


def test_prototype_is_frozen(d17_prototypes):
    with pytest.raises(Exception):
        d17_prototypes[0].w = 5
