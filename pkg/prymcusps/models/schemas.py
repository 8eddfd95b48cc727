"""Pydantic schemas for prototypes, cusps, stable curves and reports."""

from enum import Enum, IntEnum
from typing import Annotated, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PlainSerializer

from prymcusps.services.quadfield import QuadElem
from prymcusps.utils.formatters import format_sign

# Exact field elements serialise to their "a + b*sqrt(D)" form in JSON
Exact = Annotated[QuadElem, PlainSerializer(str, return_type=str, when_used="json")]

Sign = Literal[1, -1]


class GeometricType(str, Enum):
    """Cylinder configuration of a prototypical cusp."""

    A_PLUS = "A+"
    A_MINUS = "A-"
    B = "B"


class ComponentLabel(IntEnum):
    """Spin component index i with 2i = e + eps mod 4."""

    FIRST = 1
    SECOND = 2


class _Value(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class AlgebraicPrototype(_Value):
    """A prototype with the twist forgotten; determines the flat surface up to twist."""

    D: int = Field(..., description="Discriminant", gt=0)
    w: int = Field(..., description="Width of the long cylinder(s)", gt=0)
    h: int = Field(..., description="Height of the long cylinder(s)", gt=0)
    e: int = Field(..., description="Trace parameter, D = e^2 + 8wh")
    eps: Sign = Field(..., description="+1 or -1, selects the cylinder family")

    @property
    def label(self) -> str:
        return f"[{self.w},{self.h},{self.e},{format_sign(self.eps)}]"

    def sort_key(self) -> Tuple[int, int, int, int]:
        """Canonical order: e, then w, then h, then eps (+1 first)."""
        return (self.e, self.w, self.h, -self.eps)

    def __str__(self) -> str:
        return self.label


class Prototype(_Value):
    """A prototype [w,h,t,e,eps] of discriminant D."""

    D: int = Field(..., description="Discriminant", gt=0)
    w: int = Field(..., description="Width of the long cylinder(s)", gt=0)
    h: int = Field(..., description="Height of the long cylinder(s)", gt=0)
    t: int = Field(..., description="Twist, 0 <= t < gcd(w, h)", ge=0)
    e: int = Field(..., description="Trace parameter, D = e^2 + 8wh")
    eps: Sign = Field(..., description="+1 or -1, selects the cylinder family")

    @property
    def label(self) -> str:
        return f"[{self.w},{self.h},{self.t},{self.e},{format_sign(self.eps)}]"

    def sort_key(self) -> Tuple[int, int, int, int, int]:
        """Canonical order: e, w, h, eps (+1 first), t."""
        return (self.e, self.w, self.h, -self.eps, self.t)

    def forget_twist(self) -> AlgebraicPrototype:
        return AlgebraicPrototype(D=self.D, w=self.w, h=self.h, e=self.e, eps=self.eps)

    def __str__(self) -> str:
        return self.label


class Cylinder(_Value):
    """One horizontal cylinder of the prototypical surface."""

    width: Exact
    height: Exact
    twist: Exact
    simple: bool = Field(..., description="Single saddle connection on each boundary")
    fixed_by_involution: bool = Field(
        ..., description="Mapped to itself (rather than swapped) by the Prym involution"
    )

    @property
    def area(self) -> QuadElem:
        return self.width * self.height


class CylinderData(_Value):
    """Cylinders ordered by node index: cylinder i has circumference r_i."""

    prototype: Prototype
    geometric_type: GeometricType
    cylinders: Tuple[Cylinder, Cylinder, Cylinder]

    @property
    def residues(self) -> Tuple[QuadElem, QuadElem, QuadElem]:
        return tuple(c.width for c in self.cylinders)

    @property
    def area(self) -> QuadElem:
        first, second, third = (c.area for c in self.cylinders)
        return first + second + third


class PairingMatrix(_Value):
    """Intersection form on H1 in the basis adapted to eps."""

    eps: Sign
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)


class HomologyRep(_Value):
    """Integer matrix of the real-multiplication generator on H1^-, acting on columns."""

    prototype: Prototype
    generator: Tuple[Tuple[int, ...], ...]
    pairing: PairingMatrix

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.generator, dtype=np.int64)


class NestedRadical(_Value):
    """The number rational_part + sign*sqrt(radicand) with both parts in Q(sqrt D)."""

    rational_part: Exact
    radicand: Exact
    sign: Sign

    @property
    def is_real(self) -> bool:
        return self.radicand.sign() >= 0

    def evaluate(self, ctx):
        """Complex value in an mpmath context."""
        root = ctx.sqrt(ctx.mpc(self.radicand.evaluate(ctx)))
        return self.rational_part.evaluate(ctx) + self.sign * root

    def _partner_check(self, other: "NestedRadical") -> None:
        if (self.rational_part != other.rational_part or self.radicand != other.radicand
                or self.sign == other.sign):
            raise ValueError("nested radicals are not a conjugate pair")

    def pair_sum(self, other: "NestedRadical") -> QuadElem:
        """Exact sum with the conjugate radical p - sign*sqrt(u)."""
        self._partner_check(other)
        return self.rational_part * 2

    def pair_product(self, other: "NestedRadical") -> QuadElem:
        """Exact product with the conjugate radical: p^2 - u."""
        self._partner_check(other)
        return self.rational_part * self.rational_part - self.radicand

    def __str__(self) -> str:
        op = "+" if self.sign > 0 else "-"
        return f"({self.rational_part}) {op} sqrt({self.radicand})"


class StableFiber(_Value):
    """Stable curve at a cusp: a P1 with nodes +-1, +-x1, +-x3 glued in pairs."""

    algebraic: AlgebraicPrototype
    s: Exact = Field(..., description="Cross-ratio parameter; the fiber depends on s only")
    u: Exact = Field(..., description="(1 - s^2)/3, the radicand of the marked points")
    x1: NestedRadical
    x3: NestedRadical
    residues: Tuple[Exact, Exact, Exact]
    identified_pairs: Tuple[Tuple[str, str], ...] = (
        ("x1", "-x3"),
        ("1", "-1"),
        ("x3", "-x1"),
    )

    @property
    def is_complex(self) -> bool:
        return not self.x1.is_real


class MarkedPoints(_Value):
    """Decimal marked points x1, x3 with a validated absolute error bound."""

    algebraic: AlgebraicPrototype
    precision: int = Field(..., description="Requested decimal digits", ge=1)
    x1_real: str
    x1_imag: str
    x3_real: str
    x3_imag: str
    error_bound: str = Field(..., description="Estimated absolute error of each coordinate")
    is_complex: bool

    @property
    def x1(self) -> complex:
        return complex(float(self.x1_real), float(self.x1_imag))

    @property
    def x3(self) -> complex:
        return complex(float(self.x3_real), float(self.x3_imag))


class GaloisOrbit(_Value):
    """An orbit of the Galois involution on algebraic prototypes."""

    members: Tuple[AlgebraicPrototype, ...]
    labels: Optional[Tuple[ComponentLabel, ...]] = None

    @property
    def is_fixed(self) -> bool:
        return len(self.members) == 1


class ComponentCount(BaseModel):
    """Cusp tally of one spin component."""

    label: ComponentLabel
    cusps: int = Field(..., description="Prototypes including twists", ge=0)
    algebraic_prototypes: int = Field(..., ge=0)


class ComponentCensus(BaseModel):
    """Per-component cusp counts for one discriminant."""

    D: int
    two_components: bool
    components: List[ComponentCount]


class ReportRecord(BaseModel):
    """One output row per prototype; the JSON and CSV report schema."""

    D: int
    w: int
    h: int
    t: int
    e: int
    eps: int
    type: GeometricType
    component: ComponentLabel
    fiber_id: int = Field(..., description="1-based index of the stable fiber within D", ge=1)
    s_exact: str = Field(..., description="s as 'a + b*sqrt(D)'")
    s_decimal: str
    conj_w: int
    conj_h: int
    conj_e: int
    conj_eps: int

    model_config = {
        "json_schema_extra": {
            "example": {
                "D": 17, "w": 2, "h": 1, "t": 0, "e": 1, "eps": -1,
                "type": "B", "component": 2, "fiber_id": 6,
                "s_exact": "-1/4 + 1/4*sqrt(17)", "s_decimal": "0.780776406404415",
                "conj_w": 2, "conj_h": 1, "conj_e": -1, "conj_eps": -1,
            }
        }
    }


class PropertyTally(BaseModel):
    """How often one property was checked across the sweep, and how often it failed."""

    name: str
    discriminants: int = 0
    checked: int = 0
    failed: int = 0
    first_counterexample: Optional[str] = None


class VerificationReport(BaseModel):
    """Result of a verification sweep."""

    dmax: int
    discriminants: int
    properties: List[PropertyTally]
    errors: List[str] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.errors and all(p.failed == 0 for p in self.properties)

    @property
    def first_counterexample(self) -> Optional[str]:
        for tally in self.properties:
            if tally.first_counterexample:
                return f"{tally.name}: {tally.first_counterexample}"
        return self.errors[0] if self.errors else None
