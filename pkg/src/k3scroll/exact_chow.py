"""Graded Chow ring of a K3 surface with Picard group generated by one class.

Every cycle on the surface is a combination ``a0 * 1 + a1 * L + a2 * pt``
with rational coefficients.  The only nontrivial product of positive-degree
classes is ``L * L = (2g - 2) * pt``; anything of degree three or more
vanishes because the base is a surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]

DIM_MODULI_K3 = 19
CHI_STRUCTURE_SHEAF = 2


class SelfCheckError(ArithmeticError):
    """Two independent computations of the same quantity disagree."""


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an exact number to a Fraction, refusing floats."""
    kind = type(x)
    if kind is Fraction:
        return x
    if kind is int:
        return Fraction(x)
    if isinstance(x, bool) or not isinstance(x, _RationalABC):
        raise TypeError(f"expected an exact rational, got {type(x).__name__}")
    return Fraction(x)


@dataclass(frozen=True)
class K3Context:
    """A polarized K3 surface ``(S, L)`` of genus ``g``, ``L^2 = 2g - 2``."""

    g: int

    def __post_init__(self) -> None:
        if isinstance(self.g, bool) or not isinstance(self.g, int):
            raise TypeError("genus must be an integer")
        if self.g < 3:
            raise ValueError(f"genus must be at least 3, got {self.g}")

    @property
    def l_squared(self) -> int:
        return 2 * self.g - 2

    @property
    def chi_structure_sheaf(self) -> int:
        return CHI_STRUCTURE_SHEAF

    @property
    def dim_moduli_k3(self) -> int:
        return DIM_MODULI_K3

    @property
    def dim_pairs_space(self) -> int:
        # pairs (S, C) with C in |L|
        return DIM_MODULI_K3 + self.g

    @property
    def dim_mg(self) -> int:
        return 3 * self.g - 3


@dataclass(frozen=True)
class ChowS:
    """Element ``a0 + a1 L + a2 pt`` of A(S)."""

    a0: Fraction = Fraction(0)
    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("a0", "a1", "a2"):
            value = getattr(self, name)
            if type(value) is not Fraction:
                object.__setattr__(self, name, as_rational(value))

    @classmethod
    def one(cls) -> ChowS:
        return cls(1, 0, 0)

    @classmethod
    def polarization(cls, mult: RationalLike = 1) -> ChowS:
        return cls(0, mult, 0)

    @classmethod
    def point(cls, mult: RationalLike = 1) -> ChowS:
        return cls(0, 0, mult)

    def is_zero(self) -> bool:
        return self.a0 == 0 and self.a1 == 0 and self.a2 == 0

    def degree_part(self, k: int) -> ChowS:
        """Return the codimension-``k`` component."""
        if k == 0:
            return ChowS(self.a0, 0, 0)
        if k == 1:
            return ChowS(0, self.a1, 0)
        if k == 2:
            return ChowS(0, 0, self.a2)
        return ChowS()

    def __add__(self, other: ChowS) -> ChowS:
        if not isinstance(other, ChowS):
            return NotImplemented
        return ChowS(self.a0 + other.a0, self.a1 + other.a1, self.a2 + other.a2)

    def __neg__(self) -> ChowS:
        return ChowS(-self.a0, -self.a1, -self.a2)

    def __sub__(self, other: ChowS) -> ChowS:
        if not isinstance(other, ChowS):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: RationalLike) -> ChowS:
        # scalar multiplication only; ring products need the genus, see chow_mul
        if isinstance(scalar, ChowS) or isinstance(scalar, bool):
            return NotImplemented
        if not isinstance(scalar, _RationalABC):
            return NotImplemented
        c = Fraction(scalar)
        return ChowS(c * self.a0, c * self.a1, c * self.a2)

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = []
        for coeff, label in ((self.a0, ""), (self.a1, "L"), (self.a2, "pt")):
            if coeff == 0:
                continue
            if label and coeff == 1:
                terms.append(label)
            elif label:
                terms.append(f"{coeff}*{label}")
            else:
                terms.append(str(coeff))
        return " + ".join(terms) if terms else "0"


def chow_mul(ctx: K3Context, x: ChowS, y: ChowS) -> ChowS:
    return ChowS(
        x.a0 * y.a0,
        x.a0 * y.a1 + x.a1 * y.a0,
        x.a0 * y.a2 + x.a2 * y.a0 + x.a1 * y.a1 * ctx.l_squared,
    )


def integrate_s(x: ChowS) -> Fraction:
    """Degree of the zero-cycle part of ``x``."""
    return x.a2


def format_rational(x: RationalLike) -> int | str:
    """Integers stay integers; anything else renders as ``"p/q"``."""
    q = as_rational(x)
    if q.denominator == 1:
        return q.numerator
    return f"{q.numerator}/{q.denominator}"
