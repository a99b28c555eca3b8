"""Chern calculus, Riemann-Roch and Mukai vectors for sheaves on the K3."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb
from typing import Optional

from .exact_chow import K3Context


@dataclass(frozen=True)
class SheafData:
    """Numerical data of a torsion-free sheaf with ``c1 = c1_mult * L``.

    Cohomology dimensions are only filled in when they are known from a
    construction; otherwise they stay ``None``.
    """

    rank: int
    c1_mult: int
    c2_pts: int
    h0: Optional[int] = None
    h1: Optional[int] = None
    h2: Optional[int] = None

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        for name in ("h0", "h1", "h2"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")

    @property
    def has_cohomology(self) -> bool:
        return None not in (self.h0, self.h1, self.h2)

    def without_cohomology(self) -> SheafData:
        return replace(self, h0=None, h1=None, h2=None)


@dataclass(frozen=True)
class MukaiVector:
    r0: int
    c1_mult: int
    s: Fraction

    def as_tuple(self) -> tuple[int, int, Fraction]:
        return (self.r0, self.c1_mult, self.s)


def c1_squared(ctx: K3Context, s: SheafData) -> int:
    return s.c1_mult**2 * ctx.l_squared


def riemann_roch_k3(ctx: K3Context, s: SheafData) -> Fraction:
    # chi = 2 rk + c1^2/2 - c2 on a K3
    return Fraction(2 * s.rank + s.c1_mult**2 * (ctx.g - 1) - s.c2_pts)


def check_cohomology(ctx: K3Context, s: SheafData) -> None:
    """Raise if the attached cohomology contradicts Riemann-Roch."""
    if not s.has_cohomology:
        return
    chi = s.h0 - s.h1 + s.h2
    expected = riemann_roch_k3(ctx, s)
    if chi != expected:
        raise ValueError(
            f"h0 - h1 + h2 = {chi} but Riemann-Roch gives {expected} for {s}"
        )


def twist_by_L(ctx: K3Context, s: SheafData, n: int) -> SheafData:
    """Chern data of ``s (x) L^n``; cohomology is dropped."""
    if n < 0:
        raise ValueError(f"twist exponent must be non-negative, got {n}")
    ll = ctx.l_squared
    return SheafData(
        rank=s.rank,
        c1_mult=s.c1_mult + n * s.rank,
        c2_pts=(
            s.c2_pts
            + (s.rank - 1) * n * s.c1_mult * ll
            + comb(s.rank, 2) * n * n * ll
        ),
    )


def mukai_vector(ctx: K3Context, s: SheafData) -> MukaiVector:
    return MukaiVector(
        r0=s.rank,
        c1_mult=s.c1_mult,
        s=Fraction(c1_squared(ctx, s), 2) - s.c2_pts + s.rank,
    )


def expected_dim_raw(ctx: K3Context, s: SheafData) -> int:
    """``2 r c2 - (r - 1) c1^2 - 2 (r^2 - 1)``, without any clamping."""
    r = s.rank
    return 2 * r * s.c2_pts - (r - 1) * c1_squared(ctx, s) - 2 * (r * r - 1)


def dim_moduli(g: int, r: int, d: int) -> int:
    """Dimension ``2 rho`` of the moduli space containing the twisted LM bundle."""
    from .brill_noether import require_admissible, rho

    require_admissible(g, r, d)
    return 2 * rho(g, r, d)
