"""Chow ring of the projective bundle P(F) over a K3 surface.

A(P(F)) = A(S)[xi] / (xi^n - c1 xi^(n-1) + c2 xi^(n-2)) for a rank-n bundle
F on the surface (higher Chern classes vanish).  Elements are stored reduced,
as ``n`` coefficients in A(S) for ``xi^0 .. xi^(n-1)``.

Two independent routes to intersection numbers live here: rewriting with the
Grothendieck relation (:func:`groth_reduce`) and pushing forward monomials via
Segre classes (:func:`pushforward`).  :func:`top_self_intersection` runs both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .exact_chow import (
    ChowS,
    K3Context,
    SelfCheckError,
    as_rational,
    chow_mul,
    integrate_s,
)

RawPoly = Mapping[int, ChowS]


@dataclass(frozen=True)
class BundleChern:
    """Chern data of a vector bundle: ``c1 = c1_mult * L``, ``c2 = c2_pts * pt``."""

    rank: int
    c1_mult: int
    c2_pts: Fraction

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise ValueError(f"rank must be at least 2, got {self.rank}")
        object.__setattr__(self, "c2_pts", as_rational(self.c2_pts))

    @property
    def c1(self) -> ChowS:
        return ChowS.polarization(self.c1_mult)

    @property
    def c2(self) -> ChowS:
        return ChowS.point(self.c2_pts)


@dataclass(frozen=True)
class ChowP:
    """Reduced element of A(P(F)): ``coeffs[k]`` multiplies ``xi^k``."""

    coeffs: tuple[ChowS, ...]

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def as_raw(self) -> dict[int, ChowS]:
        return {k: c for k, c in enumerate(self.coeffs) if not c.is_zero()}

    def __add__(self, other: ChowP) -> ChowP:
        if not isinstance(other, ChowP):
            return NotImplemented
        if other.rank != self.rank:
            raise ValueError("cannot add elements of different projective bundles")
        return ChowP(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))


def groth_reduce(ctx: K3Context, f: BundleChern, poly: RawPoly) -> ChowP:
    """Reduce a sparse xi-polynomial modulo the Grothendieck relation.

    Rewrites the highest power ``xi^m`` (``m >= rank``) as
    ``c1 xi^(m-1) - c2 xi^(m-2)`` until every power is below the rank.
    """
    n = f.rank
    work: dict[int, ChowS] = {}
    for k, c in poly.items():
        if k < 0:
            raise ValueError(f"negative xi-power {k}")
        if not c.is_zero():
            work[k] = work.get(k, ChowS()) + c

    c1, c2 = f.c1, f.c2
    while work and max(work) >= n:
        m = max(work)
        coeff = work.pop(m)
        # chow_mul drops anything beyond degree 2
        hi = chow_mul(ctx, coeff, c1)
        lo = -chow_mul(ctx, coeff, c2)
        for k, term in ((m - 1, hi), (m - 2, lo)):
            if term.is_zero():
                continue
            total = work.get(k, ChowS()) + term
            if total.is_zero():
                work.pop(k, None)
            else:
                work[k] = total

    return ChowP(tuple(work.get(k, ChowS()) for k in range(n)))


def xi_power(ctx: K3Context, f: BundleChern, k: int) -> ChowP:
    return groth_reduce(ctx, f, {k: ChowS.one()})


def chowp_mul(ctx: K3Context, f: BundleChern, x: ChowP, y: ChowP) -> ChowP:
    raw: dict[int, ChowS] = {}
    for i, a in enumerate(x.coeffs):
        for j, b in enumerate(y.coeffs):
            raw[i + j] = raw.get(i + j, ChowS()) + chow_mul(ctx, a, b)
    return groth_reduce(ctx, f, raw)


def segre_class(ctx: K3Context, f: BundleChern, j: int) -> ChowS:
    """Segre class ``s_j`` with ``s_0 = 1``, ``s_j = c1 s_(j-1) - c2 s_(j-2)``."""
    if j < 0:
        return ChowS()
    prev, cur = ChowS(), ChowS.one()
    for _ in range(j):
        prev, cur = cur, chow_mul(ctx, f.c1, cur) - chow_mul(ctx, f.c2, prev)
    return cur


def pushforward(ctx: K3Context, f: BundleChern, k: int) -> ChowS:
    """Push ``xi^k`` down to the surface."""
    if k < 0:
        raise ValueError(f"negative xi-power {k}")
    if k > f.rank + 1:
        raise ValueError(
            f"xi^{k} exceeds the dimension {f.rank + 1} of the projective bundle"
        )
    return segre_class(ctx, f, k - f.rank + 1)


def integrate_p(ctx: K3Context, x: ChowP) -> Fraction:
    """Degree of the zero-cycle part of a reduced element.

    After reduction only ``xi^(rank-1) * pt`` contributes, since ``xi^(rank-1)``
    restricts to the class of a point on each fibre.
    """
    return integrate_s(x.coeffs[-1])


def top_self_intersection(ctx: K3Context, f: BundleChern) -> Fraction:
    """``xi^(rank+1)`` on P(F), checked by three routes."""
    by_reduction = integrate_p(ctx, xi_power(ctx, f, f.rank + 1))
    by_segre = integrate_s(pushforward(ctx, f, f.rank + 1))
    closed = integrate_s(chow_mul(ctx, f.c1, f.c1) - f.c2)
    if not by_reduction == by_segre == closed:
        raise SelfCheckError(
            f"xi^top disagrees: reduction {by_reduction}, segre {by_segre}, "
            f"c1^2 - c2 {closed}"
        )
    return by_reduction
