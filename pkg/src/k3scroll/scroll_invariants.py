"""Numerical invariants of scrolls built from Lazarsfeld-Mukai bundles.

For an admissible ``(g, r, d)`` the twisted bundle ``F = E (x) L`` embeds
``P(F)`` as a ``P^r``-scroll of dimension ``r + 2`` in ``P^R``.  Restricting
to a curve ``C`` in ``|L|`` gives a scroll ``Sigma`` over ``C``; for ``r = 1``
this is a surface scroll of degree ``6g - 6`` in ``P^(4g - 5)``.

Every function takes ``force=True`` to evaluate its formulas on a
numerically inadmissible triple; the values are then meaningless as
geometry but still well defined arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .brill_noether import (
    InadmissibleError,
    gonality,
    lm_bundle,
    lm_h0,
    lm_twist_h0,
    require_admissible,
    rho,
)
from .exact_chow import K3Context, SelfCheckError
from .proj_bundle import BundleChern, top_self_intersection
from .sheaf_calc import riemann_roch_k3, twist_by_L


def _check(name: str, a: int, b: int) -> None:
    if a != b:
        raise SelfCheckError(f"{name}: {a} != {b}")


def _guard(g: int, r: int, d: int, force: bool) -> None:
    if not force:
        require_admissible(g, r, d)


def embedding_dim_R(g: int, r: int, d: int, *, force: bool = False) -> int:
    _guard(g, r, d, force)
    value = (r + 1) * (g + 1) + 3 * (g - 1) - (d + 1)
    f = twist_by_L(K3Context(g), lm_bundle(g, r, d, force=force), 1)
    _check("R vs chi(F) - 1", value, int(riemann_roch_k3(K3Context(g), f)) - 1)
    return value


def invert_embedding_dim(g: int, r: int, R: int) -> int:
    """Solve ``R = (r+1)(g+1) + 3(g-1) - (d+1)`` for ``d``."""
    return (r + 1) * (g + 1) + 3 * (g - 1) - 1 - R


def scroll_degree(g: int, r: int, d: int, *, force: bool = False) -> tuple[int, int]:
    """Degree of the scroll as ``(symbolic, printed)``.

    ``symbolic`` is ``xi^(r+2)`` on ``P(F)`` from the Chow ring; ``printed`` is
    the closed form ``(g-1)(3r^2 + 5r + 8) - d``.  They differ by
    ``2 r^2 (g - 1)`` and are deliberately never reconciled here.
    """
    _guard(g, r, d, force)
    ctx = K3Context(g)
    f = twist_by_L(ctx, lm_bundle(g, r, d, force=force), 1)
    symbolic = top_self_intersection(ctx, BundleChern(f.rank, f.c1_mult, f.c2_pts))
    printed = (g - 1) * (3 * r * r + 5 * r + 8) - d
    return int(symbolic), printed


def tangent_cohomology(
    g: int, r: int, d: int, *, force: bool = False
) -> tuple[int, int, int]:
    """``(h^0, h^1, sum of higher h^i)`` of the tangent sheaf of the scroll."""
    _guard(g, r, d, force)
    return 0, 2 * rho(g, r, d) + 20, 0


def normal_bundle_h0(g: int, r: int, d: int, *, force: bool = False) -> int:
    _guard(g, r, d, force)
    R = embedding_dim_R(g, r, d, force=force)
    return 18 + 2 * g - 2 * (r + 1) * (r + g - d) + (R + 1) ** 2


def hilb_dim_scroll(g: int, r: int, d: int, *, force: bool = False) -> int:
    _guard(g, r, d, force)
    R = embedding_dim_R(g, r, d, force=force)
    value = 18 + 2 * rho(g, r, d) + (R + 1) ** 2
    _check("dim H vs h0(N)", value, normal_bundle_h0(g, r, d, force=force))
    return value


def hilb_dim_ruled(n: int, g: int) -> int:
    """Dimension of the Hilbert scheme component of linearly normal,
    non-special scrolls of degree ``n`` and genus ``g``."""
    if g < 0:
        raise ValueError(f"genus must be non-negative, got {g}")
    bound = 2 * g + 3 + min(1, g - 1)
    if n < bound:
        raise ValueError(f"degree n = {n} below the bound 2g + 3 + min(1, g-1) = {bound}")
    return 7 * (g - 1) + (n - 2 * g + 2) ** 2


def _require_window(g: int, d: int) -> None:
    lo = gonality(g)
    if not lo <= d <= g:
        raise InadmissibleError(g, 1, d, (f"d outside gonality window [{lo}, {g}]",))


def kd_dim_bound(g: int, d: int, *, force: bool = False) -> tuple[int, bool]:
    """Upper bound on the family of genus-``g`` ruled scrolls coming from pencils
    of degree ``d``, and whether it is strictly below the Hilbert scheme
    dimension."""
    if not force:
        _require_window(g, d)
    h = 4 * g - 5
    # 18 + g + 2 rho(g,1,d) + (h+1)^2
    bound = 14 - g + 4 * d + (h + 1) ** 2
    return bound, bound < hilb_dim_ruled(6 * g - 6, g)


def unisecant_family_dim(g: int, d: int, *, force: bool = False) -> int:
    if not force:
        _require_window(g, d)
    return g + 2 - d


@dataclass(frozen=True)
class ScrollReport:
    g: int
    r: int
    d: int
    R: int
    delta_symbolic: int
    delta_printed: int
    h0_F: int
    rho: int
    dim_Mv: int
    h1_TP: int
    h0_N: int
    hilb_dim: int


@dataclass(frozen=True)
class RuledReport:
    g: int
    r: int
    d: int
    h0_restricted: int
    degree_sigma: int
    n: Optional[int] = None
    h: Optional[int] = None
    hilb_dim_ruled: Optional[int] = None
    kd_bound: Optional[int] = None
    kd_strict: Optional[bool] = None
    unisecant_dim: Optional[int] = None


def scroll_report(g: int, r: int, d: int, *, force: bool = False) -> ScrollReport:
    _guard(g, r, d, force)
    delta_symbolic, delta_printed = scroll_degree(g, r, d, force=force)
    R = embedding_dim_R(g, r, d, force=force)
    value = rho(g, r, d)
    report = ScrollReport(
        g=g,
        r=r,
        d=d,
        R=R,
        delta_symbolic=delta_symbolic,
        delta_printed=delta_printed,
        h0_F=lm_twist_h0(g, r, d),
        rho=value,
        dim_Mv=2 * value,
        h1_TP=tangent_cohomology(g, r, d, force=force)[1],
        h0_N=normal_bundle_h0(g, r, d, force=force),
        hilb_dim=hilb_dim_scroll(g, r, d, force=force),
    )
    _check("R = h0(F) - 1", report.R, report.h0_F - 1)
    _check("h1(T_P) = dim M_v + 20", report.h1_TP, report.dim_Mv + 20)
    return report


def sigma_invariants(g: int, r: int, d: int, *, force: bool = False) -> RuledReport:
    """Invariants of the scroll over a curve ``C`` in ``|L|`` cut by ``F|_C``."""
    _guard(g, r, d, force)
    h0_restricted = (r + 3) * (g - 1)
    R = embedding_dim_R(g, r, d, force=force)
    h0_E = lm_h0(g, r, d)
    _check("h0(F|C) two forms", h0_restricted, (R + 1) - h0_E)
    degree_sigma = 2 * (r + 2) * (g - 1)
    if r != 1:
        return RuledReport(g, r, d, h0_restricted, degree_sigma)

    n, h = 6 * g - 6, 4 * g - 5
    _check("n = deg Sigma", n, degree_sigma)
    _check("h = h0(F|C) - 1", h, h0_restricted - 1)
    in_window = gonality(g) <= d <= g
    kd_bound, kd_strict = kd_dim_bound(g, d, force=force or not in_window)
    return RuledReport(
        g,
        r,
        d,
        h0_restricted,
        degree_sigma,
        n=n,
        h=h,
        hilb_dim_ruled=hilb_dim_ruled(n, g),
        kd_bound=kd_bound,
        kd_strict=kd_strict,
        unisecant_dim=unisecant_family_dim(g, d, force=True),
    )


@dataclass(frozen=True)
class MukaiClass:
    g: int
    dominant: bool
    gen_finite: str  # "yes" | "no" | "unstated"
    note: str


def mukai_classification(g: int) -> MukaiClass:
    """Whether the map from pairs (S, C) to curve moduli is dominant."""
    if g < 3:
        raise ValueError(f"genus must be at least 3, got {g}")
    ctx = K3Context(g)
    if g <= 9 or g == 11:
        dominant, note = True, "dominant"
    elif g == 10:
        dominant, note = False, "image is a hypersurface"
    else:
        dominant = ctx.dim_pairs_space >= ctx.dim_mg
        note = f"19+g = {ctx.dim_pairs_space} < 3g-3 = {ctx.dim_mg}"
    if g == 11 or g >= 13:
        gen_finite = "yes"
    elif g == 12:
        gen_finite = "no"
    else:
        gen_finite = "unstated"
    return MukaiClass(g, dominant, gen_finite, note)
