"""Brill-Noether numbers, gonality and Lazarsfeld-Mukai bundles.

"Admissible" here is purely numerical: ``rho(g, r, d) >= 0`` and
``h^1(A) = g - d + r >= 1``.  For ``r >= 2`` the existence of a globally
generated series with globally generated residual is not decided by these
two conditions alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact_chow import K3Context
from .sheaf_calc import SheafData, check_cohomology, twist_by_L


class InadmissibleError(ValueError):
    """A ``(g, r, d)`` triple fails the numerical admissibility conditions."""

    def __init__(self, g: int, r: int, d: int, reasons: tuple[str, ...]):
        self.triple = (g, r, d)
        self.reasons = reasons
        super().__init__(f"inadmissible (g,r,d) = ({g},{r},{d}): " + "; ".join(reasons))


def rho(g: int, r: int, d: int) -> int:
    return g - (r + 1) * (g - d + r)


def gonality(g: int) -> int:
    if g < 3:
        raise ValueError(f"gonality is only tabulated for g >= 3, got {g}")
    return (g + 2) // 2 if g % 2 == 0 else (g + 3) // 2


@dataclass(frozen=True)
class BNTriple:
    g: int
    r: int
    d: int
    rho: int = field(init=False)
    h1_of_A: int = field(init=False)

    def __post_init__(self) -> None:
        if self.g < 3:
            raise ValueError(f"genus must be at least 3, got {self.g}")
        object.__setattr__(self, "rho", rho(self.g, self.r, self.d))
        object.__setattr__(self, "h1_of_A", self.g - self.d + self.r)


@dataclass(frozen=True)
class Admissibility:
    g: int
    r: int
    d: int
    reasons: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.reasons

    def __bool__(self) -> bool:
        return self.ok


def admissible(g: int, r: int, d: int) -> Admissibility:
    reasons = []
    if g < 3:
        reasons.append("g below 3")
    if r < 1:
        reasons.append("r below 1")
    if d < 1:
        reasons.append("d below 1")
    value = rho(g, r, d)
    if value < 0:
        reasons.append(f"rho = {value}")
    if g - d + r < 1:
        reasons.append("d exceeds g+r-1")
    return Admissibility(g, r, d, tuple(reasons))


def require_admissible(g: int, r: int, d: int) -> None:
    verdict = admissible(g, r, d)
    if not verdict:
        raise InadmissibleError(g, r, d, verdict.reasons)


def lm_h0(g: int, r: int, d: int) -> int:
    """``h^0(E) = h^0(A) + h^1(A)``."""
    return 2 * r + g - d + 1


def lm_twist_h0(g: int, r: int, d: int) -> int:
    return 3 * g - 3 - d + (r + 1) * (g + 1)


def _with_cohomology(s: SheafData, h0: int) -> SheafData:
    # forced evaluation can push h0 negative; keep Chern data only then
    if h0 < 0:
        return s.without_cohomology()
    return SheafData(s.rank, s.c1_mult, s.c2_pts, h0=h0, h1=0, h2=0)


def lm_bundle(g: int, r: int, d: int, *, force: bool = False) -> SheafData:
    """The Lazarsfeld-Mukai bundle E of a ``g^r_d`` on a curve in ``|L|``.

    Higher cohomology of E vanishes, so only ``h^0`` carries information.
    """
    if not force:
        require_admissible(g, r, d)
    e = _with_cohomology(SheafData(rank=r + 1, c1_mult=1, c2_pts=d), lm_h0(g, r, d))
    if not force:
        check_cohomology(K3Context(g), e)
    return e


def lm_twist(g: int, r: int, d: int, *, force: bool = False) -> SheafData:
    """``F = E (x) L`` with its cohomology attached."""
    ctx = K3Context(g)
    f = twist_by_L(ctx, lm_bundle(g, r, d, force=force), 1)
    f = _with_cohomology(f, lm_twist_h0(g, r, d))
    if not force:
        check_cohomology(ctx, f)
    return f


def enumerate_admissible(g: int, r_max: int) -> list[BNTriple]:
    if g < 3:
        raise ValueError(f"genus must be at least 3, got {g}")
    if r_max < 1:
        raise ValueError(f"r_max must be at least 1, got {r_max}")
    out = []
    for r in range(1, r_max + 1):
        # h^1 >= 1 bounds d above by g + r - 1
        for d in range(1, g + r):
            if admissible(g, r, d):
                out.append(BNTriple(g, r, d))
    return out
