from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from k3scroll.brill_noether import InadmissibleError, lm_bundle, lm_twist, rho
from k3scroll.exact_chow import K3Context
from k3scroll.sheaf_calc import (
    SheafData,
    check_cohomology,
    dim_moduli,
    expected_dim_raw,
    mukai_vector,
    riemann_roch_k3,
    twist_by_L,
)


def chern_root_twist_oracle(rank: int, n: int):
    """c2 of a twist by n*ell, expanded from Chern roots x_i -> x_i + n*ell."""
    xs = sympy.symbols(f"x0:{rank}")
    ell = sympy.Symbol("ell")
    e1 = sum(xs)
    e2 = sum(xs[i] * xs[j] for i in range(rank) for j in range(i + 1, rank))
    shifted = [x + n * ell for x in xs]
    e2_twist = sum(
        shifted[i] * shifted[j] for i in range(rank) for j in range(i + 1, rank)
    )
    return sympy.expand(e2_twist), sympy.expand(
        e2 + (rank - 1) * n * ell * e1 + comb(rank, 2) * n * n * ell**2
    )


@pytest.mark.parametrize("rank", [1, 2, 3, 5])
@pytest.mark.parametrize("n", [0, 1, 3])
def test_twist_formula_from_chern_roots(rank, n):
    direct, closed = chern_root_twist_oracle(rank, n)
    assert sympy.simplify(direct - closed) == 0


def test_riemann_roch_examples():
    assert riemann_roch_k3(K3Context(5), SheafData(1, 0, 0)) == 2
    assert riemann_roch_k3(K3Context(8), SheafData(1, 1, 0)) == 9
    assert riemann_roch_k3(K3Context(8), SheafData(2, 3, 33)) == 34


def test_twist_examples():
    ctx8 = K3Context(8)
    e = SheafData(2, 1, 5)
    assert twist_by_L(ctx8, e, 0) == e
    assert twist_by_L(ctx8, e, 1) == SheafData(2, 3, 33)
    assert twist_by_L(K3Context(5), SheafData(3, 1, 6), 1) == SheafData(3, 4, 46)


def test_twist_drops_cohomology():
    e = lm_bundle(8, 1, 5)
    assert not twist_by_L(K3Context(8), e, 1).has_cohomology


@given(
    st.integers(3, 40),
    st.integers(1, 6),
    st.integers(-10, 10),
    st.integers(-100, 100),
    st.integers(0, 5),
    st.integers(0, 5),
)
def test_twists_compose(g, rank, c1, c2, m, n):
    ctx = K3Context(g)
    s = SheafData(rank, c1, c2)
    assert twist_by_L(ctx, twist_by_L(ctx, s, m), n) == twist_by_L(ctx, s, m + n)


def test_mukai_examples():
    ctx = K3Context(8)
    assert mukai_vector(ctx, SheafData(1, 0, 0)).as_tuple() == (1, 0, 1)
    assert mukai_vector(ctx, SheafData(2, 1, 5)).as_tuple() == (2, 1, 4)
    assert mukai_vector(ctx, SheafData(2, 3, 33)).as_tuple() == (2, 3, 32)


def test_mukai_half_integral_c1_term():
    v = mukai_vector(K3Context(3), SheafData(1, 1, 0))
    assert v.s == Fraction(4, 2) + 1


def test_expected_dim_examples():
    assert expected_dim_raw(K3Context(8), SheafData(2, 1, 5)) == 0
    assert expected_dim_raw(K3Context(7), SheafData(2, 1, 5)) == 2
    assert expected_dim_raw(K3Context(8), SheafData(1, 0, 0)) == 0


def test_dim_moduli():
    assert dim_moduli(8, 1, 5) == 0
    assert dim_moduli(7, 1, 5) == 2
    assert dim_moduli(11, 2, 10) == 4
    with pytest.raises(InadmissibleError):
        dim_moduli(8, 1, 4)


def test_cohomology_mismatch_detected():
    with pytest.raises(ValueError):
        check_cohomology(K3Context(8), SheafData(2, 1, 5, h0=7, h1=0, h2=0))


def test_negative_cohomology_rejected():
    with pytest.raises(ValueError):
        SheafData(2, 1, 5, h0=-1)


def test_grid_identities(full_grid):
    for g, r, d in full_grid:
        ctx = K3Context(g)
        e, f = lm_bundle(g, r, d), lm_twist(g, r, d)
        assert riemann_roch_k3(ctx, f) == 3 * g - 3 - d + (r + 1) * (g + 1)
        assert expected_dim_raw(ctx, e) == 2 * rho(g, r, d)
        assert mukai_vector(ctx, e).s == g + r - d
        assert mukai_vector(ctx, f).s == riemann_roch_k3(ctx, f) - f.rank
