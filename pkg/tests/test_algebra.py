from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Rational

from super_o.algebra import (
    AlgebraDescriptor,
    bilinear,
    build_algebra,
    depth,
    eta,
    is_antidominant,
    is_dominant,
    is_integral,
    is_typical,
    omega,
    parse_algebra,
    parse_weight,
    pe_atypical_pairs,
    render_weight,
    rho,
    rho0,
)
from super_o.errors import InvalidParameterError, NotIntegralError, UnsupportedError
from super_o.weyl import orbit


def roots(*, algebra: AlgebraDescriptor, coords: list[tuple[int, ...]]) -> set[object]:
    return {algebra.weight(*c) for c in coords}


# ============================================================
# ROOT DATA
# ============================================================

def test_pe2_root_data(pe2: AlgebraDescriptor) -> None:
    assert set(pe2.odd_positive) == roots(algebra=pe2, coords=[(2, 0), (1, 1), (0, 2)])
    assert set(pe2.odd_negative) == roots(algebra=pe2, coords=[(-1, -1)])
    assert pe2.eta == pe2.weight(-1, -1)
    assert pe2.rho0 == pe2.weight(1, 0)
    assert (pe2.dim_g0, pe2.dim_h) == (4, 2)


def test_osp22_root_data(osp22: AlgebraDescriptor) -> None:
    assert set(osp22.even_positive) == roots(algebra=osp22, coords=[(0, 2)])
    assert set(osp22.odd_positive) == roots(algebra=osp22, coords=[(1, 1), (1, -1)])
    assert rho(osp22) == osp22.weight(-1, 1)
    assert osp22.name == "osp(2|2)"


def test_gl1_is_a_torus() -> None:
    a = build_algebra("gl", 1)
    assert a.even_positive == ()
    assert rho0(a) == a.weight(0)
    assert is_dominant(a, a.weight(5)) and is_antidominant(a, a.weight(5))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pe_odd_root_counts_and_eta(n: int) -> None:
    a = build_algebra("pe", n)
    assert len(a.odd_positive) == n * (n + 1) // 2
    assert len(a.odd_negative) == n * (n - 1) // 2
    assert len(a.odd_positive) - len(a.odd_negative) == n
    total = a.zero()
    for alpha in a.odd_negative:
        total = total + alpha
    assert total == eta(n)


def test_osp_root_counts() -> None:
    a = build_algebra("osp", 3)
    assert len(a.odd_positive) == 6
    assert len(a.even_positive) == 9
    assert rho(a) == a.weight(-3, 3, 2, 1)


def test_osp4_rho() -> None:
    assert rho(build_algebra("osp", 2)) == build_algebra("osp", 2).weight(-2, 2, 1)


@pytest.mark.parametrize(
    "args",
    [("pe", 0), ("gl", -1), ("osp", 0), ("glmn", 1, 2), ("glmn", 2, 2), ("glmn", 2, 0), ("sl", 2), ("pe", 2, 1)],
)
def test_build_rejects_bad_ranks(args: tuple[object, ...]) -> None:
    with pytest.raises(InvalidParameterError):
        build_algebra(*args)  # type: ignore[arg-type]


def test_equal_ranks_need_the_flag() -> None:
    a = build_algebra("glmn", 2, 2, allow_equal_ranks=True)
    assert a.name == "gl(2|2)"
    assert len(a.odd_positive) == 4


def test_depth_is_positive_on_positive_roots() -> None:
    for a in (build_algebra("gl", 3), build_algebra("pe", 3), build_algebra("osp", 2), build_algebra("glmn", 2, 1)):
        for beta in (*a.even_positive, *a.odd_positive):
            assert depth(a, beta) > 0, (a.name, beta.render())


# ============================================================
# FORMS AND DISTINGUISHED WEIGHTS
# ============================================================

def test_bilinear_examples(pe2: AlgebraDescriptor, osp22: AlgebraDescriptor) -> None:
    assert bilinear(pe2, pe2.weight(1, 0), pe2.weight(0, 1)) == 0
    assert bilinear(pe2, pe2.weight(2, 3), pe2.weight(1, 1)) == 5
    assert bilinear(osp22, osp22.weight(1, 0), osp22.weight(1, 0)) == 1
    assert bilinear(osp22, osp22.weight(0, 1), osp22.weight(0, 1)) == -1


_q = st.fractions(min_value=-10, max_value=10, max_denominator=4)


@given(st.lists(_q, min_size=9, max_size=9), st.integers(min_value=-3, max_value=3))
def test_bilinear_is_symmetric_and_linear(values: list[object], c: int) -> None:
    a = build_algebra("osp", 2)
    vals = [Rational(v.numerator, v.denominator) for v in values]  # type: ignore[attr-defined]
    lam, mu, nu = a.weight(*vals[:3]), a.weight(*vals[3:6]), a.weight(*vals[6:])
    assert bilinear(a, lam, mu) == bilinear(a, mu, lam)
    assert bilinear(a, lam + c * nu, mu) == bilinear(a, lam, mu) + c * bilinear(a, nu, mu)


def test_omega_eta() -> None:
    assert omega(2, 2).coeffs == (1, 1)
    assert omega(1, 3).coeffs == (1, 0, 0)
    assert eta(2).coeffs == (-1, -1)
    with pytest.raises(InvalidParameterError):
        omega(0, 2)
    with pytest.raises(InvalidParameterError):
        omega(3, 2)


def test_rho_undefined_for_pe(pe2: AlgebraDescriptor) -> None:
    with pytest.raises(UnsupportedError):
        rho(pe2)


# ============================================================
# DOMINANCE AND TYPICALITY
# ============================================================

def test_dominance_examples(gl2: AlgebraDescriptor, gl3: AlgebraDescriptor) -> None:
    assert is_dominant(gl2, gl2.weight(0, 0))
    assert is_antidominant(gl2, gl2.weight(-1, 1))
    assert not is_dominant(gl2, gl2.weight(-1, 1))
    assert is_dominant(gl3, gl3.zero()) and not is_antidominant(gl3, gl3.zero())


def test_dominance_needs_integrality(gl2: AlgebraDescriptor) -> None:
    lam = gl2.weight(Rational(1, 2), 0)
    assert not is_integral(gl2, lam)
    assert is_integral(gl2, gl2.weight(Rational(1, 2), Rational(1, 2)))
    with pytest.raises(NotIntegralError):
        is_dominant(gl2, lam)
    with pytest.raises(NotIntegralError):
        is_antidominant(gl2, lam)


@pytest.mark.parametrize("n", [2, 3])
def test_dominant_and_antidominant_iff_singleton_orbit(n: int) -> None:
    a = build_algebra("gl", n)
    for coords in product(range(-2, 3), repeat=n):
        lam = a.weight(*coords)
        both = is_dominant(a, lam) and is_antidominant(a, lam)
        assert both == (len(orbit(a, lam)) == 1), coords


def test_pe_typicality_examples(pe2: AlgebraDescriptor) -> None:
    assert not is_typical(pe2, pe2.weight(0, 0))
    assert pe_atypical_pairs(pe2.weight(0, 0)) == [(1, 2)]
    assert is_typical(pe2, pe2.weight(1, 0))


def test_osp_zero_is_atypical(osp22: AlgebraDescriptor) -> None:
    assert not is_typical(osp22, osp22.zero())
    assert is_typical(osp22, osp22.weight(3, 0))


def test_gl11_typicality(gl11: AlgebraDescriptor) -> None:
    # (λ+ρ, ε-δ) = λ_ε + λ_δ for gl(1|1)
    assert not is_typical(gl11, gl11.weight(1, -1))
    assert is_typical(gl11, gl11.weight(1, 0))


def test_typicality_undefined_for_gl(gl2: AlgebraDescriptor) -> None:
    with pytest.raises(UnsupportedError):
        is_typical(gl2, gl2.zero())


@given(st.lists(st.integers(min_value=-4, max_value=4), min_size=3, max_size=3), st.integers(-5, 5))
def test_pe_typicality_is_shift_invariant(coords: list[int], c: int) -> None:
    a = build_algebra("pe", 3)
    lam = a.weight(*coords)
    assert is_typical(a, lam) == is_typical(a, lam + a.weight(c, c, c))


# ============================================================
# LITERALS
# ============================================================

@pytest.mark.parametrize(
    "text, name",
    [("pe(3)", "pe(3)"), ("gl(2)", "gl(2)"), ("osp(2|4)", "osp(2|4)"), ("gl(2|1)", "gl(2|1)"), ("gl(1|1)", "gl(1|1)")],
)
def test_parse_algebra(text: str, name: str) -> None:
    assert parse_algebra(text).name == name


@pytest.mark.parametrize("text", ["sl(2)", "osp(2|3)", "osp(3|2)", "pe(2|1)", "pe()", "gl(1|2)"])
def test_parse_algebra_rejects(text: str) -> None:
    with pytest.raises(InvalidParameterError):
        parse_algebra(text)


def test_parse_weight_with_prefix() -> None:
    lam = parse_weight("pe(3): 2,0,-1")
    assert lam.coeffs == (2, 0, -1)
    nu = parse_weight("gl(2|1): 1,0 | 3")
    assert nu.delta_part == (3,)
    assert parse_weight("osp(2|4): 1 | 2,0").eps_part == (1,)


def test_parse_weight_round_trip(pe3: AlgebraDescriptor) -> None:
    lam = pe3.weight(2, 0, -1)
    assert render_weight(pe3, lam) == "pe(3): 2,0,-1"
    assert parse_weight(render_weight(pe3, lam)) == lam


def test_parse_weight_needs_matching_algebra(pe2: AlgebraDescriptor, osp22: AlgebraDescriptor) -> None:
    with pytest.raises(InvalidParameterError):
        parse_weight("1,0")
    with pytest.raises(InvalidParameterError):
        parse_weight("osp(2|2): 1 | 0", pe2)
    assert parse_weight("0 | 1", osp22) == osp22.weight(0, 1)
