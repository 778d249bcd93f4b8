from __future__ import annotations

import pytest

from super_o.algebra import AlgebraDescriptor, build_algebra, omega
from super_o.config import Config
from super_o.errors import (
    InvalidParameterError,
    OutOfScopeError,
    PreconditionError,
    UnsupportedRankError,
)
from super_o.labels import SimpleMultiset
from super_o.socle import (
    dominant_point,
    ext1_simple_verma_pe,
    has_simple_socle_quotient,
    lambda_plus_pe,
    pe2_socle_closed_form,
    socle_cokernel_even,
    socle_cokernel_pe,
    socle_cokernel_pe_oracle,
    socle_verma,
    translate_to_wall,
)
from super_o.weyl import dot, identity, longest_element, parse_element, simple_reflection


def single(*, algebra: AlgebraDescriptor, coords: tuple[int, ...]) -> SimpleMultiset:
    return SimpleMultiset.single(algebra.weight(*coords))


# ============================================================
# λ⁺
# ============================================================

def test_lambda_plus_pe2(pe2: AlgebraDescriptor) -> None:
    assert lambda_plus_pe(2, pe2.weight(1, 1)) == pe2.weight(1, 1)
    assert lambda_plus_pe(2, pe2.weight(2, 0)) == pe2.weight(2, 0) + omega(2, 2)
    assert lambda_plus_pe(1, build_algebra("pe", 1).weight(3)) == build_algebra("pe", 1).weight(3)


def test_lambda_plus_rank_limit() -> None:
    with pytest.raises(UnsupportedRankError):
        lambda_plus_pe(4, build_algebra("pe", 4).zero())


# ============================================================
# pe(2) COKERNEL SOCLES
# ============================================================

@pytest.mark.parametrize(
    "top, sub, expected",
    [
        ((1, 0), (-1, 2), (1, 0)),
        ((0, 0), (-1, 1), (-1, -1)),
        ((2, -1), (-2, 3), (2, -1)),
        ((1, 1), (0, 2), (0, 0)),
    ],
)
def test_pe2_closed_form(pe2: AlgebraDescriptor, top: tuple[int, int], sub: tuple[int, int],
                         expected: tuple[int, int]) -> None:
    assert pe2_socle_closed_form(pe2.weight(*top), pe2.weight(*sub)) == single(algebra=pe2, coords=expected)


def test_pe2_closed_form_trivial_and_preconditions(pe2: AlgebraDescriptor) -> None:
    top = pe2.weight(1, 0)
    assert pe2_socle_closed_form(top, top) == SimpleMultiset.empty()
    with pytest.raises(PreconditionError):
        pe2_socle_closed_form(pe2.weight(-1, 2), top)
    with pytest.raises(PreconditionError):
        pe2_socle_closed_form(top, pe2.zero())


@pytest.mark.parametrize("top, sub", [((1, 0), (-1, 2)), ((0, 0), (-1, 1)), ((1, 1), (0, 2))])
def test_pe2_translation_formula_matches_closed_form(pe2: AlgebraDescriptor, top: tuple[int, int],
                                                     sub: tuple[int, int]) -> None:
    t, s = pe2.weight(*top), pe2.weight(*sub)
    assert socle_cokernel_pe(2, t, s) == pe2_socle_closed_form(t, s)


def test_pe2_translation_formula_matches_oracle(pe2: AlgebraDescriptor) -> None:
    top, sub = pe2.weight(1, 0), pe2.weight(-1, 2)
    assert socle_cokernel_pe_oracle(2, top, sub) == socle_cokernel_pe(2, top, sub)


def test_pe_socle_preconditions(pe2: AlgebraDescriptor) -> None:
    assert socle_cokernel_pe(2, pe2.zero(), pe2.zero()) == SimpleMultiset.empty()
    with pytest.raises(PreconditionError):
        socle_cokernel_pe(2, pe2.weight(1, 0), pe2.zero())
    with pytest.raises(UnsupportedRankError):
        socle_cokernel_pe_oracle(3, build_algebra("pe", 3).zero(), build_algebra("pe", 3).zero())


# ============================================================
# Ext¹
# ============================================================

def test_ext1_examples(pe2: AlgebraDescriptor) -> None:
    sub = pe2.weight(-1, 2)
    assert ext1_simple_verma_pe(2, pe2.weight(1, 0), sub) == 1
    assert ext1_simple_verma_pe(2, pe2.zero(), sub) == 0
    assert ext1_simple_verma_pe(2, pe2.weight(-1, -1), pe2.weight(-1, 1)) == 1
    assert ext1_simple_verma_pe(2, pe2.zero(), pe2.weight(-1, 1)) == 0


def test_ext1_dominant_verma_is_zero(pe2: AlgebraDescriptor) -> None:
    assert ext1_simple_verma_pe(2, pe2.weight(1, 0), pe2.weight(1, 0)) == 0


def test_ext1_refuses_antidominant_simple(pe2: AlgebraDescriptor) -> None:
    with pytest.raises(OutOfScopeError):
        ext1_simple_verma_pe(2, pe2.weight(-1, 2), pe2.weight(-1, 2))


# ============================================================
# VERMA SOCLES AND BIGRASSMANNIANS
# ============================================================

def test_socle_of_verma(pe2: AlgebraDescriptor, gl2: AlgebraDescriptor) -> None:
    assert socle_verma(pe2, pe2.weight(1, 0)) == single(algebra=pe2, coords=(-1, 2))
    assert dominant_point(pe2, pe2.weight(-1, 2)) == pe2.weight(1, 0)
    with pytest.raises(InvalidParameterError):
        socle_verma(gl2, gl2.zero())


def test_simple_socle_quotient_criterion() -> None:
    assert has_simple_socle_quotient(parse_element("A", "231"))
    assert not has_simple_socle_quotient(longest_element("A", 3))
    with pytest.raises(InvalidParameterError):
        has_simple_socle_quotient(longest_element("C", 2))


# ============================================================
# EVEN SOCLES AND WALL TRANSLATION
# ============================================================

def test_even_regular_socle(gl2: AlgebraDescriptor) -> None:
    s = simple_reflection("A", 2, 1)
    socle = socle_cokernel_even(gl2, identity("A", 2), s, gl2.zero())
    assert socle == single(algebra=gl2, coords=(0, 0))


def test_translation_to_wall(gl3: AlgebraDescriptor) -> None:
    mu = gl3.weight(0, 0, 1)
    s2 = simple_reflection("A", 3, 2)
    assert translate_to_wall(gl3, SimpleMultiset.single(gl3.zero()), mu) == SimpleMultiset.empty()
    moved = translate_to_wall(gl3, SimpleMultiset.single(dot(gl3, s2, gl3.zero())), mu)
    assert moved == SimpleMultiset.single(mu)
    with pytest.raises(PreconditionError):
        translate_to_wall(gl3, SimpleMultiset.empty(), gl3.weight(-1, 1, 0))
    with pytest.raises(InvalidParameterError):
        translate_to_wall(gl3, SimpleMultiset.single(gl3.weight(1, 0, 0)), mu)


def test_same_coset_gives_zero_socle(gl3: AlgebraDescriptor) -> None:
    mu = gl3.weight(0, 0, 1)
    s2 = simple_reflection("A", 3, 2)
    assert socle_cokernel_even(gl3, identity("A", 3), s2, mu) == SimpleMultiset.empty()


def test_even_socle_preconditions(gl2: AlgebraDescriptor, pe2: AlgebraDescriptor) -> None:
    e, s = identity("A", 2), simple_reflection("A", 2, 1)
    with pytest.raises(PreconditionError):
        socle_cokernel_even(gl2, e, e, gl2.zero())
    with pytest.raises(PreconditionError):
        socle_cokernel_even(gl2, s, e, gl2.zero())
    with pytest.raises(PreconditionError):
        socle_cokernel_even(gl2, e, s, gl2.weight(-1, 1))
    with pytest.raises(InvalidParameterError):
        socle_cokernel_even(pe2, e, s, pe2.zero())
    gl5 = build_algebra("gl", 5)
    with pytest.raises(UnsupportedRankError):
        socle_cokernel_even(gl5, identity("A", 5), simple_reflection("A", 5, 1), gl5.zero())


@pytest.mark.long
def test_wall_translation_agrees_with_direct_computation(gl3: AlgebraDescriptor) -> None:
    mu = gl3.weight(0, 0, 1)
    socle = socle_cokernel_even(gl3, identity("A", 3), longest_element("A", 3), mu, verify=True,
                                config=Config(long_tests=True))
    assert socle.total >= 1
