from __future__ import annotations

from itertools import product

import pytest
from sympy import Rational

from super_o.algebra import AlgebraDescriptor, build_algebra
from super_o.errors import InvalidParameterError, UnsupportedError
from super_o.weyl import (
    ParabolicSubgroup,
    borel,
    bruhat_dot,
    bruhat_interval,
    bruhat_leq,
    coset_rep,
    coset_reps,
    descents,
    dot,
    dual_parabolic,
    elements,
    from_word,
    full_group,
    identity,
    in_parabolic_cone,
    integral_weyl_group,
    is_bigrassmannian,
    length,
    longest_element,
    longest_in,
    negate_longest,
    orbit,
    orbit_extreme,
    parse_element,
    parse_levi,
    pe_block_closure,
    pe_block_equivalent,
    reduced_word,
    reflection,
    simple_reflection,
    stabilizer,
    weyl_group,
)


def perm(text: str) -> object:
    return parse_element("A", text)


def inversions(window: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(window)) for j in range(i + 1, len(window)) if window[i] > window[j])


# ============================================================
# ELEMENTS
# ============================================================

def test_group_orders() -> None:
    assert len(elements(full_group("A", 3))) == 6
    assert len(elements(full_group("A", 4))) == 24
    assert len(elements(full_group("C", 2))) == 8
    assert length(longest_element("C", 2)) == 4
    assert longest_in(full_group("C", 2)) == longest_element("C", 2)


def test_words_and_products() -> None:
    w = from_word("A", 3, [1, 2])
    assert w.window == (2, 3, 1)
    assert length(w) == 2
    assert reduced_word(w) == (1, 2)
    assert (w * w.inverse()) == identity("A", 3)


def test_length_counts_inversions_in_type_a() -> None:
    for w in elements(full_group("A", 4)):
        assert length(w) == inversions(w.window)
        assert from_word("A", 4, reduced_word(w)) == w
        assert len(reduced_word(w)) == length(w)


def test_type_c_reduced_words() -> None:
    for w in elements(full_group("C", 3)):
        assert from_word("C", 3, reduced_word(w)) == w


@pytest.mark.parametrize("text", ["22", "-1,2", "124", "x1"])
def test_parse_element_rejects(text: str) -> None:
    with pytest.raises(InvalidParameterError):
        parse_element("A", text)


def test_parse_signed_element() -> None:
    w = parse_element("C", "2,-1")
    assert w(1) == 2 and w(2) == -1
    assert str(w) == "2,-1"


def test_simple_reflection_range() -> None:
    assert simple_reflection("C", 2, 2).window == (1, -2)
    with pytest.raises(InvalidParameterError):
        simple_reflection("A", 3, 3)


# ============================================================
# DESCENTS AND BIGRASSMANNIAN ELEMENTS
# ============================================================

def test_descents() -> None:
    w = perm("231")
    assert descents(w, "right") == frozenset({2})
    assert descents(w, "left") == frozenset({1})


@pytest.mark.parametrize("n, count", [(3, 4), (4, 10)])
def test_bigrassmannian_count(n: int, count: int) -> None:
    assert sum(is_bigrassmannian(w) for w in elements(full_group("A", n))) == count


def test_bigrassmannian_examples() -> None:
    assert is_bigrassmannian(perm("213"))
    assert is_bigrassmannian(perm("231"))
    assert not is_bigrassmannian(perm("321"))
    assert not is_bigrassmannian(perm("123"))
    with pytest.raises(UnsupportedError):
        is_bigrassmannian(longest_element("C", 2))


# ============================================================
# BRUHAT ORDER
# ============================================================

@pytest.mark.parametrize("n", [3, 4])
def test_bruhat_methods_agree(n: int) -> None:
    group = elements(full_group("A", n))
    for x, y in product(group, repeat=2):
        expected = bruhat_leq(x, y)
        assert bruhat_leq(x, y, method="rank") == expected, (x, y)
        assert bruhat_leq(x, y, method="cover") == expected, (x, y)


def test_bruhat_type_c_cover_agrees() -> None:
    group = elements(full_group("C", 2))
    for x, y in product(group, repeat=2):
        assert bruhat_leq(x, y, method="cover") == bruhat_leq(x, y)


def test_bruhat_basics() -> None:
    e, w0 = identity("A", 3), longest_element("A", 3)
    assert bruhat_leq(e, w0) and not bruhat_leq(w0, e)
    assert not bruhat_leq(perm("213"), perm("132"))
    with pytest.raises(InvalidParameterError):
        bruhat_leq(e, w0, method="tableau")
    with pytest.raises(UnsupportedError):
        bruhat_leq(identity("C", 2), longest_element("C", 2), method="rank")


def test_bruhat_interval() -> None:
    assert len(bruhat_interval(identity("A", 3), longest_element("A", 3))) == 6
    assert bruhat_interval(perm("213"), perm("231")) == [perm("213"), perm("231")]
    assert bruhat_interval(perm("231"), perm("213")) == []


def test_bruhat_dot_is_dot_text() -> None:
    text = bruhat_dot("A", 3)
    assert text.startswith('digraph "bruhat_A3"')
    assert text.count("->") == 8


# ============================================================
# PARABOLICS AND COSETS
# ============================================================

def test_coset_representatives() -> None:
    levi = ParabolicSubgroup("A", 3, frozenset({1}))
    assert coset_rep(longest_element("A", 3), levi) == perm("231")
    assert coset_rep(identity("A", 3), levi, "longest") == perm("213")
    reps = coset_reps(full_group("A", 3), levi)
    assert len(reps) == 3
    assert longest_in(levi) == perm("213")


def test_parse_levi(gl3: AlgebraDescriptor) -> None:
    assert parse_levi(gl3, "") == borel("A", 3)
    assert parse_levi(gl3, "s1,s2") == full_group("A", 3)
    assert parse_levi(gl3, "2").render() == "s2"
    with pytest.raises(InvalidParameterError):
        parse_levi(gl3, "s3")
    with pytest.raises(InvalidParameterError):
        parse_levi(build_algebra("glmn", 2, 1), "s2")


def test_weyl_group_of_glmn_is_block_subgroup() -> None:
    a = build_algebra("glmn", 2, 2, allow_equal_ranks=True)
    assert weyl_group(a).generators == frozenset({1, 3})
    assert len(elements(weyl_group(a))) == 4


# ============================================================
# DOT ACTION
# ============================================================

def test_gl2_dot_action(gl2: AlgebraDescriptor) -> None:
    s = simple_reflection("A", 2, 1)
    assert dot(gl2, s, gl2.zero()) == gl2.weight(-1, 1)
    assert orbit(gl2, gl2.zero()) == [gl2.weight(-1, 1), gl2.zero()]
    assert orbit_extreme(gl2, gl2.weight(-1, 1), "dominant") == (gl2.zero(), s)
    assert orbit_extreme(gl2, gl2.zero(), "antidominant") == (gl2.weight(-1, 1), s)


def test_pe2_orbits(pe2: AlgebraDescriptor) -> None:
    for a, b in product(range(-3, 4), repeat=2):
        lam = pe2.weight(a, b)
        assert set(orbit(pe2, lam)) == {lam, pe2.weight(b - 1, a + 1)}


def test_osp_dot_action(osp22: AlgebraDescriptor) -> None:
    assert orbit(osp22, osp22.zero()) == [osp22.weight(0, -2), osp22.zero()]
    assert reflection(osp22, osp22.weight(0, 2)).window == (-1,)


def test_stabilizer_and_reflection(gl3: AlgebraDescriptor) -> None:
    assert stabilizer(gl3, gl3.weight(0, 0, 1)).generators == frozenset({2})
    assert stabilizer(gl3, gl3.zero()).generators == frozenset()
    assert reflection(gl3, gl3.weight(1, 0, -1)) == perm("321")


def test_glmn_dot_action_preserves_blocks() -> None:
    a = build_algebra("glmn", 2, 1)
    assert len(orbit(a, a.zero())) == 2
    with pytest.raises(InvalidParameterError):
        dot(a, perm("132"), a.zero())


def test_parabolic_cone(gl3: AlgebraDescriptor) -> None:
    levi = ParabolicSubgroup("A", 3, frozenset({1}))
    assert in_parabolic_cone(gl3, gl3.weight(1, 1, 0), levi)
    assert not in_parabolic_cone(gl3, gl3.weight(0, 1, 0), levi)
    assert not in_parabolic_cone(gl3, gl3.weight(Rational(1, 2), 0, 0), levi)
    assert in_parabolic_cone(gl3, gl3.weight(0, 1, 0), borel("A", 3))


def test_negate_longest_and_dual_parabolic(gl3: AlgebraDescriptor) -> None:
    assert negate_longest(gl3, gl3.weight(1, 2, 3)) == gl3.weight(-3, -2, -1)
    assert dual_parabolic(gl3, ParabolicSubgroup("A", 3, frozenset({1}))).generators == frozenset({2})
    a = build_algebra("glmn", 2, 1)
    assert negate_longest(a, a.weight(1, 2, 5)) == a.weight(-2, -1, -5)
    square = build_algebra("glmn", 2, 2, allow_equal_ranks=True)
    assert dual_parabolic(square, weyl_group(square)) == weyl_group(square)
    osp = build_algebra("osp", 2)
    assert negate_longest(osp, osp.weight(1, 2, 3)) == osp.weight(-1, 2, 3)


# ============================================================
# INTEGRAL WEYL GROUPS AND pe BLOCKS
# ============================================================

def test_integral_weyl_group(pe2: AlgebraDescriptor) -> None:
    assert integral_weyl_group(pe2, pe2.zero()).longest_length == 1
    assert integral_weyl_group(pe2, pe2.weight(Rational(1, 2), 0)).longest_length == 0
    with pytest.raises(UnsupportedError):
        integral_weyl_group(build_algebra("osp", 1), build_algebra("osp", 1).zero())


def test_pe_block_relation_examples(pe2: AlgebraDescriptor) -> None:
    lam = pe2.zero()
    assert pe_block_equivalent(pe2, lam, pe2.weight(2, 0))
    assert pe_block_equivalent(pe2, lam, pe2.weight(-1, 1))
    assert not pe_block_equivalent(pe2, lam, pe2.weight(1, 0))
    with pytest.raises(InvalidParameterError):
        pe_block_equivalent(build_algebra("gl", 2), build_algebra("gl", 2).zero(), build_algebra("gl", 2).zero())


def closure_disagreements(*, a: AlgebraDescriptor, box: int, inner: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    components = pe_block_closure(a, box)
    nodes = list(product(range(-inner, inner + 1), repeat=a.n))
    return [
        (u, v) for u, v in product(nodes, repeat=2)
        if (components[u] == components[v]) != pe_block_equivalent(a, a.weight(*u), a.weight(*v))
    ]


def test_pe2_block_closure_matches_normal_form(pe2: AlgebraDescriptor) -> None:
    assert closure_disagreements(a=pe2, box=5, inner=3) == []


@pytest.mark.long
def test_pe3_block_closure_matches_normal_form(pe3: AlgebraDescriptor) -> None:
    assert closure_disagreements(a=pe3, box=4, inner=3) == []
