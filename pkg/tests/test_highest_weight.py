from __future__ import annotations

import pytest

from super_o.algebra import AlgebraDescriptor, build_algebra
from super_o.errors import BandViolationError, PreconditionError, UnsupportedRankError
from super_o.labels import SimpleMultiset
from super_o.oracle.highest_weight import (
    below,
    br_highest_weight_of_simple_pe,
    candidate_band,
    candidate_weights,
    composition_factors,
    even_verma_simple,
    hom_dim_oracle,
    kac_is_simple,
    kostant_partition,
    singular_layers,
    socle_constituents,
    verma_embedding_ranks,
    verma_weight_dim,
)
from super_o.oracle.module import as_wt, build_kac, build_verma
from super_o.oracle.realization import realize
from super_o.socle import lambda_plus_pe

GL3_ROOTS = [(1, -1, 0), (0, 1, -1), (1, 0, -1)]
GL3_HEIGHTS = (3, 2, 1)


# ============================================================
# PARTITIONS AND MULTIPLICITIES
# ============================================================

@pytest.mark.parametrize("beta, count", [((1, 0, -1), 2), ((2, 0, -2), 3), ((1, -1, 0), 1), ((0, 0, 0), 1),
                                         ((-1, 1, 0), 0), ((1, 1, -2), 2)])
def test_kostant_partition_gl3(beta: tuple[int, int, int], count: int) -> None:
    assert kostant_partition(beta, GL3_ROOTS, GL3_HEIGHTS) == count


def test_partition_with_odd_roots() -> None:
    # pe(2): even step (1,-1) with repetition, odd step (1,1) at most once
    assert kostant_partition((2, 0), [(1, -1)], (2, 1), odd=[(1, 1)]) == 1
    assert kostant_partition((2, 2), [(1, -1)], (2, 1), odd=[(1, 1)]) == 0


def test_verma_weight_dims_match_module(pe2: AlgebraDescriptor) -> None:
    lam = pe2.weight(1, 0)
    verma = build_verma(pe2, lam, 5)
    for nu in verma.weights():
        assert verma.dim(nu) == verma_weight_dim(pe2, as_wt(lam), nu)
    assert verma_weight_dim(pe2, as_wt(lam), as_wt(pe2.weight(0, -1))) == 1
    assert verma_weight_dim(pe2, as_wt(lam), as_wt(pe2.weight(2, 0))) == 0


def test_below(pe2: AlgebraDescriptor) -> None:
    rz = realize(pe2)
    top = as_wt(pe2.weight(1, 0))
    assert below(rz, as_wt(pe2.weight(0, -1)), top)
    assert below(rz, top, top)
    assert not below(rz, as_wt(pe2.weight(2, 0)), top)
    assert not below(rz, as_wt(pe2.weight("1/2", 0)), top)


# ============================================================
# CANDIDATES AND HOM DIMENSIONS
# ============================================================

def test_even_candidates(gl2: AlgebraDescriptor) -> None:
    assert candidate_weights(gl2, as_wt(gl2.zero())) == [as_wt(gl2.zero()), as_wt(gl2.weight(-1, 1))]
    assert candidate_band(gl2, as_wt(gl2.zero())) == 1


def test_hom_oracle_gl(gl2: AlgebraDescriptor, gl3: AlgebraDescriptor) -> None:
    assert hom_dim_oracle(gl2, gl2.weight(-1, 1), gl2.zero()) == 1
    assert hom_dim_oracle(gl2, gl2.zero(), gl2.weight(-1, 1)) == 0
    assert hom_dim_oracle(gl3, gl3.weight(-1, 1, 0), gl3.zero()) == 1
    assert hom_dim_oracle(gl3, gl3.weight(-2, 0, 2), gl3.zero()) == 1
    with pytest.raises(BandViolationError):
        hom_dim_oracle(gl2, gl2.weight(-1, 1), gl2.zero(), depth=0)


def test_hom_oracle_pe(pe2: AlgebraDescriptor) -> None:
    assert hom_dim_oracle(pe2, pe2.weight(-1, 2), pe2.weight(1, 0)) == 1
    assert hom_dim_oracle(pe2, pe2.weight(1, 0), pe2.weight(-1, 2)) == 0


def test_pe_embedding_is_even(pe2: AlgebraDescriptor) -> None:
    top, sub = pe2.weight(1, 0), pe2.weight(-1, 2)
    rz = realize(pe2)
    depth = int(sum((a - b) * f for a, b, f in zip(as_wt(top), as_wt(sub), rz.heights)))
    assert singular_layers(build_verma(pe2, top, depth), as_wt(sub)) == [0]
    ranks = verma_embedding_ranks(pe2, sub, top, 2)
    assert ranks and all(rank == dim for _, rank, dim in ranks)
    with pytest.raises(PreconditionError):
        verma_embedding_ranks(pe2, top, sub, 1)


# ============================================================
# SOCLES
# ============================================================

def test_socle_of_dominant_gl2_verma(gl2: AlgebraDescriptor) -> None:
    verma = build_verma(gl2, gl2.zero(), candidate_band(gl2, as_wt(gl2.zero())))
    assert socle_constituents(verma) == SimpleMultiset.single(gl2.weight(-1, 1))


def test_socle_needs_the_band(gl2: AlgebraDescriptor) -> None:
    with pytest.raises(BandViolationError):
        socle_constituents(build_verma(gl2, gl2.zero(), 0))


# ============================================================
# KAC MODULES
# ============================================================

def test_gl11_kac_simplicity(gl11: AlgebraDescriptor) -> None:
    assert kac_is_simple(gl11, gl11.weight(1, 0))
    assert not kac_is_simple(gl11, gl11.weight(1, -1))


def test_osp_kac_simplicity(osp22: AlgebraDescriptor) -> None:
    assert not kac_is_simple(osp22, osp22.zero())
    assert kac_is_simple(osp22, osp22.weight(3, 0))


def test_kac_rank_limit(pe2: AlgebraDescriptor) -> None:
    with pytest.raises(UnsupportedRankError):
        kac_is_simple(pe2, pe2.zero())


def test_gl11_composition_factors(gl11: AlgebraDescriptor) -> None:
    factors = composition_factors(build_kac(gl11, gl11.weight(1, -1)))
    assert factors == SimpleMultiset.of([(gl11.weight(1, -1), 1), (gl11.zero(), 1)])
    assert composition_factors(build_kac(gl11, gl11.weight(1, 0))) == SimpleMultiset.single(gl11.weight(1, 0))


def test_even_verma_simplicity(gl2: AlgebraDescriptor) -> None:
    assert even_verma_simple(gl2, gl2.weight(-1, 1))
    assert not even_verma_simple(gl2, gl2.zero())
    assert even_verma_simple(gl2, gl2.weight("1/2", 0))


# ============================================================
# b^r-HIGHEST WEIGHTS
# ============================================================

@pytest.mark.parametrize("coords", [(1, 1), (2, 0)])
def test_br_highest_weight_inverts_lambda_plus(pe2: AlgebraDescriptor, coords: tuple[int, int]) -> None:
    lam = pe2.weight(*coords)
    assert br_highest_weight_of_simple_pe(2, lambda_plus_pe(2, lam)) == lam


def test_br_highest_weight_rank_limit() -> None:
    with pytest.raises(UnsupportedRankError):
        br_highest_weight_of_simple_pe(4, build_algebra("pe", 4).zero())
