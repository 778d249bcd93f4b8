from __future__ import annotations

import pytest

from super_o.algebra import AlgebraDescriptor
from super_o.errors import BandViolationError, InvalidParameterError
from super_o.oracle.homology import (
    costandard_pe_witnesses,
    osp_odd_order,
    simple_osp_witness,
    verma_osp_witnesses,
    verma_pe_witness,
    witness_depth,
    x_homology_probe,
)
from super_o.oracle.module import as_wt, build_costandard, build_verma, simple_quotient
from super_o.oracle.realization import realize


def test_pe_verma_top_witness(pe2: AlgebraDescriptor) -> None:
    lam = pe2.weight(1, 0)
    witness = verma_pe_witness(pe2, lam)
    assert witness.root == (0, 2)
    assert witness.expect_positive
    depth = witness_depth(pe2, lam, [witness])
    assert depth == 2
    module = build_verma(pe2, lam, depth)
    assert x_homology_probe(module, witness.x, witness.weight) == 1


def test_probe_needs_the_band(pe2: AlgebraDescriptor) -> None:
    lam = pe2.weight(1, 0)
    witness = verma_pe_witness(pe2, lam)
    with pytest.raises(BandViolationError):
        x_homology_probe(build_verma(pe2, lam, 1), witness.x, witness.weight)


def test_probe_rejects_even_elements(gl2: AlgebraDescriptor) -> None:
    rz = realize(gl2)
    module = build_verma(gl2, gl2.zero(), 2)
    with pytest.raises(InvalidParameterError):
        x_homology_probe(module, rz.simple_raising()[0], as_wt(gl2.zero()))


def test_osp_odd_order(osp22: AlgebraDescriptor) -> None:
    assert osp_odd_order(osp22) == [osp22.weight(-1, -1), osp22.weight(-1, 1)]


def test_osp_witness_for_atypical_weight(osp22: AlgebraDescriptor) -> None:
    lam = osp22.zero()
    witnesses = verma_osp_witnesses(osp22, lam)
    assert len(witnesses) == 1
    (witness,) = witnesses
    assert witness.expect_positive
    assert witness.root == (1, -1)
    assert witness.weight == as_wt(lam)
    module = build_verma(osp22, lam, witness_depth(osp22, lam, witnesses))
    assert x_homology_probe(module, witness.x, witness.weight) > 0


def test_osp_witnesses_for_typical_weight(osp22: AlgebraDescriptor) -> None:
    witnesses = verma_osp_witnesses(osp22, osp22.weight(3, 0))
    assert len(witnesses) == 2
    assert not any(w.expect_positive for w in witnesses)
    assert [w.label for w in witnesses] == ["k=1", "k=2"]


def test_costandard_witness_for_atypical_pair(pe2: AlgebraDescriptor) -> None:
    witnesses = costandard_pe_witnesses(pe2, pe2.zero())
    assert len(witnesses) == 1
    assert witnesses[0].expect_positive
    assert witnesses[0].label.endswith("I=hat-minus")
    assert witnesses[0].root == (-1, -1)


def test_costandard_witnesses_for_typical_weight(pe2: AlgebraDescriptor) -> None:
    lam = pe2.weight(1, 0)
    witnesses = costandard_pe_witnesses(pe2, lam)
    assert len(witnesses) == 2
    assert not any(w.expect_positive for w in witnesses)
    module = build_costandard(pe2, lam, witness_depth(pe2, lam, witnesses))
    assert [x_homology_probe(module, w.x, w.weight) for w in witnesses] == [0, 0]


def test_witness_families_check_the_algebra(pe2: AlgebraDescriptor, osp22: AlgebraDescriptor) -> None:
    with pytest.raises(InvalidParameterError):
        verma_osp_witnesses(pe2, pe2.zero())
    with pytest.raises(InvalidParameterError):
        costandard_pe_witnesses(osp22, osp22.zero())
    with pytest.raises(InvalidParameterError):
        verma_pe_witness(osp22, osp22.zero())


def test_simple_osp_witness_on_trivial_module(osp22: AlgebraDescriptor) -> None:
    simple = simple_quotient(build_verma(osp22, osp22.zero(), 2))
    witness = simple_osp_witness(simple)
    assert witness is not None
    assert witness.label == "step=1"
    assert witness.root == (-1, 1)
    assert x_homology_probe(simple, witness.x, witness.weight) == 1
