"""
Verification suites: formula answers checked against direct oracle computations.

Each suite returns a SuiteReport with one CaseResult per check. A case that the
oracle refuses (band or resource cap, failed precondition) is recorded as a
failure carrying the refusal status; internal OracleErrors propagate.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from ..algebra import AlgebraDescriptor, build_algebra, is_antidominant, is_typical, omega
from ..config import Config
from ..errors import InvalidParameterError, OracleError, SuperOError
from ..labels import SimpleMultiset
from ..linkage import hom_dim_verma_even, hom_dim_verma_pe, up_arrow, up_arrow_bruhat
from ..socle import (
    ext1_simple_verma_pe,
    oracle_cokernel_socle,
    pe2_socle_closed_form,
    socle_cokernel_even,
    socle_cokernel_pe,
    socle_cokernel_pe_oracle,
    socle_verma,
)
from ..weights import Weight
from ..weyl import (
    bruhat_leq,
    dot,
    elements,
    is_bigrassmannian,
    orbit,
    orbit_extreme,
    pe_block_closure,
    pe_block_equivalent,
    weyl_group,
)
from .highest_weight import (
    band_depth,
    below,
    candidate_band,
    composition_factors,
    hom_dim_oracle,
    kac_is_simple,
    kostant_partition,
    singular_layers,
    socle_constituents,
    verma_embedding_ranks,
    verma_weight_dim,
)
from .homology import (
    Witness,
    costandard_pe_witnesses,
    verma_osp_witnesses,
    verma_pe_witness,
    witness_depth,
    x_homology_probe,
)
from .module import (
    DEFAULT_CONFIG,
    TruncatedModule,
    as_wt,
    build_costandard,
    build_kac,
    build_verma,
    check_relations,
    finite_dimensional_top,
    replace_checks,
)
from .realization import realize

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, Optional[int], Dict[str, object]]


# ============================================================
# REPORTS
# ============================================================

@dataclass(frozen=True)
class CaseResult:
    name: str
    passed: bool
    band: Optional[int] = None
    detail: Dict[str, object] = field(default_factory=dict)

    def render(self) -> Dict[str, object]:
        out: Dict[str, object] = {"case": self.name, "passed": self.passed}
        if self.band is not None:
            out["band"] = self.band
        out.update(self.detail)
        return out


@dataclass
class SuiteReport:
    suite: str
    cases: List[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> List[CaseResult]:
        return [c for c in self.cases if not c.passed]

    def run(self, name: str, check: Callable[[], Outcome]) -> CaseResult:
        try:
            passed, band, detail = check()
        except OracleError:
            raise
        except SuperOError as exc:
            passed, band, detail = False, None, {"refusal": exc.status, "message": str(exc)}
        result = CaseResult(name, passed, band, detail)
        if not passed:
            logger.warning("suite %s: case %s failed: %s", self.suite, name, detail)
        self.cases.append(result)
        return result

    def render(self) -> Dict[str, object]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "total": len(self.cases),
            "failed": len(self.failures),
            "cases": [c.render() for c in self.cases],
        }

    def to_json(self) -> str:
        return json.dumps(self.render(), indent=2, ensure_ascii=False)


def _box(n: int, bound: int) -> Iterable[Tuple[int, ...]]:
    return product(range(-bound, bound + 1), repeat=n)


# ============================================================
# HOM DIMENSIONS AND EMBEDDINGS
# ============================================================

def _even_orbits() -> List[Tuple[AlgebraDescriptor, Weight]]:
    gl2, gl3 = build_algebra("gl", 2), build_algebra("gl", 3)
    return [(gl2, gl2.zero()), (gl3, gl3.zero()), (gl3, gl3.weight(0, 0, 1))]


def _hom_pair(a: AlgebraDescriptor, mu: Weight, lam: Weight, formula: int, config: Config) -> Outcome:
    rz = realize(a)
    band = band_depth(rz, as_wt(lam), as_wt(mu)) if below(rz, as_wt(mu), as_wt(lam)) else 0
    oracle = hom_dim_oracle(a, mu, lam, config=config)
    chains = up_arrow(a, mu, lam) == up_arrow_bruhat(a, mu, lam)
    detail = {"mu": mu.render(), "lam": lam.render(), "formula": formula, "oracle": oracle}
    return formula == oracle and chains, band, detail


def suite_homdims(config: Config = DEFAULT_CONFIG) -> SuiteReport:
    report = SuiteReport("homdims")
    for a, seed in _even_orbits():
        weights = orbit(a, seed)
        for mu, lam in product(weights, repeat=2):
            report.run(
                f"{a.name} Hom({mu.render()}, {lam.render()})",
                lambda a=a, mu=mu, lam=lam: _hom_pair(a, mu, lam, hom_dim_verma_even(a, mu, lam), config),
            )
    pe2 = build_algebra("pe", 2)
    pairs = set()
    for coords in _box(2, 2):
        lam = pe2.weight(*coords)
        pairs.update(product(orbit(pe2, lam), repeat=2))
    for mu, lam in sorted(pairs, key=lambda p: (p[0].sort_key(), p[1].sort_key())):
        report.run(
            f"pe(2) Hom({mu.render()}, {lam.render()})",
            lambda mu=mu, lam=lam: _hom_pair(pe2, mu, lam, hom_dim_verma_pe(2, mu, lam), config),
        )
    for sub, top in pe2_embedding_pairs():
        report.run(f"pe(2) embedding Δ({sub.render()}) → Δ({top.render()})",
                   lambda top=top, sub=sub: _embedding(pe2, sub, top, config))
    logger.info("homdims: %d cases, %d failed", len(report.cases), len(report.failures))
    return report


def _embedding(a: AlgebraDescriptor, sub: Weight, top: Weight, config: Config) -> Outcome:
    extra = 2
    ranks = verma_embedding_ranks(a, sub, top, extra, config)
    injective = all(r == d for _, r, d in ranks)
    rz = realize(a)
    depth = band_depth(rz, as_wt(top), as_wt(sub))
    layers = singular_layers(build_verma(a, top, depth, config), as_wt(sub))
    detail = {"injective": injective, "layers": layers}
    return injective and layers == [0], depth + extra, detail


# ============================================================
# SOCLES
# ============================================================

def _bigrassmannian_case(a: AlgebraDescriptor, y_index: int, config: Config) -> Outcome:
    y = elements(weyl_group(a))[y_index]
    zero = a.zero()
    sub = dot(a, y, zero)
    socle = oracle_cokernel_socle(a, zero, sub, config)
    detail = {"y": str(y), "socle": socle.render(), "bigrassmannian": is_bigrassmannian(y)}
    return socle.is_simple() == is_bigrassmannian(y), candidate_band(a, as_wt(zero)), detail


def _translation_case(a: AlgebraDescriptor, mu: Weight, xi: int, yi: int, config: Config) -> Outcome:
    group = elements(weyl_group(a))
    x, y = group[xi], group[yi]
    formula = socle_cokernel_even(a, x, y, mu, config=config)
    direct = oracle_cokernel_socle(a, dot(a, x, mu), dot(a, y, mu), config)
    detail = {"x": str(x), "y": str(y), "translated": formula.render(), "direct": direct.render()}
    return formula == direct, candidate_band(a, as_wt(dot(a, x, mu))), detail


def _verma_socle_case(a: AlgebraDescriptor, lam: Weight, config: Config) -> Outcome:
    band = candidate_band(a, as_wt(lam))
    direct = socle_constituents(build_verma(a, lam, band, config), config)
    formula = socle_verma(a, lam)
    return direct == formula, band, {"formula": formula.render(), "oracle": direct.render()}


def suite_socles(config: Config = DEFAULT_CONFIG) -> SuiteReport:
    report = SuiteReport("socles")
    gl2 = build_algebra("gl", 2)
    report.run("gl(2) soc(Δ0(0,0)/Δ0(-1,1))",
               lambda: (oracle_cokernel_socle(gl2, gl2.zero(), gl2.weight(-1, 1), config)
                        == SimpleMultiset.single(gl2.zero()), None, {}))
    ranks = [3, 4] if config.long_tests else [3]
    for n in ranks:
        a = build_algebra("gl", n)
        for k, y in enumerate(elements(weyl_group(a))):
            report.run(f"gl({n}) bigrassmannian y={y}", lambda a=a, k=k: _bigrassmannian_case(a, k, config))
    gl3 = build_algebra("gl", 3)
    mu = gl3.weight(0, 0, 1)
    group = elements(weyl_group(gl3))
    for xi, yi in product(range(len(group)), repeat=2):
        if xi != yi and bruhat_leq(group[xi], group[yi]):
            report.run(f"gl(3) wall translation x={group[xi]} y={group[yi]}",
                       lambda xi=xi, yi=yi: _translation_case(gl3, mu, xi, yi, config))
    pe2 = build_algebra("pe", 2)
    for coords in _box(2, 1):
        lam = pe2.weight(*coords)
        report.run(f"pe(2) soc Δ({lam.render()})", lambda lam=lam: _verma_socle_case(pe2, lam, config))
    logger.info("socles: %d cases, %d failed", len(report.cases), len(report.failures))
    return report


# ============================================================
# THE pe(2) EXAMPLE
# ============================================================

def _dominant_pe2(bound: int) -> List[Weight]:
    pe2 = build_algebra("pe", 2)
    return [pe2.weight(a, b) for a in range(-bound, bound + 1) for b in range(-bound, a + 1)]


def _pe2_partner(top: Weight) -> Tuple[Weight, Weight]:
    pe2 = build_algebra("pe", 2)
    weights = orbit(pe2, top)
    other = [w for w in weights if w != top]
    return top, (other[0] if other else top)


def pe2_embedding_pairs() -> List[Tuple[Weight, Weight]]:
    """(λ, λ̄) for every dominant λ̄ with |coords| <= 2 whose orbit has a second weight λ."""
    pairs = []
    for top in _dominant_pe2(2):
        _, sub = _pe2_partner(top)
        if sub != top:
            pairs.append((sub, top))
    return pairs


def _expected_pe2_socle(top: Weight, sub: Weight) -> SimpleMultiset:
    if sub == top:
        return SimpleMultiset.empty()
    if top[0] == top[1]:
        return SimpleMultiset.single(top - omega(2, 2))
    return SimpleMultiset.single(top)


def _pe2_socle_case(top: Weight, sub: Weight, config: Config) -> Outcome:
    expected = _expected_pe2_socle(top, sub)
    formula = socle_cokernel_pe(2, top, sub, config)
    closed = pe2_socle_closed_form(top, sub)
    direct = socle_cokernel_pe_oracle(2, top, sub, config)
    detail = {
        "expected": expected.render(),
        "formula": formula.render(),
        "closed_form": closed.render(),
        "oracle": direct.render(),
    }
    band = candidate_band(build_algebra("pe", 2), as_wt(top))
    return expected == formula == closed == direct, band, detail


def _pe2_ext_case(mu: Weight, lam: Weight, config: Config) -> Outcome:
    top, _ = orbit_extreme(build_algebra("pe", 2), lam, "dominant")
    expected = 0
    if lam != top:
        if top[0] == top[1] and mu == top - omega(2, 2):
            expected = 1
        if top[0] > top[1] and mu == top:
            expected = 1
    value = ext1_simple_verma_pe(2, mu, lam, config)
    return value == expected, None, {"mu": mu.render(), "lam": lam.render(), "expected": expected, "value": value}


def ext1_grid(top: Weight, sub: Weight) -> List[Weight]:
    """Non-antidominant μ in the box |coords| <= 2 together with the labels the Ext¹ table can hit."""
    pe2 = build_algebra("pe", 2)
    grid = {pe2.weight(*coords) for coords in _box(2, 2)}
    grid.update({top, top - omega(2, 2), top + omega(2, 2), sub})
    return sorted((mu for mu in grid if not is_antidominant(pe2, mu)), key=lambda w: w.sort_key())


def suite_pe2_example(config: Config = DEFAULT_CONFIG) -> SuiteReport:
    report = SuiteReport("pe2-example")
    pe2 = build_algebra("pe", 2)
    for top in _dominant_pe2(2):
        for sub in orbit(pe2, top):
            report.run(f"soc(Δ({top.render()})/Δ({sub.render()}))",
                       lambda top=top, sub=sub: _pe2_socle_case(top, sub, config))
            for mu in ext1_grid(top, sub):
                report.run(f"Ext1(L({mu.render()}), Δ({sub.render()}))",
                           lambda mu=mu, sub=sub: _pe2_ext_case(mu, sub, config))
    logger.info("pe2-example: %d cases, %d failed", len(report.cases), len(report.failures))
    return report


# ============================================================
# KAC MODULES
# ============================================================

def _kac_case(a: AlgebraDescriptor, lam: Weight, config: Config) -> Outcome:
    simple = kac_is_simple(a, lam, config)
    typical = is_typical(a, lam)
    return simple == typical, None, {"simple": simple, "typical": typical}


def _factor_case(a: AlgebraDescriptor, mu: Weight, config: Config) -> Outcome:
    factors = composition_factors(build_kac(a, mu, config), config)
    offenders = [nu.render() for nu in factors.weights() if nu != mu and kac_is_simple(a, nu, config)]
    return not offenders, None, {"factors": factors.render(), "offenders": offenders}


def kac_bound(config: Config) -> int:
    return 4 if config.long_tests else 3


def suite_kac(config: Config = DEFAULT_CONFIG) -> SuiteReport:
    report = SuiteReport("kac")
    bound = kac_bound(config)
    algebras = [build_algebra("glmn", 1, 1, allow_equal_ranks=True), build_algebra("osp", 1)]
    for a in algebras:
        for coords in _box(2, bound):
            lam = a.weight(*coords)
            report.run(f"{a.name} K({lam.render()}) simple vs typical", lambda a=a, lam=lam: _kac_case(a, lam, config))
            if finite_dimensional_top(a, lam):
                report.run(f"{a.name} factors of K({lam.render()})",
                           lambda a=a, lam=lam: _factor_case(a, lam, config))
    logger.info("kac: %d cases, %d failed", len(report.cases), len(report.failures))
    return report


# ============================================================
# ASSOCIATED-VARIETY WITNESSES
# ============================================================

def _probe_cases(report: SuiteReport, a: AlgebraDescriptor, lam: Weight, witnesses: List[Witness],
                 builder: Callable[..., TruncatedModule], config: Config) -> None:
    depth = witness_depth(a, lam, witnesses)
    module = builder(a, lam, depth, config)
    for w in witnesses:
        def check(w: Witness = w) -> Outcome:
            value = x_homology_probe(module, w.x, w.weight)
            return (value > 0) == w.expect_positive, depth, {"probe": value, "expected_positive": w.expect_positive}

        report.run(f"{a.name} {module.tag} ({lam.render()}) {w.label}", check)


def suite_witnesses(config: Config = DEFAULT_CONFIG) -> SuiteReport:
    report = SuiteReport("witnesses")
    bound = 2 if config.long_tests else 1
    osp = build_algebra("osp", 1)
    pe2 = build_algebra("pe", 2)
    for coords in _box(2, bound):
        lam = osp.weight(*coords)
        _probe_cases(report, osp, lam, verma_osp_witnesses(osp, lam), build_verma, config)
    for coords in _box(2, bound):
        lam = pe2.weight(*coords)
        _probe_cases(report, pe2, lam, costandard_pe_witnesses(pe2, lam), build_costandard, config)
        _probe_cases(report, pe2, lam, [verma_pe_witness(pe2, lam)], build_verma, config)
    logger.info("witnesses: %d cases, %d failed", len(report.cases), len(report.failures))
    return report


# ============================================================
# INTEGRITY GATES
# ============================================================

def _relation_case(build: Callable[[], TruncatedModule]) -> Outcome:
    module = build()
    checked = check_relations(module)
    return checked > 0, module.depth, {"checks": checked}


def _kostant_case(a: AlgebraDescriptor, depth: int, config: Config) -> Outcome:
    rz = realize(a)
    module = build_verma(a, a.zero(), depth, replace_checks(config, False))
    roots = [r.as_ints() for r in a.even_positive]
    top = as_wt(a.zero())
    mismatched = []
    for nu in module.weights():
        beta = [int(t - c) for t, c in zip(top, nu)]
        if module.dim(nu) != kostant_partition(beta, roots, rz.heights):
            mismatched.append(Weight.of(a.basis, nu).render())
    return not mismatched, depth, {"weights": len(module.weights()), "mismatched": mismatched}


def _super_dims_case(a: AlgebraDescriptor, lam: Weight, depth: int, config: Config) -> Outcome:
    module = build_verma(a, lam, depth, replace_checks(config, False))
    top = as_wt(lam)
    mismatched = [
        Weight.of(a.basis, nu).render()
        for nu in module.weights()
        if module.dim(nu) != verma_weight_dim(a, top, nu)
    ]
    return not mismatched, depth, {"mismatched": mismatched}


def _block_case(n: int, box: int, inner: int) -> Outcome:
    a = build_algebra("pe", n)
    components = pe_block_closure(a, box)
    nodes = list(_box(n, inner))
    disagree = []
    for u, v in product(nodes, repeat=2):
        fast = pe_block_equivalent(a, a.weight(*u), a.weight(*v))
        if fast != (components[u] == components[v]):
            disagree.append([list(u), list(v)])
    return not disagree, None, {"pairs": len(nodes) ** 2, "disagree": disagree[:10]}


def kostant_depth(config: Config) -> int:
    return 12 if config.long_tests else 10


def suite_relations(config: Config = DEFAULT_CONFIG) -> SuiteReport:
    report = SuiteReport("relations")
    gl3, pe2, pe3 = build_algebra("gl", 3), build_algebra("pe", 2), build_algebra("pe", 3)
    osp = build_algebra("osp", 1)
    gl11 = build_algebra("glmn", 1, 1, allow_equal_ranks=True)
    unchecked = replace_checks(config, False)
    builds: List[Tuple[str, Callable[[], TruncatedModule]]] = [
        ("gl(3) Δ0(0)", lambda: build_verma(gl3, gl3.zero(), 4, unchecked)),
        ("pe(2) Δ(1,0)", lambda: build_verma(pe2, pe2.weight(1, 0), 5, unchecked)),
        ("pe(2) ∇(0,0)", lambda: build_costandard(pe2, pe2.zero(), 5, unchecked)),
        ("pe(3) Δ(0,0,0)", lambda: build_verma(pe3, pe3.zero(), 3, unchecked)),
        ("osp(2|2) Δ(0 | 0)", lambda: build_verma(osp, osp.zero(), 4, unchecked)),
        ("osp(2|2) K(1 | 1)", lambda: build_kac(osp, osp.weight(1, 1), unchecked)),
        ("gl(1|1) K(1 | 0)", lambda: build_kac(gl11, gl11.weight(1, 0), unchecked)),
    ]
    for name, build in builds:
        report.run(f"relations on {name}", lambda build=build: _relation_case(build))
    depth = kostant_depth(config)
    even = [build_algebra("gl", 2), gl3, build_algebra("gl", 4)]
    for a in even:
        report.run(f"{a.name} Kostant multiplicities to depth {depth}", lambda a=a: _kostant_case(a, depth, config))
    report.run("pe(2) super multiplicities", lambda: _super_dims_case(pe2, pe2.weight(1, 0), 6, config))
    report.run("pe(2) block relation", lambda: _block_case(2, 5, 3))
    report.run("pe(3) block relation", lambda: _block_case(3, 4, 3))
    logger.info("relations: %d cases, %d failed", len(report.cases), len(report.failures))
    return report


SUITES: Dict[str, Callable[[Config], SuiteReport]] = {
    "homdims": suite_homdims,
    "socles": suite_socles,
    "pe2-example": suite_pe2_example,
    "kac": suite_kac,
    "witnesses": suite_witnesses,
    "relations": suite_relations,
}


def run_suite(name: str, config: Config = DEFAULT_CONFIG) -> SuiteReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise InvalidParameterError(f"Unsupported suite: {name} (choose from {', '.join(SUITES)})") from None
    logger.info("running suite %s", name)
    return suite(config)


__all__ = [
    "CaseResult",
    "SUITES",
    "SuiteReport",
    "ext1_grid",
    "kac_bound",
    "kostant_depth",
    "pe2_embedding_pairs",
    "run_suite",
    "suite_homdims",
    "suite_kac",
    "suite_pe2_example",
    "suite_relations",
    "suite_socles",
    "suite_witnesses",
]
