"""
Strong linkage μ ↑ λ and Hom dimensions between Verma (super)modules.

The chain search runs on the finite dot-orbit: a step ν → s_β·ν (β an even
positive root) is allowed when ⟨ν + ρ0, β∨⟩ < 0, so every step moves strictly up.
"""
from __future__ import annotations

import logging
from functools import lru_cache

import networkx as nx

from .algebra import AlgebraDescriptor, build_algebra, coroot_pairing, is_typical, require_integral
from .errors import InvalidParameterError
from .graphs import hasse, to_dot
from .weights import Weight, require_basis
from .weyl import bruhat_leq, dot, orbit, orbit_extreme, reflection

logger = logging.getLogger(__name__)


# ============================================================
# ORBIT GRAPHS
# ============================================================

@lru_cache(maxsize=None)
def orbit_graph(a: AlgebraDescriptor, lam: Weight) -> nx.DiGraph:
    """Directed graph on W·λ with an edge ν → s_β·ν for every upward reflection step."""
    require_integral(a, lam)
    graph = nx.DiGraph()
    nodes = orbit(a, lam)
    graph.add_nodes_from(nodes)
    for nu in nodes:
        shifted = nu + a.rho0
        for beta in a.even_positive:
            if coroot_pairing(a, shifted, beta) < 0:
                graph.add_edge(nu, dot(a, reflection(a, beta), nu), root=beta.render())
    logger.debug("orbit graph of %s over %s: %d nodes, %d edges",
                  lam.render(), a.name, graph.number_of_nodes(), graph.number_of_edges())
    return graph


def up_arrow(a: AlgebraDescriptor, mu: Weight, lam: Weight) -> bool:
    """μ ↑ λ: a chain of upward reflection steps leads from μ to λ (the empty chain included)."""
    require_basis(a.basis, mu, lam)
    require_integral(a, mu, lam)
    if mu == lam:
        return True
    graph = orbit_graph(a, mu)
    return lam in graph and nx.has_path(graph, mu, lam)


def up_arrow_bruhat(a: AlgebraDescriptor, mu: Weight, lam: Weight) -> bool:
    """
    μ ↑ λ read off the Bruhat order: with ν the antidominant point of the orbit and x, y
    the shortest elements with x·ν = μ and y·ν = λ, μ ↑ λ iff x ≤ y.
    """
    require_basis(a.basis, mu, lam)
    require_integral(a, mu, lam)
    base, x = orbit_extreme(a, mu, "antidominant")
    other, y = orbit_extreme(a, lam, "antidominant")
    if base != other:
        return False
    return bruhat_leq(x, y)


# ============================================================
# HOM DIMENSIONS
# ============================================================

def hom_dim_verma_even(a: AlgebraDescriptor, mu: Weight, lam: Weight) -> int:
    if a.kind != "gl":
        raise InvalidParameterError(f"even Verma Hom dimensions are taken over gl(n), not {a.name}")
    return 1 if up_arrow(a, mu, lam) else 0


def hom_dim_verma_pe(n: int, mu: Weight, lam: Weight) -> int:
    """dim Hom(Δ(μ), Δ(λ)) over pe(n); the Kac functor identifies it with the even one."""
    a = build_algebra("pe", n)
    return 1 if up_arrow(a, mu, lam) else 0


def antidominant_point(a: AlgebraDescriptor, lam: Weight) -> Weight:
    """λ̌, the antidominant element of W·λ."""
    return orbit_extreme(a, lam, "antidominant")[0]


def verma_homs_all_injective(a: AlgebraDescriptor, lam: Weight) -> bool:
    """
    Every non-zero map between Verma supermodules in the orbit of λ is an embedding
    iff K(λ̌) is simple. This always holds for pe(n); for osp(2|2n) and gl(m|n) it is
    equivalent to λ̌ being typical.
    """
    require_basis(a.basis, lam)
    require_integral(a, lam)
    if a.kind == "pe":
        return True
    if a.kind not in ("osp", "glmn"):
        raise InvalidParameterError(f"the embedding criterion is stated for type I superalgebras, not {a.name}")
    return is_typical(a, antidominant_point(a, lam))


# ============================================================
# GRAPHS
# ============================================================

def linkage_graph(a: AlgebraDescriptor, lam: Weight) -> nx.DiGraph:
    """Hasse diagram of ↑ on W·λ; edges point from μ to the weights covering it."""
    return hasse(orbit_graph(a, lam))


def linkage_dot(a: AlgebraDescriptor, lam: Weight) -> str:
    return to_dot(linkage_graph(a, lam), f"linkage {a.name} {lam.render()}", lambda w: w.render())


__all__ = [
    "antidominant_point",
    "hom_dim_verma_even",
    "hom_dim_verma_pe",
    "linkage_dot",
    "linkage_graph",
    "orbit_graph",
    "up_arrow",
    "up_arrow_bruhat",
    "verma_homs_all_injective",
]
