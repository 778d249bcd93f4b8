from __future__ import annotations

from typing import Callable, Hashable, List

import networkx as nx


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: nx.DiGraph, name: str, label: Callable[[Hashable], str] = str) -> str:
    """
    Render a directed graph as DOT text. Node order follows graph insertion order,
    edges are sorted by their rendered endpoints so output is stable.
    """
    ids = {node: f"n{k}" for k, node in enumerate(graph.nodes)}
    lines: List[str] = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for node, ident in ids.items():
        lines.append(f"  {ident} [label={_quote(label(node))}];")
    edges = sorted(graph.edges, key=lambda e: (ids[e[0]], ids[e[1]]))
    for src, dst in edges:
        lines.append(f"  {ids[src]} -> {ids[dst]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse(graph: nx.DiGraph) -> nx.DiGraph:
    """Covering relations of the partial order generated by `graph` (a DAG)."""
    reduced = nx.transitive_reduction(graph)
    reduced.add_nodes_from(graph.nodes)
    return reduced
