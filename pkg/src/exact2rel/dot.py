"""DOT (graphviz) export.  Edge weights become labels; 0-weight edges
are drawn dashed.  Output is deterministic for a given input."""

from __future__ import annotations

from .graphs import Graph, OrientedGraph
from .rooted import RootedLabeledTree
from .trees import LabeledTree


def _edge_attrs(w: int) -> str:
    if w == 0:
        return ' [label="0", style=dashed]'
    return f' [label="{w}"]'


def tree_to_dot(t: LabeledTree) -> str:
    ids = {}
    interior = 0
    for v in range(t.nv):
        if v in t.names:
            ids[v] = t.names[v]
        else:
            ids[v] = f"i{interior}"
            interior += 1
    lines = ["graph tree {"]
    for v in sorted(t.names):
        lines.append(f'  "{ids[v]}";')
    for v in range(t.nv):
        if v not in t.names:
            lines.append(f'  "{ids[v]}" [shape=point];')
    for u, v, w in sorted(t.weighted_edges()):
        lines.append(f'  "{ids[u]}" -- "{ids[v]}"{_edge_attrs(w)};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def rooted_tree_to_dot(t: RootedLabeledTree) -> str:
    ids = {}
    interior = 0
    for v in range(t.nv):
        if v in t.names:
            ids[v] = t.names[v]
        else:
            ids[v] = "root" if v == t.root else f"i{interior}"
            if v != t.root:
                interior += 1
    lines = ["digraph tree {"]
    for v in sorted(t.names):
        lines.append(f'  "{ids[v]}";')
    lines.append(f'  "{ids[t.root]}" [shape=triangle];')
    for v in range(t.nv):
        if v not in t.names and v != t.root:
            lines.append(f'  "{ids[v]}" [shape=point];')
    # parent -> child, walked from the root
    stack = [t.root]
    while stack:
        v = stack.pop()
        for u in sorted(t.children(v)):
            lines.append(f'  "{ids[v]}" -> "{ids[u]}"{_edge_attrs(t.adj[v][u])};')
            stack.append(u)
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(g: Graph) -> str:
    lines = ["graph g {"]
    for v in range(g.n):
        lines.append(f'  "{v}";')
    for u, v in sorted(g.edges):
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def oriented_to_dot(d: OrientedGraph) -> str:
    lines = ["digraph g {"]
    for v in range(d.n):
        lines.append(f'  "{v}";')
    for u, v in sorted(d.arcs):
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
