"""Edge-weighted unrooted trees with named leaves.

A tree here has internal vertex ids ``0 .. nv-1``; every vertex of
degree <= 1 carries a unique string name (interior vertices are
anonymous).  Edge weights are non-negative integers.  The central
notion: two leaves are related at level ``k`` when the weights on the
path between them sum to exactly ``k``; a tree explains a graph when the
graph's edges are exactly the related leaf pairs.

A tree is *canonical* when every interior vertex has degree >= 3 and no
edge between two interior vertices has weight 0.  Trees with at most two
leaves are canonical by definition.  ``canonicalize`` reduces any tree
to canonical shape without changing any leaf-to-leaf path weight
relation it realizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .graphs import Graph, from_edge_list


class LabeledTree:
    """Immutable unrooted tree with weighted edges and named leaves."""

    __slots__ = ("nv", "adj", "names", "_name_to_vertex")

    def __init__(self, nv: int, adj: tuple[dict[int, int], ...],
                 names: dict[int, str]):
        self.nv = nv
        self.adj = adj
        self.names = names
        self._name_to_vertex = {s: v for v, s in names.items()}

    # -- construction --------------------------------------------------

    @classmethod
    def build(cls, nv: int, edges: Iterable[tuple[int, int, int]],
              names: Mapping[int, str]) -> "LabeledTree":
        """Validate and build a tree.

        Args:
            nv: number of vertices.
            edges: triples ``(u, v, weight)``; must form a tree on all
                ``nv`` vertices.
            names: leaf names; must cover exactly the vertices of degree
                <= 1, with no duplicates.

        Raises:
            ValueError: if the edge set is not a tree, a weight is
                negative or non-integer, or the naming is wrong.
        """
        adj: list[dict[int, int]] = [dict() for _ in range(nv)]
        count = 0
        for u, v, w in edges:
            if not (0 <= u < nv and 0 <= v < nv) or u == v:
                raise ValueError(f"bad edge ({u}, {v})")
            if not isinstance(w, int) or isinstance(w, bool) or w < 0:
                raise ValueError(f"edge ({u}, {v}) needs a non-negative integer weight")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u][v] = w
            adj[v][u] = w
            count += 1
        if nv == 0:
            raise ValueError("tree needs at least one vertex")
        if count != nv - 1:
            raise ValueError(f"{count} edges on {nv} vertices is not a tree")
        # connectivity
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != nv:
            raise ValueError("edge set is not connected")
        # naming: exactly the degree<=1 vertices, uniquely
        leaf_vs = {v for v in range(nv) if len(adj[v]) <= 1}
        named = dict(names)
        if set(named) != leaf_vs:
            raise ValueError("names must cover exactly the degree<=1 vertices")
        vals = list(named.values())
        if len(set(vals)) != len(vals):
            raise ValueError("duplicate leaf name")
        for s in vals:
            if not s:
                raise ValueError("empty leaf name")
        return cls(nv, tuple(adj), named)

    # -- basic queries -------------------------------------------------

    @property
    def leaf_vertices(self) -> list[int]:
        return [v for v in range(self.nv) if len(self.adj[v]) <= 1]

    @property
    def leaf_names(self) -> list[str]:
        return sorted(self.names.values())

    @property
    def n_leaves(self) -> int:
        return len(self.names)

    def vertex_of(self, name: str) -> int:
        return self._name_to_vertex[name]

    def interior_vertices(self) -> list[int]:
        return [v for v in range(self.nv) if len(self.adj[v]) >= 2]

    def weighted_edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, w) for u in range(self.nv)
                for v, w in self.adj[u].items() if u < v]

    def total_weight(self) -> int:
        return sum(w for _, _, w in self.weighted_edges())

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LabeledTree)
                and canonical_form(self) == canonical_form(other))

    def __hash__(self) -> int:
        return hash(canonical_form(self))

    def __repr__(self) -> str:
        return f"LabeledTree(leaves={self.leaf_names})"


@dataclass(frozen=True)
class DistanceMatrix:
    """Leaf-to-leaf path weights, rows and columns in sorted-name order."""

    names: tuple[str, ...]
    dist: tuple[tuple[int, ...], ...]

    def get(self, a: str, b: str) -> int:
        i = self.names.index(a)
        j = self.names.index(b)
        return self.dist[i][j]


# ======================================================================
# Distances and the explained graph
# ======================================================================

def _distances_from(t: LabeledTree, src: int) -> list[int]:
    dist = [-1] * t.nv
    dist[src] = 0
    stack = [src]
    while stack:
        x = stack.pop()
        for y, w in t.adj[x].items():
            if dist[y] < 0:
                dist[y] = dist[x] + w
                stack.append(y)
    return dist


def leaf_distance_matrix(t: LabeledTree) -> DistanceMatrix:
    """Path-weight sums between all leaf pairs."""
    names = t.leaf_names
    verts = [t.vertex_of(s) for s in names]
    rows = []
    for v in verts:
        dv = _distances_from(t, v)
        rows.append(tuple(dv[u] for u in verts))
    return DistanceMatrix(tuple(names), tuple(rows))


def explain(t: LabeledTree, k: int) -> Graph:
    """The graph whose vertices are the leaves (graph vertex ``i`` is the
    i-th leaf name in sorted order) and whose edges are the leaf pairs at
    path weight exactly ``k``.

    Args:
        t: any tree.
        k: relation level, >= 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    dm = leaf_distance_matrix(t)
    n = len(dm.names)
    edges = [(i, j) for i, j in combinations(range(n), 2)
             if dm.dist[i][j] == k]
    return from_edge_list(n, edges)


def scale(t: LabeledTree, c: int) -> LabeledTree:
    """Multiply every edge weight by a positive integer ``c``."""
    if not isinstance(c, int) or c < 1:
        raise ValueError("scale factor must be a positive integer")
    edges = [(u, v, w * c) for u, v, w in t.weighted_edges()]
    return LabeledTree.build(t.nv, edges, t.names)


# ======================================================================
# Canonicalization and restriction
# ======================================================================

def _compact(adj: dict[int, dict[int, int]], names: dict[int, str]) -> LabeledTree:
    """Rebuild a LabeledTree from a mutable adjacency, renumbering ids."""
    verts = sorted(adj)
    new_id = {v: i for i, v in enumerate(verts)}
    edges = [(new_id[u], new_id[v], w) for u in adj
             for v, w in adj[u].items() if new_id[u] < new_id[v]]
    new_names = {new_id[v]: s for v, s in names.items() if v in new_id}
    return LabeledTree.build(len(verts), edges, new_names)


def canonicalize(t: LabeledTree) -> LabeledTree:
    """Reduce to canonical shape: contract interior 0-weight edges and
    smooth interior degree-2 vertices (summing the two weights), until
    neither occurs.  Leaf-to-leaf path weights are unchanged, so the
    explained graph is preserved for every level.

    Args:
        t: tree with at least 2 leaves.
    """
    if t.n_leaves < 2:
        raise ValueError("canonicalize needs a tree with >= 2 leaves")
    adj: dict[int, dict[int, int]] = {v: dict(t.adj[v]) for v in range(t.nv)}
    names = dict(t.names)

    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if v in names:
                continue
            nbrs = adj[v]
            if len(nbrs) == 2:
                (a, wa), (b, wb) = nbrs.items()
                del adj[v]
                del adj[a][v]
                del adj[b][v]
                adj[a][b] = wa + wb
                adj[b][a] = wa + wb
                changed = True
                break
            if len(nbrs) >= 3:
                # look for a 0-edge to another interior vertex
                target = None
                for u, w in nbrs.items():
                    if w == 0 and u not in names:
                        target = u
                        break
                if target is not None:
                    # merge v into target
                    del adj[target][v]
                    del adj[v][target]
                    for u, w in adj[v].items():
                        del adj[u][v]
                        adj[u][target] = w
                        adj[target][u] = w
                    del adj[v]
                    changed = True
                    break
    return _compact(adj, names)


def restrict(t: LabeledTree, leaf_subset: Iterable[str]) -> LabeledTree:
    """The tree displayed on a subset of leaves: prune everything off the
    paths between kept leaves, then smooth degree-2 vertices with summed
    weights.  0-weight edges are left alone, so path weights between kept
    leaves are exactly those of ``t``.

    Args:
        t: any tree.
        leaf_subset: non-empty collection of leaf names of ``t``.
    """
    keep = set(leaf_subset)
    if not keep:
        raise ValueError("leaf subset must be non-empty")
    unknown = keep - set(t.names.values())
    if unknown:
        raise ValueError(f"not leaves of this tree: {sorted(unknown)}")

    if len(keep) == 1:
        (name,) = keep
        return LabeledTree.build(1, [], {0: name})

    adj: dict[int, dict[int, int]] = {v: dict(t.adj[v]) for v in range(t.nv)}
    names = {v: s for v, s in t.names.items() if s in keep}

    # prune: repeatedly remove unnamed (or dropped-name) degree<=1 vertices
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if v in names:
                continue
            if len(adj[v]) <= 1:
                for u in list(adj[v]):
                    del adj[u][v]
                del adj[v]
                changed = True
    # smooth degree-2 pass-through vertices
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if v in names or len(adj[v]) != 2:
                continue
            (a, wa), (b, wb) = adj[v].items()
            del adj[v]
            del adj[a][v]
            del adj[b][v]
            adj[a][b] = wa + wb
            adj[b][a] = wa + wb
            changed = True
            break
    return _compact(adj, names)


# ======================================================================
# Predicates
# ======================================================================

def is_canonical(t: LabeledTree) -> bool:
    """True when every interior vertex has degree >= 3 and no
    interior-to-interior edge has weight 0."""
    for v in range(t.nv):
        if v not in t.names and len(t.adj[v]) < 3:
            return False
    for u, v, w in t.weighted_edges():
        if w == 0 and u not in t.names and v not in t.names:
            return False
    return True


def is_zero_discrete(t: LabeledTree) -> bool:
    """True when no two distinct leaves sit at path weight 0."""
    dm = leaf_distance_matrix(t)
    n = len(dm.names)
    return all(dm.dist[i][j] != 0 for i, j in combinations(range(n), 2))


# ======================================================================
# Canonical form (leaf-labeled equality with weights)
# ======================================================================

def _serialize(t: LabeledTree, v: int, parent: int | None) -> tuple:
    if v in t.names:
        return ("L", t.names[v])
    entries = []
    for u, w in t.adj[v].items():
        if u == parent:
            continue
        sub = _serialize(t, u, v)
        entries.append((_min_leaf(sub), w, sub))
    entries.sort()
    return ("I", tuple(entries))


def _min_leaf(serial: tuple) -> str:
    if serial[0] == "L":
        return serial[1]
    return min(e[0] for e in serial[1])


def canonical_form(t: LabeledTree) -> tuple:
    """A hashable form equal across trees that differ only in internal
    vertex numbering.  Two trees are considered the same when they have
    the same named leaves, shape, and weights."""
    if t.n_leaves == 1:
        return ("V", t.leaf_names[0])
    if t.nv == 2:
        a, b = sorted(t.names.values())
        (w,) = [w for _, _, w in t.weighted_edges()]
        return ("E", a, b, w)
    first = t.leaf_names[0]
    lv = t.vertex_of(first)
    if len(t.adj[lv]) == 0:
        raise AssertionError("unreachable: single leaf handled above")
    (anchor,) = t.adj[lv].keys()
    if anchor in t.names:
        # two named vertices joined by an edge but nv > 2 cannot happen in
        # a valid tree; anchor is interior here
        raise AssertionError("unreachable")
    return ("T", _serialize(t, anchor, None))
