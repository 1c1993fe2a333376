"""Parsing and writing of trees in a Newick-like text form with
mandatory integer edge weights, e.g. ``((a:2,b:0)p:2,(c:0,d:2)q:0)r;``.

Interior vertex names are accepted on input and discarded: only leaves
carry names.  The same text shape serves two readings:

* unrooted: the written top-level node is an arbitrary anchor.  An
  anchor with a single child and a name is itself a leaf (this is how a
  two-leaf tree ``(b:2)a;`` is written).
* rooted: the top-level node IS the root, which is never a leaf; a
  single leaf below the root is written ``(v:0);``.

Weights must be non-negative integers; anything else is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .trees import LabeledTree


class TreeFormatError(ValueError):
    """Raised on malformed tree text; message carries line/column."""


@dataclass
class _Node:
    children: list[tuple["_Node", int]] = field(default_factory=list)
    name: str | None = None


_NAME_CHARS = set("abcdefghijklmnopqrstuvwxyz"
                  "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> TreeFormatError:
        line = self.text.count("\n", 0, self.pos) + 1
        col = self.pos - (self.text.rfind("\n", 0, self.pos) + 1) + 1
        return TreeFormatError(f"line {line}, column {col}: {msg}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error("unexpected end of input")
        return self.text[self.pos]

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected '{ch}'")
        self.pos += 1

    def name(self) -> str | None:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _NAME_CHARS:
            self.pos += 1
        return self.text[start:self.pos] or None

    def weight(self) -> int:
        self.take(":")
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start:self.pos]
        if (self.pos < len(self.text) and self.text[self.pos] == "."):
            raise self.error("weights must be integers")
        if not token or not token.lstrip("+-").isdigit():
            raise self.error("expected an integer weight")
        value = int(token)
        if value < 0:
            raise self.error("weights must be non-negative")
        return value

    def node(self) -> _Node:
        n = _Node()
        if self.peek() == "(":
            self.take("(")
            while True:
                child = self.node()
                w = self.weight()
                n.children.append((child, w))
                if self.peek() == ",":
                    self.take(",")
                    continue
                break
            self.take(")")
        n.name = self.name()
        if not n.children and n.name is None:
            raise self.error("expected a leaf name or '('")
        return n

    def parse(self) -> _Node:
        top = self.node()
        self.take(";")
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing text after ';'")
        return top


# ======================================================================
# Conversion to trees
# ======================================================================

def _collect(node: _Node, counter: list[int],
             edges: list[tuple[int, int, int]], names: dict[int, str]) -> int:
    vid = counter[0]
    counter[0] += 1
    if node.children:
        for child, w in node.children:
            cid = _collect(child, counter, edges, names)
            edges.append((vid, cid, w))
    else:
        names[vid] = node.name  # childless nodes were checked to be named
    return vid


def parse_newick(text: str) -> LabeledTree:
    """Parse tree text with the unrooted reading.

    Raises:
        TreeFormatError: syntax errors (with position), duplicate leaf
            names, or an unnamed leaf.
    """
    top = _Parser(text).parse()
    counter = [0]
    edges: list[tuple[int, int, int]] = []
    names: dict[int, str] = {}
    _collect(top, counter, edges, names)
    # the anchor: with one child and a name it is a leaf itself
    if len(top.children) == 1 and top.name is not None:
        names[0] = top.name
    try:
        return LabeledTree.build(counter[0], edges, names)
    except ValueError as exc:
        raise TreeFormatError(str(exc)) from None


def parse_rooted_newick(text: str):
    """Parse tree text with the rooted reading: the top-level node is the
    root (its name, if any, is discarded; it is never a leaf).

    Returns a ``rooted.RootedLabeledTree``.
    """
    from .rooted import RootedLabeledTree

    top = _Parser(text).parse()
    if not top.children:
        raise TreeFormatError(
            "a rooted tree needs '(...)' around the root's children")
    counter = [0]
    edges: list[tuple[int, int, int]] = []
    names: dict[int, str] = {}
    _collect(top, counter, edges, names)
    try:
        return RootedLabeledTree.build(counter[0], edges, names, root=0)
    except ValueError as exc:
        raise TreeFormatError(str(exc)) from None


# ======================================================================
# Writing
# ======================================================================

def _subtree_text(t: LabeledTree, v: int, parent: int | None) -> tuple[str, str]:
    """Returns (min-leaf-name, text) for the subtree at v away from parent."""
    if v in t.names:
        return t.names[v], t.names[v]
    parts = []
    for u, w in t.adj[v].items():
        if u == parent:
            continue
        key, text = _subtree_text(t, u, v)
        parts.append((key, w, text))
    parts.sort()
    inner = ",".join(f"{text}:{w}" for _, w, text in parts)
    return parts[0][0], f"({inner})"


def format_newick(t: LabeledTree) -> str:
    """Serialize with the unrooted reading; deterministic output
    (anchor adjacent to the smallest-named leaf, children sorted)."""
    if t.n_leaves == 1:
        return f"{t.leaf_names[0]};"
    if t.nv == 2:
        a, b = t.leaf_names
        w = t.adj[t.vertex_of(a)][t.vertex_of(b)]
        return f"({b}:{w}){a};"
    first = t.leaf_names[0]
    lv = t.vertex_of(first)
    (anchor,) = t.adj[lv].keys()
    _, text = _subtree_text(t, anchor, None)
    return f"{text};"
