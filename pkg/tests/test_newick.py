import random

import pytest

from conftest import random_canonical_tree, random_rooted_tree, random_tree
from exact2rel import (TreeFormatError, format_newick, format_rooted_newick,
                       parse_newick, parse_rooted_newick)


def test_parse_simple():
    t = parse_newick("(a:1,b:1,c:1);")
    assert t.n_leaves == 3
    assert t.leaf_names == ["a", "b", "c"]


def test_single_leaf_and_edge_forms():
    t = parse_newick("a;")
    assert t.nv == 1
    t2 = parse_newick("(b:2)a;")
    assert t2.nv == 2
    assert sorted(t2.names.values()) == ["a", "b"]
    assert t2.total_weight() == 2


def test_nested_with_whitespace():
    t = parse_newick(" ( a:2 , ( b:0 , c:2 ) : 2 ) ;\n")
    assert t.n_leaves == 3
    assert t.nv == 5


def test_interior_labels_are_ignored():
    a = parse_newick("((b:0,c:2)x:2,a:2);")
    b = parse_newick("((b:0,c:2):2,a:2);")
    assert a == b


@pytest.mark.parametrize("bad", [
    "",
    "(a:1,b:1)",          # missing semicolon
    "(a,b);",             # missing weight
    "(a:1.5,b:1);",       # fractional weight
    "(a:-1,b:1);",        # negative weight
    "(a:1,b:1);x",        # trailing text
    "(a:1,(b:1);",        # unbalanced
    "(a:1,:1);",          # unnamed leaf
    "(a:1,a:2);",         # duplicate name
    "(a:1,b:1,);",        # dangling comma
    "(a|b:1,c:1);",       # bad name character
])
def test_parse_errors(bad):
    with pytest.raises(TreeFormatError):
        parse_newick(bad)


def test_error_location_is_reported():
    with pytest.raises(TreeFormatError) as info:
        parse_newick("(a:1,\nb:x);")
    msg = str(info.value)
    assert "line 2" in msg


def test_round_trip_random_trees():
    rng = random.Random(4242)
    for _ in range(120):
        t = random_tree(rng, rng.randint(1, 9))
        assert parse_newick(format_newick(t)) == t


def test_round_trip_canonical_trees():
    rng = random.Random(77)
    for _ in range(60):
        t = random_canonical_tree(rng, rng.randint(2, 6))
        assert parse_newick(format_newick(t)) == t


def test_format_is_deterministic():
    rng = random.Random(11)
    t = random_canonical_tree(rng, 6)
    assert format_newick(t) == format_newick(parse_newick(format_newick(t)))


def test_rooted_parse_top_node_is_root():
    rt = parse_rooted_newick("(a:0,(b:0,c:2):2);")
    assert rt.adj[rt.root]            # root really has children
    assert rt.root not in rt.names
    assert sorted(rt.names.values()) == ["a", "b", "c"]


def test_rooted_single_child_root():
    rt = parse_rooted_newick("(a:2);")
    assert len(rt.adj[rt.root]) == 1
    assert rt.names[rt.parent.index(rt.root)] == "a"


def test_rooted_rejects_bare_leaf():
    with pytest.raises(TreeFormatError):
        parse_rooted_newick("a;")


def test_rooted_round_trip():
    rng = random.Random(314)
    for _ in range(60):
        rt = random_rooted_tree(rng, rng.randint(2, 5))
        assert parse_rooted_newick(format_rooted_newick(rt)) == rt


def test_rooted_vs_unrooted_reading_differs():
    # same text, different interpretation: in the two-leaf unrooted form
    # the written anchor is the second leaf, while the rooted reading
    # makes it an unnamed root above a single leaf
    unrooted = parse_newick("(b:1)a;")
    assert sorted(unrooted.names.values()) == ["a", "b"]
    rooted = parse_rooted_newick("(b:1)a;")
    assert sorted(rooted.names.values()) == ["b"]
    assert rooted.root not in rooted.names
