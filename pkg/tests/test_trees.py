import random

import pytest

from conftest import random_canonical_tree, random_tree
from exact2rel import (LabeledTree, canonicalize, explain, is_canonical,
                       is_zero_discrete, leaf_distance_matrix, parse_newick,
                       restrict, scale)


def caterpillar_p4():
    # two cherries joined by a weight-2 edge: explains the 4-path at k=2
    return LabeledTree.build(
        6, [(4, 0, 2), (4, 1, 0), (5, 2, 0), (5, 3, 2), (4, 5, 2)],
        {0: "a", 1: "b", 2: "c", 3: "d"})


def test_build_rejects_malformed_trees():
    with pytest.raises(ValueError):
        LabeledTree.build(3, [(0, 1, 1)], {0: "a", 2: "c"})   # disconnected
    with pytest.raises(ValueError):
        LabeledTree.build(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)], {})  # cycle
    with pytest.raises(ValueError):
        LabeledTree.build(2, [(0, 1, -1)], {0: "a", 1: "b"})
    with pytest.raises(ValueError):
        LabeledTree.build(2, [(0, 1, True)], {0: "a", 1: "b"})
    with pytest.raises(ValueError):
        LabeledTree.build(2, [(0, 1, 1)], {0: "a"})           # unnamed leaf
    with pytest.raises(ValueError):
        LabeledTree.build(3, [(0, 1, 1), (1, 2, 1)],
                          {0: "a", 1: "b", 2: "c"})           # named interior
    with pytest.raises(ValueError):
        LabeledTree.build(2, [(0, 1, 1)], {0: "a", 1: "a"})   # duplicate name


def test_single_vertex_tree():
    t = LabeledTree.build(1, [], {0: "x"})
    assert t.n_leaves == 1
    assert t.leaf_names == ["x"]
    assert explain(t, 2).n == 1


def test_distances_pinned():
    t = caterpillar_p4()
    dm = leaf_distance_matrix(t)
    assert dm.names == ("a", "b", "c", "d")
    assert dm.get("a", "b") == 2
    assert dm.get("a", "c") == 4
    assert dm.get("a", "d") == 6
    assert dm.get("b", "c") == 2
    assert dm.get("c", "d") == 2
    assert dm.get("a", "a") == 0


def test_explain_levels():
    t = caterpillar_p4()
    assert sorted(explain(t, 2).edges) == [(0, 1), (1, 2), (2, 3)]
    assert explain(t, 1).m == 0
    assert sorted(explain(t, 4).edges) == [(0, 2), (1, 3)]
    with pytest.raises(ValueError):
        explain(t, 0)


def test_explain_star():
    star = parse_newick("(a:1,b:1,c:1,d:1);")
    assert explain(star, 2).m == 6
    assert explain(star, 1).m == 0
    assert explain(star, 3).m == 0


def test_canonicalize_suppresses_degree_two():
    # a -3- x -2- b with an unnamed degree-2 middle vertex
    t = LabeledTree.build(3, [(0, 2, 3), (2, 1, 2)], {0: "a", 1: "b"})
    c = canonicalize(t)
    assert c.nv == 2
    assert leaf_distance_matrix(c).get("a", "b") == 5
    assert is_canonical(c)


def test_canonicalize_merges_zero_interior_edges():
    # two hubs joined by a 0-edge collapse into one
    t = LabeledTree.build(6, [(4, 0, 1), (4, 1, 2), (5, 2, 3), (5, 3, 1),
                              (4, 5, 0)],
                          {0: "a", 1: "b", 2: "c", 3: "d"})
    c = canonicalize(t)
    assert c.nv == 5
    assert is_canonical(c)
    dm = leaf_distance_matrix(c)
    assert dm.get("a", "c") == 4
    assert dm.get("b", "d") == 3


def test_canonicalize_keeps_leaf_distances():
    rng = random.Random(99)
    for _ in range(150):
        t = random_tree(rng, rng.randint(2, 9))
        c = canonicalize(t)
        assert is_canonical(c)
        assert canonicalize(c) == c
        before = leaf_distance_matrix(t)
        after = leaf_distance_matrix(c)
        assert before.names == after.names
        assert before.dist == after.dist


def test_canonicalize_preserves_total_weight():
    # suppression adds weights, 0-edge contraction removes nothing
    rng = random.Random(5)
    for _ in range(60):
        t = random_tree(rng, rng.randint(2, 9))
        assert canonicalize(t).total_weight() == t.total_weight()


def test_canonical_trees_are_fixed_points():
    rng = random.Random(17)
    for _ in range(60):
        t = random_canonical_tree(rng, rng.randint(2, 6))
        assert is_canonical(t)
        assert canonicalize(t) == t


def test_restrict_keeps_distances():
    rng = random.Random(31)
    for _ in range(80):
        t = random_tree(rng, rng.randint(3, 9))
        names = t.leaf_names
        keep = sorted(rng.sample(names, rng.randint(1, len(names))))
        r = restrict(t, keep)
        assert r.leaf_names == keep
        dm_t = leaf_distance_matrix(t)
        dm_r = leaf_distance_matrix(r)
        for a in keep:
            for b in keep:
                assert dm_t.get(a, b) == dm_r.get(a, b)


def test_restrict_to_single_leaf():
    t = caterpillar_p4()
    r = restrict(t, ["c"])
    assert r.nv == 1
    assert r.leaf_names == ["c"]


def test_scale():
    t = caterpillar_p4()
    s = scale(t, 3)
    assert leaf_distance_matrix(s).get("a", "d") == 18
    assert explain(s, 6) == explain(t, 2)


def test_zero_discrete():
    assert is_zero_discrete(parse_newick("(a:1,b:1,c:1);"))
    assert not is_zero_discrete(parse_newick("(a:0,b:0,c:2);"))
    # 0-weight pendant edges are fine while all leaf distances stay positive
    assert is_zero_discrete(parse_newick("(a:0,b:1,c:2);"))


def test_is_canonical():
    assert is_canonical(parse_newick("(a:1,b:1,c:1);"))
    assert is_canonical(parse_newick("(b:0)a;"))        # 2-leaf, by definition
    bad_deg2 = LabeledTree.build(3, [(0, 2, 1), (2, 1, 1)],
                                 {0: "a", 1: "b"})
    assert not is_canonical(bad_deg2)
    zero_inner = LabeledTree.build(
        6, [(4, 0, 1), (4, 1, 1), (5, 2, 1), (5, 3, 1), (4, 5, 0)],
        {0: "a", 1: "b", 2: "c", 3: "d"})
    assert not is_canonical(zero_inner)


def test_tree_equality_ignores_vertex_numbering():
    a = LabeledTree.build(4, [(3, 0, 1), (3, 1, 2), (3, 2, 3)],
                          {0: "x", 1: "y", 2: "z"})
    b = LabeledTree.build(4, [(0, 1, 2), (0, 3, 1), (0, 2, 3)],
                          {1: "y", 2: "z", 3: "x"})
    assert a == b
    assert hash(a) == hash(b)
    c = LabeledTree.build(4, [(3, 0, 1), (3, 1, 2), (3, 2, 2)],
                          {0: "x", 1: "y", 2: "z"})
    assert a != c


def test_trees_with_same_shape_different_names_differ():
    a = parse_newick("(a:1,b:1,c:1);")
    b = parse_newick("(a:1,b:1,d:1);")
    assert a != b
