"""The compiled kernel and its pure-Python twin must agree bit-for-bit."""

import os
import subprocess
import sys

import pytest

from exact2rel import _kernel, _speedups_py
from exact2rel.oracle import _prepare, enumerate_topologies

compiled = pytest.importorskip("exact2rel._speedups")


def shapes(max_leaves=5):
    for n in range(2, max_leaves + 1):
        for topo in enumerate_topologies(n):
            yield topo, _prepare(topo)


def test_kernel_selection_honours_environment():
    if os.environ.get("EXACT2REL_PURE") == "1":
        assert not _kernel.USING_COMPILED
    else:
        assert _kernel.USING_COMPILED


def test_pure_flag_forces_fallback():
    env = dict(os.environ, EXACT2REL_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from exact2rel._kernel import USING_COMPILED; print(USING_COMPILED)"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("zero_discrete", [False, True])
def test_relation_masks_agree(k, zero_discrete):
    for topo, sh in shapes(5):
        for min_w in (sh.min_w_canonical, sh.min_w_free):
            a = compiled.enumerate_relation_masks(
                len(sh.paths), sh.paths, min_w, k + 1, k, zero_discrete)
            b = _speedups_py.enumerate_relation_masks(
                len(sh.paths), sh.paths, min_w, k + 1, k, zero_discrete)
            assert a == b


def test_matching_weightings_agree():
    for topo, sh in shapes(4):
        full = (1 << len(sh.paths)) - 1
        for target in (0, full, full >> 1):
            a = compiled.matching_weightings(
                len(sh.paths), sh.paths, sh.min_w_canonical, 3, 2, False,
                target)
            b = _speedups_py.matching_weightings(
                len(sh.paths), sh.paths, sh.min_w_canonical, 3, 2, False,
                target)
            assert sorted(a) == sorted(b)


@pytest.mark.parametrize("zero_discrete", [False, True])
def test_rooted_arc_masks_agree(zero_discrete):
    for topo, sh in shapes(4):
        n = topo.n_leaves
        a = compiled.enumerate_rooted_arc_masks(
            n, sh.pair_index, sh.paths, sh.min_w_canonical, 3, 2,
            zero_discrete, True, sh.interior_roots, sh.edge_roots)
        b = _speedups_py.enumerate_rooted_arc_masks(
            n, sh.pair_index, sh.paths, sh.min_w_canonical, 3, 2,
            zero_discrete, True, sh.interior_roots, sh.edge_roots)
        assert a == b


def test_rooted_arc_masks_agree_five_leaves_spot():
    # the 5-leaf sweep is slower, so spot-check a handful of shapes
    topos = enumerate_topologies(5)
    for topo in topos[:6] + topos[-3:]:
        sh = _prepare(topo)
        a = compiled.enumerate_rooted_arc_masks(
            5, sh.pair_index, sh.paths, sh.min_w_canonical, 3, 2,
            False, True, sh.interior_roots, sh.edge_roots)
        b = _speedups_py.enumerate_rooted_arc_masks(
            5, sh.pair_index, sh.paths, sh.min_w_canonical, 3, 2,
            False, True, sh.interior_roots, sh.edge_roots)
        assert a == b
