"""Selects the enumeration kernels: the compiled extension when built,
otherwise the pure-Python twins.  Set ``EXACT2REL_PURE=1`` to force the
pure versions (used by the equivalence tests and the benchmark)."""

from __future__ import annotations

import os

if os.environ.get("EXACT2REL_PURE") == "1":
    from . import _speedups_py as _impl
    USING_COMPILED = False
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
        USING_COMPILED = True
    except ImportError:
        from . import _speedups_py as _impl
        USING_COMPILED = False

enumerate_relation_masks = _impl.enumerate_relation_masks
matching_weightings = _impl.matching_weightings
enumerate_rooted_arc_masks = _impl.enumerate_rooted_arc_masks
