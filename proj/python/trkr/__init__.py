"""Exact transverse link homology of closed braids.

Thin wrapper around the C++ core: braid words are strings like ``"b=3; 1 -2"``
(``b`` strands, signed generator letters), resolved words like ``"b=3; t1 t2"``.
"""

import json as _json

try:
    from ._core import (
        TrkrError,
        apply_move,
        compare,
        cone_check,
        homology_json,
        homology_text,
        oracle,
        self_linking,
        stab_check,
    )
except ImportError:  # in-tree runs against a plain CMake build directory
    from _core import (
        TrkrError,
        apply_move,
        compare,
        cone_check,
        homology_json,
        homology_text,
        oracle,
        self_linking,
        stab_check,
    )

__all__ = [
    "TrkrError",
    "apply_move",
    "compare",
    "cone_check",
    "homology",
    "homology_json",
    "homology_text",
    "oracle",
    "self_linking",
    "stab_check",
]


def homology(braid, N=1, kmax=-1, threads=1):
    """Full homology report as a dict (components, sln dims, audits)."""
    return _json.loads(homology_json(braid, N=N, kmax=kmax, threads=threads))
