"""Kernel backend selection.

The compiled extension is used when available; set ``MATLEVEL_PURE=1`` to
force the pure-Python fallback. ``qroot2_rank`` routes through the
compiled int64 path only for small integer matrices where Bareiss
intermediates cannot overflow.
"""

import os

from . import _pure

if os.environ.get("MATLEVEL_PURE"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND

exchange_witness = _impl.exchange_witness
scan_families = _impl.scan_families
canonical_form = _impl.canonical_form

# int64 Bareiss is safe while products of Hadamard-bound minors fit;
# 8x8 with component magnitudes <= 2 does, larger or non-integer input
# goes pure.
_C_RANK_DIM = 8
_C_RANK_ENTRY = 2


def qroot2_rank(rows):
    if _impl is _pure:
        return _pure.qroot2_rank(rows)
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if nrows > _C_RANK_DIM or ncols > _C_RANK_DIM:
        return _pure.qroot2_rank(rows)
    for row in rows:
        for a, b in row:
            if (
                not isinstance(a, int)
                or not isinstance(b, int)
                or abs(a) > _C_RANK_ENTRY
                or abs(b) > _C_RANK_ENTRY
            ):
                return _pure.qroot2_rank(rows)
    return _impl.qroot2_rank(rows)
