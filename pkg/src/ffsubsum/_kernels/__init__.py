"""Scan kernels: minimum Hamming distance of words against a codeword table.

Two interchangeable backends: a Cython extension built at install time
and a pure-Python fallback.  The compiled one is picked automatically
when present; set FFSUBSUM_FORCE_PURE=1 to insist on the fallback.
Words and tables are packed as bytes, one symbol encoding per byte, so
the byte layout restricts these kernels to q <= 256 and n <= 255 (larger
codes take the generic paths in rscodes).

benchmarks/bench_kernels.py compares the two backends.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("FFSUBSUM_FORCE_PURE") == "1":
    _impl = pure
    BACKEND = "pure"
else:
    try:
        from . import _distscan as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = pure
        BACKEND = "pure"

min_distance = _impl.min_distance
min_distance_batch = _impl.min_distance_batch
coset_min_distances = _impl.coset_min_distances

__all__ = [
    "BACKEND",
    "min_distance",
    "min_distance_batch",
    "coset_min_distances",
    "pure",
]
