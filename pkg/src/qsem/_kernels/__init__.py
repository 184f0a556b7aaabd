"""Kernel selection and the shared triplet coalescer.

The compiled extension (`qsem._kernels._accel`, Cython) is preferred; the
numpy lane (`qsem._kernels.fallback`) is selected automatically when the
extension was not built. Set QSEM_KERNEL=python or QSEM_KERNEL=compiled to
force a lane; forcing `compiled` when the extension is missing raises at
import, which is the honest failure mode for benchmarks.
"""

import os

import numpy as np

from . import fallback

_choice = os.environ.get("QSEM_KERNEL", "").strip().lower()
if _choice not in ("", "python", "compiled"):
    raise ImportError(
        f"QSEM_KERNEL={_choice!r} is not a kernel lane (use 'python' or 'compiled')"
    )

if _choice == "python":
    _impl = fallback
    BACKEND = "python"
else:
    try:
        from . import _accel as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise
        _impl = fallback
        BACKEND = "python"

hal_pairs = _impl.hal_pairs
centered_pairs = _impl.centered_pairs
global_pairs = _impl.global_pairs


def active_backend() -> str:
    return BACKEND


def coalesce(rows, cols, weights, n):
    """Sum duplicate (row, col) triplets and return them sorted row-major.

    Pure integer arithmetic; the output is a canonical COO representation
    independent of input order, which makes the two kernel lanes
    interchangeable bit for bit.
    """
    if rows.size == 0:
        return (
            np.empty(0, dtype=np.int32),
            np.empty(0, dtype=np.int32),
            np.empty(0, dtype=np.int64),
        )
    keys = rows.astype(np.int64) * n + cols.astype(np.int64)
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    weights = weights[order]
    head = np.empty(keys.size, dtype=bool)
    head[0] = True
    np.not_equal(keys[1:], keys[:-1], out=head[1:])
    starts = np.nonzero(head)[0]
    sums = np.add.reduceat(weights, starts)
    ukeys = keys[starts]
    return (ukeys // n).astype(np.int32), (ukeys % n).astype(np.int32), sums
