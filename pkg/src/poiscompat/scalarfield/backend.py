"""Evaluation backend selection.

Prefers the compiled kernel; falls back to the pure-Python twin when
the extension is missing or POISCOMPAT_PURE is set (any non-empty
value).  Both kernels produce bit-identical results.
"""

from __future__ import annotations

import os

import numpy as np

from .program import Program

if os.environ.get("POISCOMPAT_PURE"):
    from . import _pyeval as _kernel

    HAVE_EXT = False
else:
    try:
        from . import _speedups as _kernel  # type: ignore[no-redef]

        HAVE_EXT = True
    except ImportError:
        from . import _pyeval as _kernel  # type: ignore[no-redef]

        HAVE_EXT = False

BACKEND_NAME = "compiled" if HAVE_EXT else "pure-python"


def run(prog: Program, pts: np.ndarray, abs_vars: bool = False):
    """Evaluate a compiled program at an (n, 3) array of points.

    Returns (values, err_code, err_instr); failed points carry NaN and a
    nonzero error code with the offending instruction index.
    """
    pts = np.ascontiguousarray(pts, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise ValueError(f"points must have shape (n, 3), got {pts.shape}")
    n = pts.shape[0]
    out = np.empty(n, dtype=np.float64)
    err_code = np.empty(n, dtype=np.int32)
    err_instr = np.empty(n, dtype=np.int32)
    consts = prog.abs_consts if abs_vars else prog.consts
    _kernel.run_program(prog.code, prog.arg, prog.arg2, consts, pts, out,
                        err_code, err_instr, max(prog.stack_size, 1), abs_vars)
    return out, err_code, err_instr
