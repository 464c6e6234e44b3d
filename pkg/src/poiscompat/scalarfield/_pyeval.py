"""Pure-Python evaluation kernel.

Semantically identical to the Cython kernel `_speedups` (same operation
order, same libm calls), so results agree bit for bit; only speed
differs.  Selected by `backend` when the extension is unavailable or
POISCOMPAT_PURE is set.
"""

from __future__ import annotations

import math

from .program import (
    ERR_DIV_ZERO,
    ERR_NEG_FRAC_POW,
    ERR_NEG_SQRT,
    ERR_NONFINITE,
    ERR_ZERO_NEG_POW,
    OP_ADD,
    OP_CONST,
    OP_DIV,
    OP_MUL,
    OP_POWI,
    OP_POWR,
    OP_VAR,
)


def _ipow(b: float, n: int):
    """Exponentiation by squaring; None signals 0**negative."""
    if n < 0:
        if b == 0.0:
            return None
        b = 1.0 / b
        n = -n
    r = 1.0
    while True:
        if n & 1:
            r *= b
        n >>= 1
        if not n:
            return r
        b *= b


def run_program(code, arg, arg2, consts, pts, out, err_code, err_instr,
                stack_size, abs_vars):
    code = code.tolist()
    arg = arg.tolist()
    arg2 = arg2.tolist()
    consts = consts.tolist()
    rows = pts.tolist()
    n_instr = len(code)
    stack = [0.0] * stack_size

    for t, row in enumerate(rows):
        sp = 0
        err = 0
        err_at = -1
        for i in range(n_instr):
            op = code[i]
            if op == OP_CONST:
                stack[sp] = consts[arg[i]]
                sp += 1
                continue
            if op == OP_VAR:
                v = row[arg[i]]
                stack[sp] = abs(v) if abs_vars else v
                sp += 1
                continue
            if op == OP_ADD:
                sp -= 1
                v = stack[sp - 1] + stack[sp]
            elif op == OP_MUL:
                sp -= 1
                v = stack[sp - 1] * stack[sp]
            elif op == OP_DIV:
                sp -= 1
                d = stack[sp]
                if d == 0.0:
                    err, err_at = ERR_DIV_ZERO, i
                    break
                v = stack[sp - 1] / d
            elif op == OP_POWI:
                b = stack[sp - 1]
                r = _ipow(b, arg[i])
                if r is None:
                    err, err_at = ERR_ZERO_NEG_POW, i
                    break
                v = r
            elif op == OP_POWR:
                b = stack[sp - 1]
                e = arg2[i]
                if b < 0.0:
                    err, err_at = ERR_NEG_FRAC_POW, i
                    break
                if b == 0.0 and e < 0.0:
                    err, err_at = ERR_ZERO_NEG_POW, i
                    break
                v = math.pow(b, e)
            else:  # OP_SQRT
                b = stack[sp - 1]
                if b < 0.0:
                    err, err_at = ERR_NEG_SQRT, i
                    break
                v = math.sqrt(b)
            if not math.isfinite(v):
                err, err_at = ERR_NONFINITE, i
                break
            stack[sp - 1] = v
        if err:
            out[t] = math.nan
            err_code[t] = err
            err_instr[t] = err_at
        else:
            out[t] = stack[0]
            err_code[t] = 0
            err_instr[t] = -1
