# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython evaluation kernel; the hot loop of sampled residual checks.

Must stay semantically identical to `_pyeval.run_program` (same
operation order, same libm calls): the two backends are interchangeable
and results agree bit for bit.
"""

from libc.math cimport NAN, fabs, isfinite, pow as c_pow, sqrt as c_sqrt

import numpy as np

cdef enum:
    OP_CONST = 0
    OP_VAR = 1
    OP_ADD = 2
    OP_MUL = 3
    OP_DIV = 4
    OP_POWI = 5
    OP_POWR = 6
    OP_SQRT = 7

cdef enum:
    ERR_DIV_ZERO = 1
    ERR_NEG_SQRT = 2
    ERR_NEG_FRAC_POW = 3
    ERR_ZERO_NEG_POW = 4
    ERR_NONFINITE = 5


cdef inline double _ipow(double b, int n, int* err) nogil:
    cdef double r = 1.0
    if n < 0:
        if b == 0.0:
            err[0] = ERR_ZERO_NEG_POW
            return 0.0
        b = 1.0 / b
        n = -n
    while True:
        if n & 1:
            r *= b
        n >>= 1
        if not n:
            return r
        b *= b


def run_program(int[::1] code, int[::1] arg, double[::1] arg2,
                double[::1] consts, double[:, ::1] pts, double[::1] out,
                int[::1] err_code, int[::1] err_instr, int stack_size,
                bint abs_vars):
    cdef Py_ssize_t n_pts = pts.shape[0]
    cdef Py_ssize_t n_instr = code.shape[0]
    cdef double[::1] stack = np.empty(stack_size, dtype=np.float64)
    cdef Py_ssize_t t, i
    cdef int sp, op, err, err_at, ierr
    cdef double v, b, d

    with nogil:
        for t in range(n_pts):
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
                    v = pts[t, arg[i]]
                    stack[sp] = fabs(v) if abs_vars else v
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
                        err = ERR_DIV_ZERO
                        err_at = i
                        break
                    v = stack[sp - 1] / d
                elif op == OP_POWI:
                    b = stack[sp - 1]
                    ierr = 0
                    v = _ipow(b, arg[i], &ierr)
                    if ierr:
                        err = ierr
                        err_at = i
                        break
                elif op == OP_POWR:
                    b = stack[sp - 1]
                    if b < 0.0:
                        err = ERR_NEG_FRAC_POW
                        err_at = i
                        break
                    if b == 0.0 and arg2[i] < 0.0:
                        err = ERR_ZERO_NEG_POW
                        err_at = i
                        break
                    v = c_pow(b, arg2[i])
                else:  # OP_SQRT
                    b = stack[sp - 1]
                    if b < 0.0:
                        err = ERR_NEG_SQRT
                        err_at = i
                        break
                    v = c_sqrt(b)
                if not isfinite(v):
                    err = ERR_NONFINITE
                    err_at = i
                    break
                stack[sp - 1] = v
            if err:
                out[t] = NAN
                err_code[t] = err
                err_instr[t] = err_at
            else:
                out[t] = stack[0]
                err_code[t] = 0
                err_instr[t] = -1
