"""Compile expression trees to flat stack programs.

Batch evaluation at sampled points dominates the runtime of residual
verification, so trees are flattened once into postorder opcode arrays
and run by either the Cython kernel or its pure-Python twin (see
`backend`).  Instruction index maps back to the originating subtree for
domain-violation reporting.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import expr

OP_CONST = 0
OP_VAR = 1
OP_ADD = 2
OP_MUL = 3
OP_DIV = 4
OP_POWI = 5
OP_POWR = 6
OP_SQRT = 7

ERR_NONE = 0
ERR_DIV_ZERO = 1
ERR_NEG_SQRT = 2
ERR_NEG_FRAC_POW = 3
ERR_ZERO_NEG_POW = 4
ERR_NONFINITE = 5

ERROR_REASONS = {
    ERR_DIV_ZERO: "division by zero",
    ERR_NEG_SQRT: "square root of a negative value",
    ERR_NEG_FRAC_POW: "fractional power of a negative base",
    ERR_ZERO_NEG_POW: "zero base raised to a negative power",
    ERR_NONFINITE: "non-finite result",
}

_MAX_INT_EXP = 2**31 - 1


class Program:
    __slots__ = ("code", "arg", "arg2", "consts", "abs_consts", "stack_size", "nodes")

    def __init__(self, code, arg, arg2, consts, stack_size, nodes):
        self.code = np.asarray(code, dtype=np.int32)
        self.arg = np.asarray(arg, dtype=np.int32)
        self.arg2 = np.asarray(arg2, dtype=np.float64)
        self.consts = np.asarray(consts, dtype=np.float64)
        self.abs_consts = np.abs(self.consts)
        self.stack_size = stack_size
        self.nodes = nodes

    def __len__(self):
        return len(self.code)


@lru_cache(maxsize=2048)
def compile_field(f: expr.ScalarField) -> Program:
    """Flatten `f` into a postorder stack program (cached per tree)."""
    code: list[int] = []
    arg: list[int] = []
    arg2: list[float] = []
    consts: list[float] = []
    nodes: list[expr.ScalarField] = []
    depth = 0
    max_depth = 0

    def push(node, op, a=0, a2=0.0):
        nonlocal depth, max_depth
        code.append(op)
        arg.append(a)
        arg2.append(a2)
        nodes.append(node)
        if op in (OP_CONST, OP_VAR):
            depth += 1
            max_depth = max(max_depth, depth)
        elif op in (OP_ADD, OP_MUL, OP_DIV):
            depth -= 1

    def emit(node):
        if isinstance(node, expr.Const):
            consts.append(float(node.value))
            push(node, OP_CONST, len(consts) - 1)
        elif isinstance(node, expr.Var):
            push(node, OP_VAR, node.axis)
        elif isinstance(node, expr.Add):
            emit(node.terms[0])
            for t in node.terms[1:]:
                emit(t)
                push(node, OP_ADD)
        elif isinstance(node, expr.Mul):
            emit(node.factors[0])
            for g in node.factors[1:]:
                emit(g)
                push(node, OP_MUL)
        elif isinstance(node, expr.Div):
            emit(node.num)
            emit(node.den)
            push(node, OP_DIV)
        elif isinstance(node, expr.Pow):
            emit(node.base)
            e = node.exponent
            if e.denominator == 1:
                if abs(e.numerator) > _MAX_INT_EXP:
                    raise ValueError(f"integer exponent {e} out of range")
                push(node, OP_POWI, e.numerator)
            else:
                push(node, OP_POWR, 0, float(e))
        elif isinstance(node, expr.Sqrt):
            emit(node.arg)
            push(node, OP_SQRT)
        else:
            raise TypeError(f"cannot compile {type(node).__name__}")

    emit(f)
    return Program(code, arg, arg2, consts, max_depth, nodes)
