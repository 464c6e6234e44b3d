"""Expression trees for smooth scalar functions on R^3.

Node kinds: exact-rational constants, the coordinates x/y/z, n-ary sums
and products, quotients, rational powers, and square roots.  Trees are
immutable; the factory functions (`const`, `add`, `mul`, `div`, `power`,
`sqrt_of`) apply only local rewrites (zero/one elimination, constant
folding, power collapsing) -- identity questions are settled by sampling
or exact polynomial expansion, never by a normal form.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

AXES = ("x", "y", "z")

_NumberLike = int | float | Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"constant must be finite, got {value}")
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"cannot build a constant from {type(value).__name__}")


def axis_index(axis) -> int:
    """Normalize 'x'|'y'|'z' or 0|1|2 to an index."""
    if isinstance(axis, str):
        try:
            return AXES.index(axis)
        except ValueError:
            raise ValueError(f"axis must be one of {AXES}, got {axis!r}") from None
    if axis in (0, 1, 2):
        return axis
    raise ValueError(f"axis must be one of {AXES} or 0..2, got {axis!r}")


class ScalarField:
    """Base node. Supports +, -, *, /, ** with fields and numbers."""

    __slots__ = ("_hash",)

    def _key(self):
        raise NotImplementedError

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if type(self) is not type(other) or self._hash != other._hash:
            return False
        return self._key() == other._key()

    def __str__(self):
        return emit(self)

    def __repr__(self):
        return f"<{type(self).__name__} {emit(self)}>"

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, mul(_MINUS_ONE, _coerce(other)))

    def __rsub__(self, other):
        return add(_coerce(other), mul(_MINUS_ONE, self))

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, _coerce(other))

    def __rtruediv__(self, other):
        return div(_coerce(other), self)

    def __pow__(self, exponent):
        return power(self, exponent)

    def __neg__(self):
        return mul(_MINUS_ONE, self)


def _coerce(value) -> ScalarField:
    if isinstance(value, ScalarField):
        return value
    return const(value)


class Const(ScalarField):
    __slots__ = ("value",)

    def __init__(self, value: Fraction):
        self.value = value
        self._hash = hash(("c", value))

    def _key(self):
        return self.value


class Var(ScalarField):
    __slots__ = ("axis",)

    def __init__(self, axis: int):
        self.axis = axis
        self._hash = hash(("v", axis))

    def _key(self):
        return self.axis

    @property
    def name(self) -> str:
        return AXES[self.axis]


class Add(ScalarField):
    __slots__ = ("terms",)

    def __init__(self, terms: tuple):
        self.terms = terms
        self._hash = hash(("+",) + tuple(t._hash for t in terms))

    def _key(self):
        return self.terms


class Mul(ScalarField):
    __slots__ = ("factors",)

    def __init__(self, factors: tuple):
        self.factors = factors
        self._hash = hash(("*",) + tuple(f._hash for f in factors))

    def _key(self):
        return self.factors


class Div(ScalarField):
    __slots__ = ("num", "den")

    def __init__(self, num: ScalarField, den: ScalarField):
        self.num = num
        self.den = den
        self._hash = hash(("/", num._hash, den._hash))

    def _key(self):
        return (self.num, self.den)


class Pow(ScalarField):
    __slots__ = ("base", "exponent")

    def __init__(self, base: ScalarField, exponent: Fraction):
        self.base = base
        self.exponent = exponent
        self._hash = hash(("^", base._hash, exponent))

    def _key(self):
        return (self.base, self.exponent)


class Sqrt(ScalarField):
    __slots__ = ("arg",)

    def __init__(self, arg: ScalarField):
        self.arg = arg
        self._hash = hash(("sqrt", arg._hash))

    def _key(self):
        return self.arg


def const(value: _NumberLike) -> Const:
    return Const(_as_fraction(value))


_ZERO = Const(Fraction(0))
_ONE = Const(Fraction(1))
_MINUS_ONE = Const(Fraction(-1))

X = Var(0)
Y = Var(1)
Z = Var(2)
COORDS = (X, Y, Z)


def variable(axis) -> Var:
    return COORDS[axis_index(axis)]


def add(*terms) -> ScalarField:
    flat = []
    total = Fraction(0)
    for t in terms:
        t = _coerce(t)
        if isinstance(t, Const):
            total += t.value
        elif isinstance(t, Add):
            for s in t.terms:
                # nested Adds are already flat and hold at most one trailing constant
                if isinstance(s, Const):
                    total += s.value
                else:
                    flat.append(s)
        else:
            flat.append(t)
    if total != 0:
        flat.append(Const(total))
    if not flat:
        return _ZERO
    if len(flat) == 1:
        return flat[0]
    return Add(tuple(flat))


def mul(*factors) -> ScalarField:
    flat = []
    coeff = Fraction(1)
    for f in factors:
        f = _coerce(f)
        if isinstance(f, Const):
            coeff *= f.value
        elif isinstance(f, Mul):
            for g in f.factors:
                if isinstance(g, Const):
                    coeff *= g.value
                else:
                    flat.append(g)
        else:
            flat.append(f)
    if coeff == 0:
        return _ZERO
    if not flat:
        return Const(coeff)
    if coeff != 1:
        flat.insert(0, Const(coeff))
    if len(flat) == 1:
        return flat[0]
    return Mul(tuple(flat))


def div(num, den) -> ScalarField:
    num = _coerce(num)
    den = _coerce(den)
    if isinstance(den, Const) and den.value == 1:
        return num
    if isinstance(num, Const) and num.value == 0:
        return _ZERO
    if isinstance(num, Const) and isinstance(den, Const) and den.value != 0:
        return Const(num.value / den.value)
    return Div(num, den)


def _iroot(n: int, q: int):
    """Exact integer q-th root of n >= 0, or None."""
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / q))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**q == n:
            return cand
    return None


def _fraction_pow_exact(c: Fraction, e: Fraction):
    """c**e as an exact Fraction, or None when not representable."""
    p, q = e.numerator, e.denominator
    if c == 0:
        return Fraction(0) if p > 0 else None
    if q == 1:
        return c**p
    if c < 0:
        return None
    rn = _iroot(c.numerator, q)
    rd = _iroot(c.denominator, q)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd) ** p


def power(base, exponent) -> ScalarField:
    base = _coerce(base)
    if not isinstance(exponent, (int, Fraction)):
        raise TypeError("exponent must be an exact rational")
    exponent = Fraction(exponent)
    if exponent == 0:
        return _ONE
    if exponent == 1:
        return base
    if isinstance(base, Pow):
        return power(base.base, base.exponent * exponent)
    if isinstance(base, Const):
        folded = _fraction_pow_exact(base.value, exponent)
        if folded is not None:
            return Const(folded)
    return Pow(base, exponent)


def sqrt_of(arg) -> ScalarField:
    arg = _coerce(arg)
    if isinstance(arg, Const) and arg.value >= 0:
        folded = _fraction_pow_exact(arg.value, Fraction(1, 2))
        if folded is not None:
            return Const(folded)
    return Sqrt(arg)


def partial(f: ScalarField, axis) -> ScalarField:
    """Exact symbolic partial derivative of `f` along `axis`."""
    k = axis_index(axis)
    return _partial(f, k)


def _partial(f: ScalarField, k: int) -> ScalarField:
    if isinstance(f, Const):
        return _ZERO
    if isinstance(f, Var):
        return _ONE if f.axis == k else _ZERO
    if isinstance(f, Add):
        return add(*[_partial(t, k) for t in f.terms])
    if isinstance(f, Mul):
        terms = []
        fs = f.factors
        for i in range(len(fs)):
            terms.append(mul(*fs[:i], _partial(fs[i], k), *fs[i + 1 :]))
        return add(*terms)
    if isinstance(f, Div):
        u, v = f.num, f.den
        return div(add(mul(_partial(u, k), v), mul(-1, u, _partial(v, k))), power(v, 2))
    if isinstance(f, Pow):
        return mul(const(f.exponent), power(f.base, f.exponent - 1), _partial(f.base, k))
    if isinstance(f, Sqrt):
        return div(_partial(f.arg, k), mul(2, sqrt_of(f.arg)))
    raise TypeError(f"cannot differentiate {type(f).__name__}")


def gradient(f: ScalarField):
    """(df/dx, df/dy, df/dz)."""
    return tuple(_partial(f, k) for k in range(3))


def laplacian(f: ScalarField) -> ScalarField:
    """Sum of the three pure second partials."""
    return add(*[_partial(_partial(f, k), k) for k in range(3)])


# --- canonical text form ---------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4


def _frac_str(v: Fraction) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def _prec(f: ScalarField) -> int:
    if isinstance(f, Add):
        return _PREC_ADD
    if isinstance(f, (Mul, Div)):
        return _PREC_MUL
    if isinstance(f, Pow):
        return _PREC_POW
    if isinstance(f, Const):
        if f.value < 0:
            return _PREC_ADD  # needs parens almost everywhere
        return _PREC_MUL if f.value.denominator != 1 else _PREC_ATOM
    return _PREC_ATOM


def _render(f: ScalarField) -> str:
    if isinstance(f, Const):
        return _frac_str(f.value)
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Add):
        parts = []
        for t in f.terms:
            s = _render(t)
            if parts:
                parts.append("-" + s[1:] if s.startswith("-") else "+" + s)
            else:
                parts.append(s)
        return "".join(parts)
    if isinstance(f, Mul):
        factors = list(f.factors)
        prefix = ""
        if isinstance(factors[0], Const) and factors[0].value < 0 and len(factors) > 1:
            prefix = "-"
            head = -factors[0].value
            factors = factors[1:] if head == 1 else [Const(head)] + factors[1:]
        parts = []
        for i, g in enumerate(factors):
            s = _render(g)
            # non-leading quotients would re-associate: c*a/b != c*(a/b)
            if _prec(g) < _PREC_MUL or (i > 0 and isinstance(g, Div)):
                s = f"({s})"
            parts.append(s)
        return prefix + "*".join(parts)
    if isinstance(f, Div):
        num = _render(f.num)
        if _prec(f.num) < _PREC_MUL:
            num = f"({num})"
        den = _render(f.den)
        if _prec(f.den) <= _PREC_MUL:
            den = f"({den})"
        return f"{num}/{den}"
    if isinstance(f, Pow):
        base = _render(f.base)
        if _prec(f.base) < _PREC_ATOM:
            base = f"({base})"
        e = f.exponent
        exp = str(e.numerator) if e.denominator == 1 else f"({e.numerator}/{e.denominator})"
        return f"{base}^{exp}"
    if isinstance(f, Sqrt):
        return f"sqrt({_render(f.arg)})"
    raise TypeError(f"cannot render {type(f).__name__}")


def emit(f: ScalarField) -> str:
    """Canonical text form; parse(emit(f)) reproduces the tree."""
    return _render(f)
