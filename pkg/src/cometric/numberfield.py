"""Exact arithmetic in a real algebraic number field.

Used only by the validation fallback for schemes whose eigenvalues are
irrational (cycles, icosahedron); the fast path stays purely rational.
Elements wrap sympy ``ANP`` values from ``QQ.algebraic_field`` so all
arithmetic and equality tests are exact.
"""

import sympy
from gmpy2 import mpq
from sympy import QQ


def _to_sympy_rational(x):
    q = mpq(x)
    return sympy.Rational(int(q.numerator), int(q.denominator))


class NumberField:
    """Q(alpha_1, ..., alpha_k) for real algebraic generators."""

    def __init__(self, generators):
        self.generators = list(generators)
        self.K = QQ.algebraic_field(*self.generators)

    def from_sympy(self, expr):
        if expr.is_Rational:
            return FieldElement(self, self.K.convert(expr))
        return FieldElement(self, self.K.from_sympy(expr))

    def from_rational(self, x):
        return FieldElement(self, self.K.convert(_to_sympy_rational(x)))

    def __repr__(self):
        return f"NumberField({self.generators!r})"


class FieldElement:
    """Immutable exact element of a NumberField."""

    __slots__ = ("field", "anp", "_sympy")

    def __init__(self, field, anp):
        self.field = field
        self.anp = anp
        self._sympy = None

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise TypeError("elements of different fields")
            return other.anp
        if isinstance(other, (int, mpq)):
            return self.field.K.convert(_to_sympy_rational(other))
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.anp + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.anp - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, o - self.anp)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.anp * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.anp / o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, o / self.anp)

    def __neg__(self):
        return FieldElement(self.field, -self.anp)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.field.K.one
        base = self.anp
        e = n
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return FieldElement(self.field, result)

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return self.anp != self.field.K.zero

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.anp == o

    def __hash__(self):
        return hash(self.to_sympy())

    def as_rational(self):
        """mpq value when the element is rational, else None."""
        rep = self.anp.rep if hasattr(self.anp, "rep") else None
        if rep is not None and len(rep) <= 1:
            if not rep:
                return mpq(0)
            c = rep[0]
            return mpq(int(c.numerator), int(c.denominator))
        expr = self.to_sympy()
        if expr.is_Rational:
            return mpq(int(expr.p), int(expr.q))
        return None

    def to_sympy(self):
        if self._sympy is None:
            self._sympy = self.field.K.to_sympy(self.anp)
        return self._sympy

    def sort_key(self):
        """Deterministic numeric key for canonical orderings."""
        return self.to_sympy().evalf(40)

    def __repr__(self):
        return f"FieldElement({self.to_sympy()})"


def scalar_sort_key(x):
    """Numeric sort key working for both rationals and field elements."""
    if isinstance(x, FieldElement):
        return sympy.Float(x.sort_key(), 40)
    return sympy.Float(_to_sympy_rational(x), 40)
