"""Exact arithmetic in the real quadratic field Q(sqrt2).

Scalars are a + b*sqrt2 with a, b exact rationals.  Internally a scalar is
kept as an integer triple (an, bn, den) meaning (an + bn*sqrt2)/den with
den > 0 and gcd(an, bn, den) = 1, so equality and hashing are structural.
"""

from fractions import Fraction
from math import gcd


class FieldScalar:
    __slots__ = ("an", "bn", "den")

    def __init__(self, rational=0, root2=0):
        a = Fraction(rational)
        b = Fraction(root2)
        da, db = a.denominator, b.denominator
        d = da * db // gcd(da, db)
        self._set(a.numerator * (d // da), b.numerator * (d // db), d)

    def _set(self, an, bn, den):
        if den < 0:
            an, bn, den = -an, -bn, -den
        g = gcd(gcd(an, bn), den)
        if g > 1:
            an //= g
            bn //= g
            den //= g
        self.an = an
        self.bn = bn
        self.den = den

    @classmethod
    def _raw(cls, an, bn, den):
        s = object.__new__(cls)
        s._set(an, bn, den)
        return s

    @property
    def rational_part(self):
        return Fraction(self.an, self.den)

    @property
    def root2_part(self):
        return Fraction(self.bn, self.den)

    def is_zero(self):
        return self.an == 0 and self.bn == 0

    def is_rational(self):
        return self.bn == 0

    def __bool__(self):
        return self.an != 0 or self.bn != 0

    @staticmethod
    def _coerce(x):
        if isinstance(x, FieldScalar):
            return x
        if isinstance(x, int):
            return FieldScalar._raw(x, 0, 1)
        if isinstance(x, Fraction):
            return FieldScalar._raw(x.numerator, 0, x.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldScalar._raw(
            self.an * o.den + o.an * self.den,
            self.bn * o.den + o.bn * self.den,
            self.den * o.den,
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldScalar._raw(
            self.an * o.den - o.an * self.den,
            self.bn * o.den - o.bn * self.den,
            self.den * o.den,
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldScalar._raw(-self.an, -self.bn, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldScalar._raw(
            self.an * o.an + 2 * self.bn * o.bn,
            self.an * o.bn + self.bn * o.an,
            self.den * o.den,
        )

    __rmul__ = __mul__

    def inverse(self):
        # (a + b*sqrt2)^-1 = (a - b*sqrt2)/(a^2 - 2 b^2); the norm vanishes
        # only at zero since sqrt2 is irrational.
        nrm = self.an * self.an - 2 * self.bn * self.bn
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        return FieldScalar._raw(self.den * self.an, -self.den * self.bn, nrm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = FieldScalar._raw(1, 0, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        return FieldScalar._raw(self.an, -self.bn, self.den)

    def sign(self):
        """Sign of the real number a + b*sqrt2, computed exactly."""
        a, b = self.an, self.bn
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with 2 b^2
        if a * a == 2 * b * b:  # impossible over Q, kept for clarity
            return 0
        if a > 0:
            return 1 if a * a > 2 * b * b else -1
        return -1 if a * a > 2 * b * b else 1

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.an == o.an and self.bn == o.bn and self.den == o.den

    def __hash__(self):
        return hash((self.an, self.bn, self.den))

    def __str__(self):
        if self.bn == 0:
            return str(Fraction(self.an, self.den))
        root = Fraction(self.bn, self.den)
        mag = abs(root)
        rpart = "√2" if mag == 1 else f"{mag}√2"
        sgn = "-" if root < 0 else ""
        if self.an == 0:
            return sgn + rpart
        head = str(Fraction(self.an, self.den))
        return head + ("-" if root < 0 else "+") + rpart

    def __repr__(self):
        return f"FieldScalar({self})"


ZERO = FieldScalar(0)
ONE = FieldScalar(1)
SQRT2 = FieldScalar(0, 1)
HALF = FieldScalar(Fraction(1, 2))


def fs(rational=0, root2=0):
    """Shorthand constructor; accepts ints, Fractions or 'p/q' strings."""
    if isinstance(rational, str):
        rational = Fraction(rational)
    if isinstance(root2, str):
        root2 = Fraction(root2)
    return FieldScalar(rational, root2)
