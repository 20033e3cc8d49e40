"""Weyl algebra on 2n generators and its oscillator module.

Generators x_1..x_n, y_1..y_n with [y_i, x_j] = delta_ij and everything else
commuting.  Elements are kept normal ordered (all x's left of all y's) as a
dict mapping (x-exponents, y-exponents) to FieldScalar coefficients.  The
oscillator module consists of (x_1...x_n)^(-1/2) times Laurent polynomials:
monomials with exponents in Z - 1/2, stored as doubled (odd) integers, on
which x_i acts by multiplication and y_i as d/dx_i.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .field import FieldScalar, ONE, HALF
from .poly import MultiPoly
from .splie import RootDatumC, ad_matrix, require_sp

_ZERO = FieldScalar(0)


class WeylElement:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for (xe, ye), c in terms.items():
                if len(xe) != n or len(ye) != n:
                    raise ValueError("exponent width does not match n")
                if any(k < 0 for k in xe) or any(k < 0 for k in ye):
                    raise ValueError("negative exponent")
                if c:
                    clean[(tuple(xe), tuple(ye))] = c
        self.terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls.constant(n, 1)

    @classmethod
    def constant(cls, n, c):
        c = c if isinstance(c, FieldScalar) else FieldScalar(c)
        z = (0,) * n
        return cls(n, {(z, z): c})

    @classmethod
    def xgen(cls, n, i):
        xe = [0] * n
        xe[i] = 1
        return cls(n, {(tuple(xe), (0,) * n): ONE})

    @classmethod
    def ygen(cls, n, i):
        ye = [0] * n
        ye[i] = 1
        return cls(n, {((0,) * n, tuple(ye)): ONE})

    def is_zero(self):
        return not self.terms

    def is_even(self):
        return all((sum(xe) + sum(ye)) % 2 == 0 for xe, ye in self.terms)

    def order(self):
        """Filtration degree: half the top total degree, rounded up."""
        if not self.terms:
            return 0
        return max((sum(xe) + sum(ye) + 1) // 2 for xe, ye in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(xe) + sum(ye) for xe, ye in self.terms)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("generator count mismatch")

    def __add__(self, other):
        if isinstance(other, (int, FieldScalar)):
            other = WeylElement.constant(self.n, other)
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key)
            s = c if s is None else s + c
            if s:
                terms[key] = s
            elif key in terms:
                del terms[key]
        return WeylElement(self.n, terms)

    def __sub__(self, other):
        if isinstance(other, (int, FieldScalar)):
            other = WeylElement.constant(self.n, other)
        return self + (-other)

    def __neg__(self):
        return WeylElement(self.n, {k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = c if isinstance(c, FieldScalar) else FieldScalar(c)
        return WeylElement(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        """Normal-ordered product via y^b x^c = sum_k k! C(b,k) C(c,k) x^(c-k) y^(b-k)."""
        if isinstance(other, (int, FieldScalar)):
            return self.scale(other)
        self._check(other)
        n = self.n
        acc = {}
        for (a, b), c1 in self.terms.items():
            for (cc, d), c2 in other.terms.items():
                base = c1 * c2
                # exchange y^b with x^cc one index at a time
                partial = [((), (), 1)]
                for i in range(n):
                    bi, ci = b[i], cc[i]
                    opts = [
                        (k, factorial(k) * comb(bi, k) * comb(ci, k))
                        for k in range(min(bi, ci) + 1)
                    ]
                    partial = [
                        (xs + (ci - k,), ys + (bi - k,), w * wk)
                        for xs, ys, w in partial
                        for k, wk in opts
                    ]
                for xs, ys, w in partial:
                    xe = tuple(ai + xi for ai, xi in zip(a, xs))
                    ye = tuple(yi + di for yi, di in zip(ys, d))
                    key = (xe, ye)
                    s = acc.get(key)
                    p = base * w
                    s = p if s is None else s + p
                    if s:
                        acc[key] = s
                    elif key in acc:
                        del acc[key]
        return WeylElement(n, acc)

    __rmul__ = __mul__

    def commutator(self, other):
        return self * other - other * self

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for xe, ye in sorted(self.terms, key=lambda k: (sum(k[0]) + sum(k[1]), k)):
            c = self.terms[(xe, ye)]
            mono = "".join(
                f"x{i+1}^{k}" if k > 1 else f"x{i+1}" for i, k in enumerate(xe) if k
            ) + "".join(
                f"y{i+1}^{k}" if k > 1 else f"y{i+1}" for i, k in enumerate(ye) if k
            )
            bits.append(f"({c}){mono}" if mono else f"({c})")
        return " + ".join(bits)

    __repr__ = __str__


def v_registry(n):
    """Registry for the commutative coordinate ring of V = F^(2n)."""
    return tuple(f"x{i+1}" for i in range(n)) + tuple(f"y{i+1}" for i in range(n))


def classical_comoment(m):
    """The quadratic function v -> 1/2 omega(m v, v) on V, as a MultiPoly.

    Coordinate functions follow the oscillator dictionary fixed by matching
    Poisson and Weyl brackets, {v_i*, v_{n+j}*} = delta_ij = [y_j, x_i]: the
    function v_i* is the registry symbol y_i and v_{n+i}* is x_i.
    """
    require_sp(m)
    size = m.size
    n = size // 2
    registry = v_registry(n)
    var = [MultiPoly.variable(registry, i) for i in range(size)]
    w = [var[n + i] for i in range(n)] + [var[i] for i in range(n)]
    mw = []
    for i in range(size):
        p = MultiPoly.zero(registry)
        for j in range(size):
            if m.entries[i][j]:
                p = p + w[j].scale(m.entries[i][j])
        mw.append(p)
    total = MultiPoly.zero(registry)
    for i in range(n):
        total = total + mw[i] * w[n + i] - mw[n + i] * w[i]
    return total.scale(HALF)


def symmetrize_quadratic(p):
    """Symmetrization of a degree <= 2 polynomial into the Weyl algebra.

    The first n registry slots map to x_i, the last n to y_i; the only
    noncommutativity correction is Sym(x_i y_i) = x_i y_i + 1/2.
    """
    width = len(p.registry)
    if width % 2:
        raise ValueError("registry must have even size")
    n = width // 2
    if p.total_degree() > 2:
        raise ValueError("polynomial degree exceeds 2")
    out = WeylElement.zero(n)
    for exp, c in p.terms.items():
        idx = [i for i, k in enumerate(exp) for _ in range(k)]
        if not idx:
            out = out + WeylElement.constant(n, c)
            continue
        xe, ye = [0] * n, [0] * n
        for i in idx:
            if i < n:
                xe[i] += 1
            else:
                ye[i - n] += 1
        term = WeylElement(n, {(tuple(xe), tuple(ye)): c})
        if len(idx) == 2 and idx[0] < n <= idx[1] and idx[1] - n == idx[0]:
            term = term + WeylElement.constant(n, c * HALF)
        out = out + term
    return out


def theta1(m):
    """Quadratic co-moment of m in sp(2n) inside the Weyl algebra.

    For blocks ((A, B), (C, -A^T)) the value is
    1/2 (sum 2 A_ij x_i y_j + B_ij x_i x_j - C_ij y_i y_j + Tr A).
    """
    require_sp(m)
    n = m.size // 2
    terms = {}
    z = (0,) * n

    def bump(xe, ye, c):
        key = (xe, ye)
        s = terms.get(key, _ZERO) + c
        if s:
            terms[key] = s
        elif key in terms:
            del terms[key]

    tr_a = _ZERO
    for i in range(n):
        tr_a = tr_a + m.entries[i][i]
        for j in range(n):
            a = m.entries[i][j]
            if a:
                xe, ye = [0] * n, [0] * n
                xe[i] += 1
                ye[j] += 1
                bump(tuple(xe), tuple(ye), a)
            b = m.entries[i][n + j]
            if b:
                xe = [0] * n
                xe[i] += 1
                xe[j] += 1
                bump(tuple(xe), z, b * HALF)
            cij = m.entries[n + i][j]
            if cij:
                ye = [0] * n
                ye[i] += 1
                ye[j] += 1
                bump(z, tuple(ye), -cij * HALF)
    if tr_a:
        bump(z, z, tr_a * HALF)
    return WeylElement(n, terms)


class LinearVectorField:
    """Derivation of the coordinate ring of sp(2n) with linear coefficients.

    Stored as the matrix of the induced map on basis labels: column k holds
    the sp_basis coordinates of the image of coordinate k, so commutators of
    fields are plain matrix commutators.
    """

    __slots__ = ("n", "mat")

    def __init__(self, n, mat):
        self.n = n
        self.mat = [list(row) for row in mat]

    def commutator(self, other):
        if self.n != other.n:
            raise ValueError("rank mismatch")
        a, b = self.mat, other.mat
        size = len(a)
        ab = [[sum((a[i][k] * b[k][j] for k in range(size)), _ZERO)
               for j in range(size)] for i in range(size)]
        ba = [[sum((b[i][k] * a[k][j] for k in range(size)), _ZERO)
               for j in range(size)] for i in range(size)]
        return LinearVectorField(
            self.n,
            [[ab[i][j] - ba[i][j] for j in range(size)] for i in range(size)],
        )

    def apply(self, p):
        """Act as a derivation on a polynomial in the sp coordinate registry."""
        size = len(self.mat)
        if len(p.registry) != size:
            raise ValueError("registry does not match sp dimension")
        out = MultiPoly.zero(p.registry)
        for k in range(size):
            dk = p.partial(k)
            if dk.is_zero():
                continue
            image = MultiPoly.zero(p.registry)
            for l in range(size):
                if self.mat[l][k]:
                    image = image + MultiPoly.variable(p.registry, l).scale(self.mat[l][k])
            out = out + dk * image
        return out

    def __eq__(self, other):
        if not isinstance(other, LinearVectorField):
            return NotImplemented
        return self.n == other.n and self.mat == other.mat

    def __hash__(self):
        return hash((self.n, tuple(tuple(r) for r in self.mat)))


def theta0(m):
    """Adjoint-action vector field on sp(2n): coordinate labels move by
    b -> [m, b], which makes the assignment a Lie algebra homomorphism."""
    require_sp(m)
    n = m.size // 2
    return LinearVectorField(n, ad_matrix(m, n))


class OscVector:
    """Element of the oscillator module: exponents are half odd integers,
    stored doubled (so the vacuum is (-1, ..., -1), meaning each x_i^(-1/2))."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != n:
                    raise ValueError("exponent width does not match n")
                if any(e % 2 == 0 for e in exp):
                    raise ValueError("doubled exponents must be odd")
                if c:
                    clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def vacuum(cls, n):
        return cls(n, {(-1,) * n: ONE})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("rank mismatch")
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp)
            s = c if s is None else s + c
            if s:
                terms[exp] = s
            elif exp in terms:
                del terms[exp]
        return OscVector(self.n, terms)

    def __sub__(self, other):
        return self + other.scale(FieldScalar(-1))

    def scale(self, c):
        c = c if isinstance(c, FieldScalar) else FieldScalar(c)
        return OscVector(self.n, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, OscVector):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})·x^{tuple(Fraction(e, 2) for e in exp)}"
            for exp, c in sorted(self.terms.items())
        )


def osc_apply(w, vec):
    """Apply a normal-ordered Weyl element to an oscillator vector."""
    if w.n != vec.n:
        raise ValueError("rank mismatch")
    n = w.n
    acc = {}
    for (xe, ye), c in w.terms.items():
        for exp, a in vec.terms.items():
            num = 1
            shift = 0
            for i in range(n):
                b = ye[i]
                e = exp[i]
                for j in range(b):
                    num *= e - 2 * j
                shift += b
            mult = FieldScalar(Fraction(num, 2 ** shift))
            coeff = c * a * mult
            if not coeff:
                continue
            new = tuple(e - 2 * ye[i] + 2 * xe[i] for i, e in enumerate(exp))
            s = acc.get(new)
            s = coeff if s is None else s + coeff
            if s:
                acc[new] = s
            elif new in acc:
                del acc[new]
    return OscVector(n, acc)


@lru_cache(maxsize=None)
def _datum(n):
    return RootDatumC(n)


def weight_zero_scalar(n, root):
    """Scalar by which theta1(e_a) theta1(e_-a) acts on the vacuum line."""
    opp = _datum(n).opposite(root)
    w = theta1(root.vec) * theta1(opp.vec)
    image = osc_apply(w, OscVector.vacuum(n))
    vac = (-1,) * n
    for exp, c in image.terms.items():
        if exp != vac:
            raise ValueError("operator does not preserve the vacuum line")
    return image.terms.get(vac, _ZERO)
