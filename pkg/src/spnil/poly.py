"""Sparse multivariate polynomials over Q(sqrt2).

A polynomial carries an immutable variable registry (a tuple of names) and a
dict mapping dense exponent tuples (length = registry size) to nonzero
FieldScalar coefficients.  Monomial comparisons use graded lexicographic
order: compare total degree first, then the exponent tuple lexicographically.
"""

from .field import FieldScalar, ONE

_ZERO = FieldScalar(0)


def grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("registry", "terms")

    def __init__(self, registry, terms=None):
        self.registry = tuple(registry)
        clean = {}
        if terms:
            width = len(self.registry)
            for exp, c in terms.items():
                if len(exp) != width:
                    raise ValueError("exponent width does not match registry")
                if c:
                    clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, registry):
        return cls(registry)

    @classmethod
    def constant(cls, registry, c):
        c = c if isinstance(c, FieldScalar) else FieldScalar(c)
        return cls(registry, {(0,) * len(tuple(registry)): c})

    @classmethod
    def variable(cls, registry, idx):
        registry = tuple(registry)
        exp = [0] * len(registry)
        exp[idx] = 1
        return cls(registry, {tuple(exp): ONE})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        """Maximal term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading(self):
        """(exponent, coefficient) of the graded-lex largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), _ZERO)

    def _check(self, other):
        if self.registry != other.registry:
            raise ValueError("registry mismatch")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, FieldScalar)):
            other = MultiPoly.constant(self.registry, other)
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp)
            s = c if s is None else s + c
            if s:
                terms[exp] = s
            elif exp in terms:
                del terms[exp]
        out = MultiPoly.__new__(MultiPoly)
        out.registry = self.registry
        out.terms = terms
        return out

    def __sub__(self, other):
        if isinstance(other, (int, FieldScalar)):
            other = MultiPoly.constant(self.registry, other)
        return self + (-other)

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.registry = self.registry
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def scale(self, c):
        c = c if isinstance(c, FieldScalar) else FieldScalar(c)
        if not c:
            return MultiPoly(self.registry)
        out = MultiPoly.__new__(MultiPoly)
        out.registry = self.registry
        out.terms = {e: c * v for e, v in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, FieldScalar)):
            return self.scale(other)
        self._check(other)
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(exp)
                p = c1 * c2
                s = p if s is None else s + p
                if s:
                    acc[exp] = s
                elif exp in acc:
                    del acc[exp]
        out = MultiPoly.__new__(MultiPoly)
        out.registry = self.registry
        out.terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = MultiPoly.constant(self.registry, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.registry == other.registry and self.terms == other.terms

    def __hash__(self):
        return hash((self.registry, frozenset(self.terms.items())))

    # -- calculus and substitution ------------------------------------------

    def partial(self, idx):
        terms = {}
        for exp, c in self.terms.items():
            k = exp[idx]
            if k == 0:
                continue
            e = list(exp)
            e[idx] = k - 1
            terms[tuple(e)] = c * k
        return MultiPoly(self.registry, terms)

    def eval(self, values):
        """Evaluate at a full vector of FieldScalar values."""
        if len(values) != len(self.registry):
            raise ValueError("value vector does not match registry")
        total = FieldScalar(0)
        for exp, c in self.terms.items():
            v = c
            for i, k in enumerate(exp):
                if k:
                    v = v * values[i] ** k
            total = total + v
        return total

    def subst(self, images):
        """Substitute images[i] (all in one common registry) for variable i."""
        if len(images) != len(self.registry):
            raise ValueError("image vector does not match registry")
        target = images[0].registry
        out = MultiPoly(target)
        for exp, c in self.terms.items():
            term = MultiPoly.constant(target, c)
            for i, k in enumerate(exp):
                for _ in range(k):
                    term = term * images[i]
            out = out + term
        return out

    def embed(self, registry, positions):
        """Remap into a wider registry; positions[i] is the new slot of var i."""
        registry = tuple(registry)
        width = len(registry)
        terms = {}
        for exp, c in self.terms.items():
            e = [0] * width
            for i, k in enumerate(exp):
                e[positions[i]] = k
            terms[tuple(e)] = c
        return MultiPoly(registry, terms)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[exp]
            mono = "·".join(
                f"{self.registry[i]}^{k}" if k > 1 else self.registry[i]
                for i, k in enumerate(exp)
                if k
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            else:
                bits.append(f"({c})·{mono}")
        return " + ".join(bits)

    __repr__ = __str__


def monomials(nvars, degree):
    """All exponent tuples of the given total degree, lexicographically."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for k in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - k):
            yield (k,) + rest


def count_monomials(nvars, degree):
    from math import comb

    return comb(nvars + degree - 1, degree)


def divide_by_linear(p, l):
    """Exact quotient p / l for homogeneous linear l; raises if not divisible."""
    if l.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if l.total_degree() != 1 or not l.is_homogeneous():
        raise ValueError("divisor must be homogeneous linear")
    if p.registry != l.registry:
        raise ValueError("registry mismatch")
    piv_exp, piv_coef = l.leading()
    piv = piv_exp.index(1)
    inv = piv_coef.inverse()
    quot = {}
    rem = dict(p.terms)
    while rem:
        exp = max(rem, key=grlex_key)
        if exp[piv] == 0:
            raise ValueError("polynomial is not divisible by the given linear form")
        c = rem[exp] * inv
        qexp = list(exp)
        qexp[piv] -= 1
        qexp = tuple(qexp)
        quot[qexp] = quot.get(qexp, _ZERO) + c
        # subtract c * qexp * l
        for lexp, lc in l.terms.items():
            texp = tuple(a + b for a, b in zip(qexp, lexp))
            s = rem.get(texp, _ZERO) - c * lc
            if s:
                rem[texp] = s
            elif texp in rem:
                del rem[texp]
    return MultiPoly(p.registry, quot)
