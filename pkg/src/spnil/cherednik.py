"""Dunkl-type operators for the hyperoctahedral group W = (Z/2)^n x| S_n.

Polynomials live on the Cartan subalgebra in coordinates t_1..t_n dual to the
orthonormal basis r_i, so the type-C roots act through signed permutations:
long roots flip one sign, short roots swap two coordinates with or without a
double sign flip.  The coupling constant is one value per root length.

The Dunkl operator in direction y is

    T_y p = d_y p - sum_(a > 0) c(a) <a, y> (p - s_a p)/a,

equal to the all-roots form with a 1/2 prefactor because the a and -a
summands agree.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .field import FieldScalar
from .poly import MultiPoly, divide_by_linear
from .splie import RootDatumC
from .weylosc import weight_zero_scalar

_ZERO = FieldScalar(0)


@dataclass(frozen=True)
class Params:
    """Coupling constants, one for each root length."""

    c_long: FieldScalar
    c_short: FieldScalar

    @classmethod
    def of(cls, c_long, c_short):
        return cls(
            c_long if isinstance(c_long, FieldScalar) else FieldScalar(c_long),
            c_short if isinstance(c_short, FieldScalar) else FieldScalar(c_short),
        )

    def value(self, root):
        return self.c_long if root.length == "long" else self.c_short


SINGULAR = Params.of(Fraction(-1, 4), Fraction(-1, 2))


@dataclass(frozen=True)
class SignedPerm:
    """w sends t_i to signs[i] * t_perm[i]."""

    perm: tuple
    signs: tuple

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (1,) * n)

    def compose(self, other):
        """self after other: act(compose(self, other)) = act(self) o act(other)."""
        n = len(self.perm)
        if len(other.perm) != n:
            raise ValueError("rank mismatch")
        perm = tuple(self.perm[other.perm[i]] for i in range(n))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(n))
        return SignedPerm(perm, signs)

    def inverse(self):
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i in range(n):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return SignedPerm(tuple(perm), tuple(signs))


def w_act(w, p):
    """Action on polynomials: t_i -> signs[i] t_perm[i], extended to terms."""
    n = len(p.registry)
    if len(w.perm) != n:
        raise ValueError("rank mismatch")
    terms = {}
    for exp, c in p.terms.items():
        out = [0] * n
        flip = 1
        for i, e in enumerate(exp):
            if e:
                out[w.perm[i]] += e
                if w.signs[i] < 0 and e % 2:
                    flip = -flip
        key = tuple(out)
        val = c if flip > 0 else -c
        s = terms.get(key)
        s = val if s is None else s + val
        if s:
            terms[key] = s
        elif key in terms:
            del terms[key]
    return MultiPoly(p.registry, terms)


def reflection(root):
    """The reflection s_a as a signed permutation."""
    n = len(root.coeffs)
    support = [i for i, c in enumerate(root.coeffs) if c]
    if len(support) == 1:
        signs = [1] * n
        signs[support[0]] = -1
        return SignedPerm(tuple(range(n)), tuple(signs))
    if len(support) == 2:
        i, j = support
        perm = list(range(n))
        perm[i], perm[j] = j, i
        signs = [1] * n
        if root.coeffs[i].sign() == root.coeffs[j].sign():
            signs[i] = signs[j] = -1
        return SignedPerm(tuple(perm), tuple(signs))
    raise ValueError("not a type-C root")


def h_registry(n):
    return tuple(f"t{i+1}" for i in range(n))


@lru_cache(maxsize=None)
def _datum(n):
    return RootDatumC(n)


def root_linear(root, registry):
    p = MultiPoly.zero(registry)
    for i, c in enumerate(root.coeffs):
        if c:
            p = p + MultiPoly.variable(registry, i).scale(c)
    return p


def dunkl_apply(direction, p, params):
    """Dunkl operator in coordinate direction e_direction applied to p."""
    n = len(p.registry)
    out = p.partial(direction)
    for root in _datum(n).positive_roots:
        a_y = root.coeffs[direction]
        if not a_y:
            continue
        diff = p - w_act(reflection(root), p)
        if diff.is_zero():
            continue
        quot = divide_by_linear(diff, root_linear(root, p.registry))
        out = out - quot.scale(params.value(root) * a_y)
    return out


def check_hc_relation(x_idx, y_idx, p, params):
    """[T_y, t_x] = <x, y> - sum_a c(a) <a, y> <x, a^dual> s_a, applied to p."""
    n = len(p.registry)
    x_poly = MultiPoly.variable(p.registry, x_idx)
    lhs = dunkl_apply(y_idx, x_poly * p, params) - x_poly * dunkl_apply(y_idx, p, params)
    rhs = p if x_idx == y_idx else MultiPoly.zero(p.registry)
    datum = _datum(n)
    for root in datum.positive_roots:
        a_y = root.coeffs[y_idx]
        a_x = root.coeffs[x_idx]
        if not a_y or not a_x:
            continue
        # <x, a^dual> = 2 <x, a> / (a, a)
        norm = RootDatumC.pairing(root, root)
        coeff = params.value(root) * a_y * (FieldScalar(2) * a_x / norm)
        rhs = rhs - w_act(reflection(root), p).scale(coeff)
    return lhs == rhs


def dunkl_commute(i_idx, j_idx, p, params):
    ij = dunkl_apply(i_idx, dunkl_apply(j_idx, p, params), params)
    ji = dunkl_apply(j_idx, dunkl_apply(i_idx, p, params), params)
    return ij == ji


@dataclass(frozen=True)
class FormalRadialOperator:
    """Laplacian minus a sum of coeff/alpha^2 over merged +-root pairs.

    Coefficients are keyed by the positive representative's coordinate key;
    zero coefficients are dropped, so equality is structural.
    """

    laplacian: bool
    coeffs: tuple  # sorted tuple of (root key, FieldScalar)

    @classmethod
    def from_dict(cls, laplacian, coeff_dict):
        items = tuple(sorted((k, v) for k, v in coeff_dict.items() if v))
        return cls(laplacian, items)


def build_Lc(params, n):
    """Radial side of the spherical Calogero-Moser operator at coupling c:
    Delta - sum over +- pairs of c(a)(c(a)+1)(a,a)/a^2."""
    coeffs = {}
    for root in _datum(n).positive_roots:
        c = params.value(root)
        val = c * (c + 1) * RootDatumC.pairing(root, root)
        if val:
            coeffs[root.key()] = val
    return FormalRadialOperator.from_dict(True, coeffs)


def oscillator_radial_operator(n):
    """Delta minus the vacuum-line scalars of theta1(e_a) theta1(e_-a),
    summed over all roots and merged over +- pairs."""
    datum = _datum(n)
    coeffs = {}
    for root in datum.positive_roots:
        s = weight_zero_scalar(n, root) + weight_zero_scalar(n, datum.opposite(root))
        if s:
            coeffs[root.key()] = s
    return FormalRadialOperator.from_dict(True, coeffs)


def radial_match(n):
    """The oscillator scalars reproduce the radial operator exactly at the
    coupling (-1/4, -1/2)."""
    return oscillator_radial_operator(n) == build_Lc(SINGULAR, n)
