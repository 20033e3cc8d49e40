"""The symplectic Lie algebra sp(2n) in its defining representation.

Matrices act on column vectors of length 2n.  The symplectic form on V is
omega(u, v) = u^T J v with J = ((0, I), (-I, 0)), so m is in sp(2n) exactly
when m^T J + J m = 0; in block terms ((A, B), (C, D)) that is D = -A^T with
B, C symmetric.  The invariant pairing is the trace form Tr(ab).
"""

from fractions import Fraction
from functools import lru_cache

from .field import FieldScalar, ONE, SQRT2
from . import linalg

_ZERO = FieldScalar(0)
_INV_SQRT2 = FieldScalar(0, Fraction(1, 2))  # 1/sqrt2 = sqrt2/2


def _coerce(x):
    return x if isinstance(x, FieldScalar) else FieldScalar(x)


class MatF:
    """Immutable square matrix over Q(sqrt2)."""

    __slots__ = ("entries", "size")

    def __init__(self, entries):
        rows = tuple(tuple(_coerce(v) for v in row) for row in entries)
        self.size = len(rows)
        for row in rows:
            if len(row) != self.size:
                raise ValueError("matrix must be square")
        self.entries = rows

    @classmethod
    def zero(cls, size):
        return cls([[0] * size for _ in range(size)])

    @classmethod
    def identity(cls, size):
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def unit(cls, size, i, j, c=1):
        rows = [[0] * size for _ in range(size)]
        rows[i][j] = c
        return cls(rows)

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def _check(self, other):
        if self.size != other.size:
            raise ValueError("size mismatch")

    def __add__(self, other):
        self._check(other)
        return MatF([[a + b for a, b in zip(r1, r2)]
                     for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        return MatF([[a - b for a, b in zip(r1, r2)]
                     for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return MatF([[-a for a in row] for row in self.entries])

    def scale(self, c):
        c = _coerce(c)
        return MatF([[c * a for a in row] for row in self.entries])

    def __matmul__(self, other):
        self._check(other)
        n = self.size
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out.append([sum((a * b for a, b in zip(row, col)), _ZERO) for col in cols])
        return MatF(out)

    def transpose(self):
        return MatF(list(zip(*self.entries)))

    def trace(self):
        return sum((self.entries[i][i] for i in range(self.size)), _ZERO)

    def is_zero(self):
        return all(not v for row in self.entries for v in row)

    def apply(self, vec):
        if len(vec) != self.size:
            raise ValueError("size mismatch")
        return [sum((a * v for a, v in zip(row, vec)), _ZERO) for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, MatF):
            return NotImplemented
        return self.size == other.size and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return "\n".join("[" + "  ".join(str(v) for v in row) + "]"
                         for row in self.entries)

    __repr__ = __str__


class SymplecticVector:
    """Vector in V = F^(2n) with the standard symplectic pairing."""

    __slots__ = ("n", "coords")

    def __init__(self, coords):
        self.coords = tuple(_coerce(v) for v in coords)
        if len(self.coords) % 2 != 0:
            raise ValueError("symplectic vectors have even length")
        self.n = len(self.coords) // 2

    def __eq__(self, other):
        if not isinstance(other, SymplecticVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self):
        return all(not v for v in self.coords)

    def __repr__(self):
        return "(" + ", ".join(str(v) for v in self.coords) + ")"


def omega_matrix(n):
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[i][n + i] = 1
        rows[n + i][i] = -1
    return MatF(rows)


def omega(u, v):
    """Standard symplectic pairing u^T J v on coordinate vectors."""
    cu = u.coords if isinstance(u, SymplecticVector) else tuple(_coerce(x) for x in u)
    cv = v.coords if isinstance(v, SymplecticVector) else tuple(_coerce(x) for x in v)
    if len(cu) != len(cv) or len(cu) % 2:
        raise ValueError("size mismatch")
    n = len(cu) // 2
    total = _ZERO
    for i in range(n):
        total = total + cu[i] * cv[n + i] - cu[n + i] * cv[i]
    return total


def is_sp(m):
    n2 = m.size
    if n2 % 2:
        return False
    j = omega_matrix(n2 // 2)
    return (m.transpose() @ j + j @ m).is_zero()


def require_sp(m):
    if not is_sp(m):
        raise ValueError("matrix is not in sp(2n)")


def bracket(a, b, strict=False):
    if strict:
        require_sp(a)
        require_sp(b)
    a._check(b)
    return a @ b - b @ a


def trace_pair(a, b):
    a._check(b)
    return (a @ b).trace()


def raw_square(v):
    """The matrix v v^T J, a rank-one element of sp(2n).

    Pairing: trace_pair(-1/2 * raw_square(v), x) = 1/2 * omega(x v, v),
    the quadratic co-moment value of x at v.
    """
    coords = v.coords if isinstance(v, SymplecticVector) else [_coerce(x) for x in v]
    m = len(coords)
    if m % 2:
        raise ValueError("vector must have even length")
    n = m // 2
    # row vector v^T J
    vtj = [-coords[n + j] for j in range(n)] + [coords[j] for j in range(n)]
    return MatF([[vi * wj for wj in vtj] for vi in coords])


@lru_cache(maxsize=None)
def sp_basis(n):
    """Basis of sp(2n), integer entries, in a fixed deterministic order.

    Order: diagonal H_i = E_ii - E_(n+i)(n+i); off-diagonal A-block
    E_ij - E_(j+n)(i+n) for i != j; symmetric B-block E_i(n+i) and
    E_i(n+j) + E_j(n+i) for i < j; symmetric C-block transposes of those.
    """
    size = 2 * n
    basis = []
    for i in range(n):
        basis.append(MatF.unit(size, i, i) - MatF.unit(size, n + i, n + i))
    for i in range(n):
        for j in range(n):
            if i != j:
                basis.append(MatF.unit(size, i, j) - MatF.unit(size, n + j, n + i))
    for i in range(n):
        basis.append(MatF.unit(size, i, n + i))
    for i in range(n):
        for j in range(i + 1, n):
            basis.append(MatF.unit(size, i, n + j) + MatF.unit(size, j, n + i))
    for i in range(n):
        basis.append(MatF.unit(size, n + i, i))
    for i in range(n):
        for j in range(i + 1, n):
            basis.append(MatF.unit(size, n + i, j) + MatF.unit(size, n + j, i))
    assert len(basis) == 2 * n * n + n
    return tuple(basis)


def sp_dim(n):
    return 2 * n * n + n


@lru_cache(maxsize=None)
def dual_basis(n):
    """Trace-form dual basis: trace_pair(dual[k], sp_basis[l]) = delta_kl."""
    basis = sp_basis(n)
    gram = [[trace_pair(a, b) for b in basis] for a in basis]
    ginv = linalg.inverse(gram)
    dual = []
    for k in range(len(basis)):
        m = MatF.zero(2 * n)
        for l, b in enumerate(basis):
            if ginv[k][l]:
                m = m + b.scale(ginv[k][l])
        dual.append(m)
    return tuple(dual)


def coords_of(m, n):
    """Coordinates of m in sp_basis(n), via the trace-dual basis."""
    return [trace_pair(d, m) for d in dual_basis(n)]


def mat_from_coords(coeffs, n):
    basis = sp_basis(n)
    m = MatF.zero(2 * n)
    for c, b in zip(coeffs, basis):
        if c:
            m = m + b.scale(c)
    return m


def ad_matrix(y, n):
    """Matrix of x -> [y, x] on sp(2n) in the sp_basis coordinates."""
    basis = sp_basis(n)
    cols = [coords_of(bracket(y, b), n) for b in basis]
    size = len(basis)
    return [[cols[k][m] for k in range(size)] for m in range(size)]


def centralizer_dim(y):
    """Dimension of the centralizer of y inside sp(2n)."""
    require_sp(y)
    n = y.size // 2
    ad = ad_matrix(y, n)
    return sp_dim(n) - linalg.dense_rank(ad)


def is_nilpotent(m):
    p = m
    for _ in range(m.size - 1):
        if p.is_zero():
            return True
        p = p @ m
    return p.is_zero()


class Root:
    """A root of type C_n: coordinates in the orthonormal Cartan basis,
    a length tag, and the chosen root vector."""

    __slots__ = ("coeffs", "length", "vec")

    def __init__(self, coeffs, length, vec):
        self.coeffs = tuple(coeffs)
        self.length = length
        self.vec = vec

    def key(self):
        return tuple((c.an, c.bn, c.den) for c in self.coeffs)

    def __repr__(self):
        return "Root(" + ", ".join(str(c) for c in self.coeffs) + f"; {self.length})"


class RootDatumC:
    """Cartan-Weyl data for sp(2n).

    rbasis[i] = (E_ii - E_(n+i)(n+i))/sqrt2 is trace-orthonormal.  Roots are
    recorded by their coordinates in that basis: short (r_i +- r_j)/sqrt2 with
    squared length 1, long +-sqrt2 r_i with squared length 2; 2n^2 in all.
    Root vectors are normalized so that trace_pair(e_a, e_-a) = 1, with
    e_-a = e_a^T.
    """

    def __init__(self, n):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        size = 2 * n
        self.rbasis = tuple(
            (MatF.unit(size, i, i) - MatF.unit(size, n + i, n + i)).scale(_INV_SQRT2)
            for i in range(n)
        )
        pos = []
        for i in range(n):
            for j in range(i + 1, n):
                coeffs = [_ZERO] * n
                coeffs[i] = _INV_SQRT2
                coeffs[j] = _INV_SQRT2
                vec = (MatF.unit(size, i, n + j) + MatF.unit(size, j, n + i)).scale(_INV_SQRT2)
                pos.append(Root(coeffs, "short", vec))
                coeffs = [_ZERO] * n
                coeffs[i] = _INV_SQRT2
                coeffs[j] = -_INV_SQRT2
                vec = (MatF.unit(size, i, j) - MatF.unit(size, n + j, n + i)).scale(_INV_SQRT2)
                pos.append(Root(coeffs, "short", vec))
        for i in range(n):
            coeffs = [_ZERO] * n
            coeffs[i] = SQRT2
            pos.append(Root(coeffs, "long", MatF.unit(size, i, n + i)))
        self.positive_roots = tuple(pos)
        neg = [Root([-c for c in r.coeffs], r.length, r.vec.transpose()) for r in pos]
        self.roots = self.positive_roots + tuple(neg)
        self._by_key = {r.key(): r for r in self.roots}

    def opposite(self, root):
        key = tuple(((-c).an, (-c).bn, (-c).den) for c in root.coeffs)
        return self._by_key[key]

    @staticmethod
    def pairing(r1, r2):
        """Inner product of roots through the orthonormal Cartan basis."""
        total = _ZERO
        for a, b in zip(r1.coeffs, r2.coeffs):
            total = total + a * b
        return total
