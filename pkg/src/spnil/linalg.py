"""Exact linear algebra over Q(sqrt2): dense solvers and sparse row reduction.

Dense matrices are lists of FieldScalar rows and stay small (a few dozen rows)
so plain Gaussian elimination is fine.  The sparse reducer backs the graded
ideal-dimension computations, where rows are dicts keyed by exponent tuples;
an all-rational matrix drops to an integer path with gcd normalization, which
keeps coefficient growth tame without changing any rank.
"""

from fractions import Fraction
from math import gcd

from .field import FieldScalar
from .poly import grlex_key, monomials

_ZERO = FieldScalar(0)


# -- dense ----------------------------------------------------------------


def _copy(mat):
    return [list(row) for row in mat]


def dense_rank(mat):
    if not mat:
        return 0
    a = _copy(mat)
    rows, cols = len(a), len(a[0])
    rank = 0
    for col in range(cols):
        piv = None
        for r in range(rank, rows):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = a[rank][col].inverse()
        a[rank] = [v * inv for v in a[rank]]
        for r in range(rows):
            if r != rank and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def solve(mat, rhs):
    """One exact solution of mat*x = rhs, or None if inconsistent.

    Free variables are set to zero.
    """
    rows = len(mat)
    if rows == 0:
        return []
    cols = len(mat[0])
    a = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    pivot_cols = []
    rank = 0
    for col in range(cols):
        piv = None
        for r in range(rank, rows):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = a[rank][col].inverse()
        a[rank] = [v * inv for v in a[rank]]
        for r in range(rows):
            if r != rank and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[rank])]
        pivot_cols.append(col)
        rank += 1
        if rank == rows:
            break
    for r in range(rank, rows):
        if a[r][cols]:
            return None
    x = [FieldScalar(0)] * cols
    for r, col in enumerate(pivot_cols):
        x[col] = a[r][cols]
    return x


def nullspace(mat):
    """Basis of the exact kernel of mat (list of column vectors)."""
    rows = len(mat)
    if rows == 0:
        return []
    cols = len(mat[0])
    a = _copy(mat)
    pivot_cols = []
    rank = 0
    for col in range(cols):
        piv = None
        for r in range(rank, rows):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = a[rank][col].inverse()
        a[rank] = [v * inv for v in a[rank]]
        for r in range(rows):
            if r != rank and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[rank])]
        pivot_cols.append(col)
        rank += 1
        if rank == rows:
            break
    free_cols = [c for c in range(cols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [FieldScalar(0)] * cols
        v[fc] = FieldScalar(1)
        for r, pc in enumerate(pivot_cols):
            v[pc] = -a[r][fc]
        basis.append(v)
    return basis


def inverse(mat):
    n = len(mat)
    a = [list(row) + [FieldScalar(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


# -- sparse ----------------------------------------------------------------


def _int_rows(rows):
    """Rational rows as integer rows (cleared denominators), else None."""
    out = []
    for row in rows:
        ints = {}
        lcm = 1
        for c in row.values():
            if not c.is_rational():
                return None
            lcm = lcm * c.den // gcd(lcm, c.den)
        for k, c in row.items():
            ints[k] = c.an * (lcm // c.den)
        out.append(ints)
    return out


def _reduce_int(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def _sparse_rank_int(rows, keyfn):
    pivots = {}
    for row in rows:
        r = dict(row)
        while r:
            col = max(r, key=keyfn)
            hit = pivots.get(col)
            if hit is None:
                pivots[col] = _reduce_int(r)
                break
            pval = hit[col]
            c = r[col]
            nxt = {k: v * pval for k, v in r.items()}
            for k, v in hit.items():
                s = nxt.get(k, 0) - v * c
                if s:
                    nxt[k] = s
                else:
                    nxt.pop(k, None)
            r = _reduce_int(nxt)
    return len(pivots)


def _sparse_rank_field(rows, keyfn):
    pivots = {}
    for row in rows:
        r = dict(row)
        while r:
            col = max(r, key=keyfn)
            hit = pivots.get(col)
            if hit is None:
                inv = r[col].inverse()
                pivots[col] = {k: v * inv for k, v in r.items()}
                break
            c = r[col]
            for k, v in hit.items():
                s = r.get(k, _ZERO) - c * v
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
    return len(pivots)


def sparse_rank(rows, keyfn=grlex_key):
    """Exact rank of sparse rows (dicts col -> FieldScalar)."""
    ints = _int_rows(rows)
    if ints is not None:
        return _sparse_rank_int(ints, keyfn)
    return _sparse_rank_field(rows, keyfn)


def truncated_ideal_dim(gens, d, multiplier_filter=None):
    """Dimension of the degree-d slice of the ideal generated by gens.

    All generators must be nonzero and homogeneous.  The slice is spanned by
    the products g*m over monomials m with deg(g*m) = d; the span's dimension
    comes from exact row reduction.  multiplier_filter, if given, keeps only
    multiplier monomials whose exponent tuple passes the predicate.
    """
    if not isinstance(d, int) or d < 0:
        raise ValueError("degree must be a nonnegative integer")
    if not gens:
        return 0
    registry = gens[0].registry
    nvars = len(registry)
    rows = []
    for g in gens:
        if g.registry != registry:
            raise ValueError("registry mismatch among generators")
        if g.is_zero():
            raise ValueError("zero generator")
        if not g.is_homogeneous():
            raise ValueError("generators must be homogeneous")
        dg = g.total_degree()
        if dg > d:
            continue
        for mexp in monomials(nvars, d - dg):
            if multiplier_filter is not None and not multiplier_filter(mexp):
                continue
            row = {}
            for gexp, c in g.terms.items():
                row[tuple(a + b for a, b in zip(gexp, mexp))] = c
            rows.append(row)
    return sparse_rank(rows)
