"""The almost-commuting scheme of sp(2n) and its nilpotent subscheme.

Points are triples (x, y, i) with x, y in sp(2n) and i in V = F^(2n), subject
to [x, y] + i i^T J = 0; the nilpotent subscheme adds the even characteristic
coefficients of y.  Everything here is symbolic-exact: ideals live in a
polynomial registry with one variable per trace-dual coordinate of x and y
plus one per coordinate of i, all in degree 1.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .field import FieldScalar, HALF
from .poly import MultiPoly, count_monomials
from . import linalg
from .splie import (
    MatF,
    RootDatumC,
    bracket,
    coords_of,
    dual_basis,
    is_nilpotent,
    mat_from_coords,
    omega,
    raw_square,
    sp_basis,
    sp_dim,
    trace_pair,
)
from .weylosc import classical_comoment
from .orbits import nilpotent_rep, sl2_complete

_ZERO = FieldScalar(0)


@dataclass(frozen=True)
class SchemePoint:
    n: int
    x: MatF
    y: MatF
    i: tuple


def moment2(point):
    """[x, y] + raw_square(i); zero exactly on the scheme."""
    return bracket(point.x, point.y) + raw_square(point.i)


def full_registry(n):
    nn = sp_dim(n)
    return (
        tuple(f"x{k}" for k in range(nn))
        + tuple(f"y{k}" for k in range(nn))
        + tuple(f"i{a}" for a in range(2 * n))
    )


def _generic(registry, offset, n):
    """Generic sp(2n) matrix: entries linear in registry slots offset+k."""
    basis = sp_basis(n)
    size = 2 * n
    rows = [[MultiPoly.zero(registry) for _ in range(size)] for _ in range(size)]
    for k, b in enumerate(basis):
        var = MultiPoly.variable(registry, offset + k)
        for i in range(size):
            for j in range(size):
                if b.entries[i][j]:
                    rows[i][j] = rows[i][j] + var.scale(b.entries[i][j])
    return rows


def _pm_mul(a, b, registry):
    size = len(a)
    out = [[MultiPoly.zero(registry) for _ in range(size)] for _ in range(size)]
    for i in range(size):
        for k in range(size):
            if a[i][k].is_zero():
                continue
            for j in range(size):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def _pm_trace(a, registry):
    t = MultiPoly.zero(registry)
    for i in range(len(a)):
        t = t + a[i][i]
    return t


def _raw_square_symbolic(registry, offset, n):
    size = 2 * n
    u = [MultiPoly.variable(registry, offset + a) for a in range(size)]
    vtj = [-u[n + j] for j in range(n)] + [u[j] for j in range(n)]
    return [[u[i] * vtj[j] for j in range(size)] for i in range(size)]


def _minors2(m, registry):
    size = len(m)
    out = []
    for r1 in range(size):
        for r2 in range(r1 + 1, size):
            for c1 in range(size):
                for c2 in range(c1 + 1, size):
                    out.append(m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1])
    return out


def _char_coeffs(m, registry, size):
    """Elementary symmetric functions e_1..e_size of a polynomial matrix,
    via traces of powers and Newton's identities."""
    powers = m
    traces = []
    for _ in range(size):
        traces.append(_pm_trace(powers, registry))
        powers = _pm_mul(powers, m, registry)
    es = [MultiPoly.constant(registry, 1)]
    for k in range(1, size + 1):
        acc = MultiPoly.zero(registry)
        sign = 1
        for i in range(1, k + 1):
            term = es[k - i] * traces[i - 1]
            acc = acc + (term if sign > 0 else -term)
            sign = -sign
        es.append(acc.scale(Fraction(1, k)))
    return es[1:]


def ideal_generators(kind, n):
    """Generators for the graded ideals of the construction.

    "I": trace-dual coordinates of [x, y] + raw_square(i), degree 2, in the
         full (x, y, i) registry.
    "J": 2x2 minors of the generic commutator [x, y], degree 4, x-y registry.
    "K": 2x2 minors of a generic sp matrix, degree 2, x registry.
    "NIL": even characteristic coefficients of y, degrees 2, 4, ..., 2n,
         y registry.  (Odd ones vanish identically on sp.)
    """
    nn = sp_dim(n)
    if kind == "I":
        registry = full_registry(n)
        x = _generic(registry, 0, n)
        y = _generic(registry, nn, n)
        comm = _pm_sub(_pm_mul(x, y, registry), _pm_mul(y, x, registry))
        sq = _raw_square_symbolic(registry, 2 * nn, n)
        total = _pm_add(comm, sq)
        gens = []
        for d in dual_basis(n):
            g = MultiPoly.zero(registry)
            for i in range(2 * n):
                for j in range(2 * n):
                    if d.entries[i][j]:
                        g = g + total[j][i].scale(d.entries[i][j])
            gens.append(g)
        return gens
    if kind == "J":
        registry = tuple(f"x{k}" for k in range(nn)) + tuple(f"y{k}" for k in range(nn))
        x = _generic(registry, 0, n)
        y = _generic(registry, nn, n)
        comm = _pm_sub(_pm_mul(x, y, registry), _pm_mul(y, x, registry))
        return _minors2(comm, registry)
    if kind == "K":
        registry = tuple(f"x{k}" for k in range(nn))
        return _minors2(_generic(registry, 0, n), registry)
    if kind == "NIL":
        registry = tuple(f"y{k}" for k in range(nn))
        y = _generic(registry, 0, n)
        es = _char_coeffs(y, registry, 2 * n)
        return [es[2 * k - 1] for k in range(1, n + 1)]
    raise ValueError(f"unknown ideal kind: {kind}")


def _pm_add(a, b):
    return [[p + q for p, q in zip(r1, r2)] for r1, r2 in zip(a, b)]


def _pm_sub(a, b):
    return [[p - q for p, q in zip(r1, r2)] for r1, r2 in zip(a, b)]


def odd_char_coeffs_vanish(n):
    """Symbolic check that odd characteristic coefficients vanish on sp(2n)."""
    nn = sp_dim(n)
    registry = tuple(f"y{k}" for k in range(nn))
    y = _generic(registry, 0, n)
    es = _char_coeffs(y, registry, 2 * n)
    return all(es[2 * k].is_zero() for k in range(n))


def theta1_kills_minors(n):
    """The quadratic co-moment annihilates every 2x2 minor of a generic sp
    matrix: substituting the co-moment quadratics for the trace-dual
    coordinates turns each minor into the zero polynomial."""
    gens = ideal_generators("K", n)
    images = [classical_comoment(d) for d in dual_basis(n)]
    return all(g.subst(images).is_zero() for g in gens)


def unipotent_factors(n, rng, count=None):
    """Random unipotent symplectic factors (I + t e_root, inverse I - t e_root)."""
    datum = RootDatumC(n)
    if count is None:
        count = rng.randint(1, 3)
    ident = MatF.identity(2 * n)
    factors = []
    for _ in range(count):
        root = rng.choice(datum.roots)
        t = rng.choice([-2, -1, 1, 2])
        factors.append((ident + root.vec.scale(t), ident + root.vec.scale(-t)))
    return factors


def sample_xnil_point(lam, seed=0):
    """Seeded exact point of the nilpotent subscheme over the orbit of lam.

    y is a unipotent conjugate of the canonical representative, i is pushed
    out of the positive weight space by the same conjugation, and x solves
    [x, y] = -raw_square(i) up to a random centralizer shift.
    """
    lam = tuple(sorted(lam, reverse=True))
    n = sum(lam) // 2
    rng = random.Random(seed)
    e = nilpotent_rep(lam)
    triple = sl2_complete(e)

    y = e
    vec = [_ZERO] * (2 * n)
    pos_slots = [i for i in range(2 * n) if triple.h.entries[i][i].sign() > 0]
    if pos_slots:
        coeffs = [rng.randint(-2, 2) for _ in pos_slots]
        if all(c == 0 for c in coeffs):
            coeffs[rng.randrange(len(coeffs))] = 1
        for slot, c in zip(pos_slots, coeffs):
            vec[slot] = FieldScalar(c)
    for g, ginv in unipotent_factors(n, rng):
        y = g @ y @ ginv
        vec = g.apply(vec)

    basis = sp_basis(n)
    cols = [[v for row in bracket(b, y).entries for v in row] for b in basis]
    rows = len(cols[0])
    mat = [[cols[k][r] for k in range(len(basis))] for r in range(rows)]
    rhs = [v for row in (-raw_square(vec)).entries for v in row]
    sol = linalg.solve(mat, rhs)
    if sol is None:
        raise RuntimeError("moment equation unexpectedly unsolvable")
    for z in linalg.nullspace(mat):
        c = FieldScalar(rng.randint(-2, 2))
        if c:
            sol = [s + c * zi for s, zi in zip(sol, z)]
    x = mat_from_coords(sol, n)

    point = SchemePoint(n=n, x=x, y=y, i=tuple(vec))
    if not moment2(point).is_zero() or not is_nilpotent(y):
        raise RuntimeError("sampled point fails the scheme equations")
    return point


@dataclass(frozen=True)
class TangentReport:
    jacobian_rank: int
    tangent_dim: int
    isotropic: bool
    smooth: bool


@lru_cache(maxsize=None)
def _nil_system(n):
    """Generators of I plus NIL in the full registry, with their gradients."""
    registry = full_registry(n)
    nn = sp_dim(n)
    gens = list(ideal_generators("I", n))
    for g in ideal_generators("NIL", n):
        gens.append(g.embed(registry, list(range(nn, 2 * nn))))
    grads = [[g.partial(v) for v in range(len(registry))] for g in gens]
    return registry, gens, grads


def point_coordinates(point):
    return (
        coords_of(point.x, point.n)
        + coords_of(point.y, point.n)
        + list(point.i)
    )


def lagrangian_check(point):
    """Exact tangent data of the nilpotent subscheme at a sampled point."""
    n = point.n
    registry, gens, grads = _nil_system(n)
    values = point_coordinates(point)
    for g in gens:
        if g.eval(values):
            raise ValueError("point does not satisfy the defining equations")
    jac = [[cell.eval(values) for cell in row] for row in grads]
    rank = linalg.dense_rank(jac)
    ambient = len(registry)
    kernel = linalg.nullspace(jac)
    nn = sp_dim(n)

    def split(vecv):
        a = mat_from_coords(vecv[:nn], n)
        b = mat_from_coords(vecv[nn:2 * nn], n)
        return a, b, vecv[2 * nn:]

    parts = [split(v) for v in kernel]
    isotropic = True
    for p in range(len(parts)):
        a1, b1, u1 = parts[p]
        for q in range(p + 1, len(parts)):
            a2, b2, u2 = parts[q]
            val = trace_pair(a1, b2) - trace_pair(a2, b1) + omega(u1, u2)
            if val:
                isotropic = False
                break
        if not isotropic:
            break
    tangent = ambient - rank
    return TangentReport(
        jacobian_rank=rank,
        tangent_dim=tangent,
        isotropic=isotropic,
        smooth=(rank == 2 * n * n + 2 * n),
    )


def positive_weight_space(y):
    """Basis of the canonical half space of a nilpotent y.

    Computed as the sum over j >= 1 of im(y^j) intersected with ker(y^j),
    which equals the span of the positive-weight vectors of any sl2
    completion of y; the formula needs no completion and is equivariant.
    """
    size = y.size
    candidates = []
    power = y
    while not power.is_zero():
        square = power @ power
        rows = [[square.entries[r][c] for c in range(size)] for r in range(size)]
        for w in linalg.nullspace(rows):
            v = power.apply(list(w))
            if any(v):
                candidates.append(v)
        power = power @ y
    basis = []
    for v in candidates:
        if linalg.dense_rank([list(b) for b in basis] + [list(v)]) > len(basis):
            basis.append(list(v))
    return basis


@dataclass(frozen=True)
class StratumReport:
    frame_rank: int
    inside_kernel: bool
    isotropic: bool


def stratum_tangent_check(point):
    """Exact tangent frame of the orbit stratum through a sampled point.

    The frame collects conjugation directions ([a,x], [a,y], a i) over the
    sp basis, centralizer shifts (z, 0, 0) with [z, y] = 0, and vector moves
    (w, 0, u) for u in the canonical half space of y, with w solving
    [w, y] = -(polarization of raw_square at i along u).  Its rank is the
    stratum dimension and the frame sits inside the kernel of the defining
    Jacobian.

    Isotropy is tested against Tr(a1 b2) - Tr(a2 b1) - 2 omega(u1, u2): with
    raw_square(v) = v v^T J the scheme equation is the zero level of the
    moment map for that scaling of the vector half, and the form must carry
    the same scaling for the strata to pair to zero.
    """
    n = point.n
    nn = sp_dim(n)
    registry, gens, grads = _nil_system(n)
    values = point_coordinates(point)
    for g in gens:
        if g.eval(values):
            raise ValueError("point does not satisfy the defining equations")
    jac = [[cell.eval(values) for cell in row] for row in grads]
    basis = sp_basis(n)
    zeros_g = [_ZERO] * nn
    zeros_v = [_ZERO] * (2 * n)

    frame = []
    ivec = list(point.i)
    for a in basis:
        frame.append(
            coords_of(bracket(a, point.x), n)
            + coords_of(bracket(a, point.y), n)
            + a.apply(ivec)
        )
    cols = [[v for row in bracket(b, point.y).entries for v in row] for b in basis]
    admat = [[cols[k][r] for k in range(nn)] for r in range(len(cols[0]))]
    for z in linalg.nullspace(admat):
        frame.append(list(z) + zeros_g + zeros_v)
    for u in positive_weight_space(point.y):
        polar = (
            raw_square([p + q for p, q in zip(ivec, u)])
            - raw_square(ivec)
            - raw_square(u)
        )
        rhs = [v for row in (-polar).entries for v in row]
        sol = linalg.solve(admat, rhs)
        if sol is None:
            raise RuntimeError("vector move unexpectedly unsolvable")
        frame.append(list(sol) + zeros_g + list(u))

    inside = True
    for vec in frame:
        for row in jac:
            if sum((c * v for c, v in zip(row, vec)), _ZERO):
                inside = False
                break
        if not inside:
            break

    def split(vecv):
        a = mat_from_coords(vecv[:nn], n)
        b = mat_from_coords(vecv[nn:2 * nn], n)
        return a, b, vecv[2 * nn:]

    parts = [split(v) for v in frame]
    isotropic = True
    for p in range(len(parts)):
        a1, b1, u1 = parts[p]
        for q in range(p + 1, len(parts)):
            a2, b2, u2 = parts[q]
            if trace_pair(a1, b2) - trace_pair(a2, b1) - omega(u1, u2) * 2:
                isotropic = False
                break
        if not isotropic:
            break
    return StratumReport(
        frame_rank=linalg.dense_rank(frame),
        inside_kernel=inside,
        isotropic=isotropic,
    )


def embedding_pullback_check(n):
    """The linear embedding (x, y, i) -> (x, y, i/2, omega(i, .)) pulls the
    cotangent-type form on gl x gl x V x V* back to the form on sp x sp x V,
    checked on every pair of standard tangent directions."""
    basis = sp_basis(n)
    zmat = MatF.zero(2 * n)
    zvec = [_ZERO] * (2 * n)
    tangents = [(b, zmat, zvec) for b in basis]
    tangents += [(zmat, b, zvec) for b in basis]
    for a in range(2 * n):
        v = [_ZERO] * (2 * n)
        v[a] = FieldScalar(1)
        tangents.append((zmat, zmat, v))

    def flat(u):
        return [-u[n + j] for j in range(n)] + [u[j] for j in range(n)]

    for t1 in tangents:
        a1, b1, u1 = t1
        v1 = [HALF * c for c in u1]
        f1 = flat(u1)
        for t2 in tangents:
            a2, b2, u2 = t2
            v2 = [HALF * c for c in u2]
            f2 = flat(u2)
            lhs = trace_pair(a1, b2) - trace_pair(a2, b1) + omega(u1, u2)
            pair12 = sum((p * q for p, q in zip(f1, v2)), _ZERO)
            pair21 = sum((p * q for p, q in zip(f2, v1)), _ZERO)
            rhs = trace_pair(a1, b2) - trace_pair(a2, b1) + pair12 - pair21
            if lhs != rhs:
                return False
    return True


@dataclass(frozen=True)
class HilbertRow:
    degree: int
    dim_left: int
    dim_right: int
    equal: bool


def hilbert_compare(n, dmax):
    """Graded dimensions of C[sp x sp]/J against the even part of the
    almost-commuting quotient, degree by degree.

    Left: quotient by the 2x2 minors of the generic commutator.  Right: the
    even-i-degree part of the quotient by I, with every variable in degree 1.
    """
    if n != 1:
        raise ValueError("the comparison is implemented for n = 1 only")
    if not isinstance(dmax, int) or dmax < 0 or dmax > 8:
        raise ValueError("dmax must be an integer in 0..8")
    nn = sp_dim(n)
    left_gens = ideal_generators("J", n)
    right_gens = ideal_generators("I", n)
    uslice = slice(2 * nn, 2 * nn + 2 * n)

    def even_u(exp):
        return sum(exp[uslice]) % 2 == 0

    rows = []
    for d in range(dmax + 1):
        left_amb = count_monomials(2 * nn, d)
        left = left_amb - linalg.truncated_ideal_dim(left_gens, d)
        right_amb = sum(
            count_monomials(2 * nn, d - k) * count_monomials(2 * n, k)
            for k in range(0, d + 1, 2)
        )
        right = right_amb - linalg.truncated_ideal_dim(
            right_gens, d, multiplier_filter=even_u
        )
        rows.append(HilbertRow(d, left, right, left == right))
    return rows
