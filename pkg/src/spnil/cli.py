"""Command-line surface for the exact verification suites.

Subcommands: census (Jordan-type table with closure dimensions), verify
(named invariant suites), hilbert (graded dimension comparison), radial
(vacuum scalars and the radial operator identity), lemma-sl2
(lowest-coefficient membership against the weight sign).

Reports are written to standard output as JSON (default) or CSV, with every
scalar rendered as an exact fraction string.  Wall-clock time goes to the
error stream so that stdout is byte-identical across runs with the same
arguments.  Exit status: 0 all checks pass, 1 some check fails, 2 usage
error.
"""

import argparse
import csv
import io
import json
import random
import sys
import time
from fractions import Fraction

from .field import FieldScalar
from .poly import MultiPoly, monomials
from .splie import (
    MatF,
    RootDatumC,
    bracket,
    mat_from_coords,
    omega,
    raw_square,
    sp_basis,
    sp_dim,
    trace_pair,
)
from .weylosc import (
    OscVector,
    WeylElement,
    classical_comoment,
    osc_apply,
    symmetrize_quadratic,
    theta0,
    theta1,
    weight_zero_scalar,
)
from .orbits import census, component_types, lowest_coefficient_membership
from .varieties import (
    SchemePoint,
    embedding_pullback_check,
    hilbert_compare,
    lagrangian_check,
    moment2,
    odd_char_coeffs_vanish,
    sample_xnil_point,
    stratum_tangent_check,
    theta1_kills_minors,
    unipotent_factors,
)
from .cherednik import (
    Params,
    SINGULAR,
    check_hc_relation,
    dunkl_commute,
    h_registry,
    radial_match,
)

SUITES = (
    "theta1-hom",
    "theta0-hom",
    "minors",
    "weyl",
    "dunkl",
    "relation",
    "lagrangian",
    "equivariance",
    "embedding",
    "all",
)

# keep pure-Python runtimes sane; everything else follows the global n <= 4
_SUITE_CAP = {"theta1-hom": 3, "theta0-hom": 2, "minors": 3, "lagrangian": 2, "embedding": 3}


def _check(name, params, expected, actual, passed):
    return {
        "name": name,
        "params": params,
        "expected": expected,
        "actual": actual,
        "pass": bool(passed),
    }


def _report(command, n, seed, checks):
    return {
        "command": command,
        "n": n,
        "seed": seed,
        "checks": checks,
        "overall_pass": all(c["pass"] for c in checks),
    }


def _rand_sp(n, rng):
    return mat_from_coords([FieldScalar(rng.randint(-2, 2)) for _ in range(sp_dim(n))], n)


def _rand_mat(size, rng):
    return MatF([[rng.randint(-2, 2) for _ in range(size)] for _ in range(size)])


def _rand_vec(size, rng):
    return [FieldScalar(rng.randint(-2, 2)) for _ in range(size)]


def _conjugator(n, rng):
    g = MatF.identity(2 * n)
    ginv = MatF.identity(2 * n)
    for f, finv in unipotent_factors(n, rng):
        g = f @ g
        ginv = ginv @ finv
    return g, ginv


def suite_theta1_hom(n, rng, trials):
    basis = sp_basis(n)
    images = [theta1(b) for b in basis]
    bad = total = 0
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            total += 1
            if theta1(bracket(a, b)) != images[i].commutator(images[j]):
                bad += 1
    return [
        _check(
            "theta1 bracket homomorphism",
            {"n": n, "basis_pairs": total},
            "0 mismatches",
            f"{bad} mismatches",
            bad == 0,
        )
    ]


def suite_theta0_hom(n, rng, trials):
    basis = sp_basis(n)
    images = [theta0(b) for b in basis]
    bad = total = 0
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            total += 1
            if theta0(bracket(a, b)) != images[i].commutator(images[j]):
                bad += 1
    return [
        _check(
            "theta0 bracket homomorphism",
            {"n": n, "basis_pairs": total},
            "0 mismatches",
            f"{bad} mismatches",
            bad == 0,
        )
    ]


def suite_minors(n, rng, trials):
    killed = theta1_kills_minors(n)
    odd_zero = odd_char_coeffs_vanish(n)
    return [
        _check(
            "theta1 annihilates the 2x2 rank minors",
            {"n": n},
            "all minors map to 0",
            "all zero" if killed else "nonzero image",
            killed,
        ),
        _check(
            "odd characteristic coefficients vanish on sp",
            {"n": n},
            "e_1, e_3, ... identically 0",
            "all zero" if odd_zero else "nonzero coefficient",
            odd_zero,
        ),
    ]


def suite_weyl(n, rng, trials):
    checks = []

    bad = 0
    for i in range(n):
        for j in range(n):
            want = WeylElement.one(n) if i == j else WeylElement.zero(n)
            if WeylElement.ygen(n, i).commutator(WeylElement.xgen(n, j)) != want:
                bad += 1
            if WeylElement.xgen(n, i).commutator(WeylElement.xgen(n, j)) != WeylElement.zero(n):
                bad += 1
            if WeylElement.ygen(n, i).commutator(WeylElement.ygen(n, j)) != WeylElement.zero(n):
                bad += 1
    checks.append(
        _check(
            "canonical commutation relations",
            {"n": n, "generator_pairs": 3 * n * n},
            "[y_i,x_j]=delta, generators of equal kind commute",
            f"{bad} violations",
            bad == 0,
        )
    )

    bad = 0
    for b in sp_basis(n):
        if theta1(b) != symmetrize_quadratic(classical_comoment(b)):
            bad += 1
    checks.append(
        _check(
            "theta1 equals symmetrized classical co-moment",
            {"n": n, "basis_size": sp_dim(n)},
            "agreement on every basis element",
            f"{bad} mismatches",
            bad == 0,
        )
    )

    bad = 0
    for _ in range(trials):
        u = theta1(_rand_sp(n, rng))
        v = theta1(_rand_sp(n, rng))
        w = theta1(_rand_sp(n, rng))
        prod = u * v
        if not prod.is_even() or not u.is_even():
            bad += 1
        if prod.order() > u.order() + v.order():
            bad += 1
        if (u * v) * w != u * (v * w):
            bad += 1
    checks.append(
        _check(
            "even subalgebra, filtration, associativity",
            {"n": n, "trials": trials},
            "0 violations",
            f"{bad} violations",
            bad == 0,
        )
    )

    bad = 0
    for _ in range(trials):
        exp = tuple(2 * rng.randint(0, 3) - 1 for _ in range(n))
        mono = OscVector(n, {exp: FieldScalar(1)})
        weights = []
        for i in range(n):
            scaled = osc_apply(theta1(sp_basis(n)[i]), mono)
            weight = FieldScalar(Fraction(exp[i] + 1, 2))
            if scaled != mono.scale(weight):
                bad += 1
            weights.append(weight)
        if (exp == (-1,) * n) != all(not w for w in weights):
            bad += 1
    checks.append(
        _check(
            "h-weights on the oscillator module",
            {"n": n, "trials": trials},
            "monomial weight (e_i+1)/2; zero weight only on the vacuum",
            f"{bad} violations",
            bad == 0,
        )
    )
    return checks


def _param_sets(rng):
    def rand_c():
        return Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3, 4)))

    return [
        ("c=(-1/4,-1/2)", SINGULAR),
        ("random c", Params.of(rand_c(), rand_c())),
    ]


def suite_dunkl(n, rng, trials):
    registry = h_registry(n)
    checks = []
    for label, prm in _param_sets(rng):
        bad = total = 0
        for _ in range(trials):
            exp = [0] * n
            for _ in range(rng.randint(0, 4)):
                exp[rng.randrange(n)] += 1
            p = MultiPoly(registry, {tuple(exp): FieldScalar(rng.randint(1, 3))})
            i = rng.randrange(n)
            j = rng.randrange(n)
            total += 1
            if not dunkl_commute(i, j, p, prm):
                bad += 1
        checks.append(
            _check(
                "Dunkl operators commute",
                {"n": n, "coupling": label, "trials": total},
                "0 failures",
                f"{bad} failures",
                bad == 0,
            )
        )
    return checks


def suite_relation(n, rng, trials):
    registry = h_registry(n)
    monos = []
    for d in range(4):
        for exp in monomials(n, d):
            monos.append(MultiPoly(registry, {exp: FieldScalar(1)}))
    checks = []
    for label, prm in _param_sets(rng):
        bad = total = 0
        for p in monos:
            for x_idx in range(n):
                for y_idx in range(n):
                    total += 1
                    if not check_hc_relation(x_idx, y_idx, p, prm):
                        bad += 1
        checks.append(
            _check(
                "commutator relation [T_y, t_x]",
                {"n": n, "coupling": label, "cases": total},
                "0 failures",
                f"{bad} failures",
                bad == 0,
            )
        )
    return checks


def suite_lagrangian(n, rng, trials):
    checks = []
    target = 2 * n * n + 2 * n
    for lam in component_types(n):
        ranks = set()
        iso_bad = 0
        frame_bad = 0
        for t in range(trials):
            point = sample_xnil_point(lam, seed=rng.randrange(10 ** 9))
            rep = lagrangian_check(point)
            ranks.add(rep.jacobian_rank)
            if not rep.isotropic:
                iso_bad += 1
            frame = stratum_tangent_check(point)
            if (
                frame.frame_rank != target
                or not frame.inside_kernel
                or not frame.isotropic
            ):
                frame_bad += 1
        rank_list = ",".join(str(r) for r in sorted(ranks))
        checks.append(
            _check(
                "defining Jacobian has full rank with isotropic kernel",
                {"n": n, "lambda": list(lam), "points": trials},
                f"rank {target} at every point, kernel isotropic",
                f"ranks {{{rank_list}}}, {iso_bad} non-isotropic kernels",
                ranks == {target} and iso_bad == 0,
            )
        )
        checks.append(
            _check(
                "stratum tangent frame is half-dimensional and isotropic",
                {"n": n, "lambda": list(lam), "points": trials},
                f"rank {target} frame inside the kernel, isotropic",
                f"{frame_bad} bad points",
                frame_bad == 0,
            )
        )
    return checks


def suite_equivariance(n, rng, trials):
    checks = []
    bad = 0
    for _ in range(trials):
        x = _rand_mat(2 * n, rng)
        y = _rand_mat(2 * n, rng)
        vec = _rand_vec(2 * n, rng)
        g, ginv = _conjugator(n, rng)
        left = moment2(SchemePoint(n, g @ x @ ginv, g @ y @ ginv, tuple(g.apply(vec))))
        right = g @ moment2(SchemePoint(n, x, y, tuple(vec))) @ ginv
        if left != right:
            bad += 1
    checks.append(
        _check(
            "moment map equivariance under unipotent conjugation",
            {"n": n, "trials": trials},
            "0 failures",
            f"{bad} failures",
            bad == 0,
        )
    )

    bad = 0
    for _ in range(trials):
        vec = _rand_vec(2 * n, rng)
        g, ginv = _conjugator(n, rng)
        if raw_square(g.apply(vec)) != g @ raw_square(vec) @ ginv:
            bad += 1
        m = _rand_sp(n, rng)
        half = FieldScalar(Fraction(1, 2))
        lhs = trace_pair(raw_square(vec).scale(-half), m)
        rhs = half * omega(m.apply(vec), vec)
        if lhs != rhs:
            bad += 1
    checks.append(
        _check(
            "square map equivariance and pairing identity",
            {"n": n, "trials": trials},
            "0 failures",
            f"{bad} failures",
            bad == 0,
        )
    )
    return checks


def suite_embedding(n, rng, trials):
    ok = embedding_pullback_check(n)
    return [
        _check(
            "symplectic form pulls back through the embedding",
            {"n": n},
            "equality on all tangent pairs",
            "equal" if ok else "mismatch",
            ok,
        )
    ]


_SUITE_FN = {
    "theta1-hom": suite_theta1_hom,
    "theta0-hom": suite_theta0_hom,
    "minors": suite_minors,
    "weyl": suite_weyl,
    "dunkl": suite_dunkl,
    "relation": suite_relation,
    "lagrangian": suite_lagrangian,
    "equivariance": suite_equivariance,
    "embedding": suite_embedding,
}


def run_verify(suite, n, seed, trials):
    rng = random.Random(seed)
    if suite == "all":
        checks = []
        for name in SUITES[:-1]:
            eff = min(n, _SUITE_CAP.get(name, 4))
            if eff != n:
                print(f"note: {name} capped at n={eff}", file=sys.stderr)
            checks.extend(_SUITE_FN[name](eff, rng, trials))
        return checks
    return _SUITE_FN[suite](n, rng, trials)


def run_census(n):
    full = 2 * n * n + 2 * n
    checks = []
    for row in census(n):
        expected = f"xlambda_dim = {full}" if row.is_component else f"xlambda_dim < {full}"
        good = (row.xlambda_dim == full) == row.is_component
        checks.append(
            _check(
                "closure dimension",
                {
                    "lambda": list(row.partition),
                    "orbit_dim": row.orbit_dim,
                    "vplus_dim": row.vplus_dim,
                    "xlambda_dim": row.xlambda_dim,
                    "is_component": row.is_component,
                },
                expected,
                str(row.xlambda_dim),
                good,
            )
        )
    return checks


def run_hilbert(n, dmax):
    checks = []
    for row in hilbert_compare(n, dmax):
        checks.append(
            _check(
                "graded dimensions agree",
                {"degree": row.degree},
                str(row.dim_left),
                str(row.dim_right),
                row.equal,
            )
        )
    return checks


def run_radial(n):
    checks = []
    datum = RootDatumC(n)
    for root in datum.positive_roots:
        value = weight_zero_scalar(n, root)
        expected = "-3/16" if root.length == "long" else "-1/8"
        checks.append(
            _check(
                "vacuum scalar of e_a e_-a",
                {
                    "root": [str(c) for c in root.coeffs],
                    "length": root.length,
                },
                expected,
                str(value),
                str(value) == expected,
            )
        )
    matched = radial_match(n)
    checks.append(
        _check(
            "radial operator equals L_c at c=(-1/4,-1/2)",
            {"n": n, "root_pairs": len(datum.positive_roots)},
            "operators identical",
            "identical" if matched else "different",
            matched,
        )
    )
    return checks


def run_lemma_sl2(dim):
    checks = []
    for k in range(dim):
        member = lowest_coefficient_membership([dim], k)
        weight = 2 * k - (dim - 1)
        positive = weight > 0
        checks.append(
            _check(
                "lowest-coefficient membership",
                {"dim": dim, "k": k, "weight": weight},
                "member" if positive else "nonmember",
                "member" if member else "nonmember",
                member == positive,
            )
        )
    return checks


def emit_report(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if report["command"] == "census":
        writer.writerow(["lambda", "orbit_dim", "vplus_dim", "xlambda_dim", "is_component"])
        for c in report["checks"]:
            p = c["params"]
            writer.writerow(
                [
                    "(" + ",".join(str(v) for v in p["lambda"]) + ")",
                    p["orbit_dim"],
                    p["vplus_dim"],
                    p["xlambda_dim"],
                    p["is_component"],
                ]
            )
        return out.getvalue()
    if report["command"] == "hilbert":
        writer.writerow(["degree", "dim_left", "dim_right", "equal"])
        for c in report["checks"]:
            writer.writerow([c["params"]["degree"], c["expected"], c["actual"], c["pass"]])
        return out.getvalue()
    writer.writerow(["name", "params", "expected", "actual", "pass"])
    for c in report["checks"]:
        params = ";".join(f"{k}={v}" for k, v in c["params"].items())
        writer.writerow([c["name"], params, c["expected"], c["actual"], c["pass"]])
    return out.getvalue()


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spnil",
        description="exact verification suites for sp(2n) constructions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="Jordan-type table with closure dimensions")
    p.add_argument("-n", type=int, default=2)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("-n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("hilbert", help="graded dimension comparison")
    p.add_argument("-n", type=int, default=1)
    p.add_argument("--max-degree", type=int, default=6, dest="dmax")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("radial", help="vacuum scalars and the radial identity")
    p.add_argument("-n", type=int, default=2)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("lemma-sl2", help="lowest-coefficient membership by weight")
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()

    seed = getattr(args, "seed", 0)
    n = getattr(args, "n", 0)

    if args.command == "census":
        if not 1 <= args.n <= 4:
            parser.error("census requires 1 <= n <= 4")
        checks = run_census(args.n)
    elif args.command == "verify":
        if not 1 <= args.n <= 4:
            parser.error("verify requires 1 <= n <= 4")
        if args.trials < 1:
            parser.error("trials must be positive")
        checks = run_verify(args.suite, args.n, args.seed, args.trials)
    elif args.command == "hilbert":
        if args.n != 1:
            parser.error("hilbert is implemented for n = 1 only")
        if not 0 <= args.dmax <= 8:
            parser.error("max degree must lie in 0..8")
        checks = run_hilbert(args.n, args.dmax)
    elif args.command == "radial":
        if not 1 <= args.n <= 4:
            parser.error("radial requires 1 <= n <= 4")
        checks = run_radial(args.n)
    else:
        if not 1 <= args.dim <= 12:
            parser.error("dim must lie in 1..12")
        n = args.dim
        checks = run_lemma_sl2(args.dim)

    report = _report(args.command, n, seed, checks)
    sys.stdout.write(emit_report(report, args.format))
    elapsed = time.monotonic() - start
    print(f"wall time: {elapsed:.3f}s", file=sys.stderr)
    return 0 if report["overall_pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
