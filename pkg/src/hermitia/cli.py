"""Command-line interface.

Each subcommand prints one JSON document on stdout. Exit codes: 0 success,
1 domain error (a precondition on the mathematics failed), 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import geometry, groups, reduction
from .errors import HermitiaError, ParseError
from .exact import parse_rational, render_gaussian, render_rational
from .forms import QuadraticForm, definiteness
from .foursquares import four_squares
from .serialize import (
    dumps,
    float_field,
    generators_from,
    hermitian_form_doc,
    hermitian_form_from,
    load,
    matrix_from,
    parse_vector,
    poly_doc,
    quadratic_form_doc,
    quadratic_form_from,
)

FUBINI_NOTE = (
    "note: inner sums in R are read with a single matched index, sum_i u_i conj(w_i); "
    "the printed formula's mixed subscripts are not used literally"
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _result(command: str, **fields) -> dict:
    return {"kind": "result", "command": command, **fields}


def _group_cap(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("HERMITIA_CAP")
    if env is None:
        return groups.DEFAULT_GROUP_CAP
    try:
        cap = int(env)
    except ValueError:
        raise UsageError(f"HERMITIA_CAP must be an integer, got {env!r}")
    if cap < 1:
        raise UsageError("HERMITIA_CAP must be positive")
    return cap


def cmd_foursquares(args) -> dict:
    try:
        A = int(args.A)
    except ValueError:
        raise UsageError(f"A must be an integer, got {args.A!r}")
    r = four_squares(A)
    return _result(
        "foursquares", A=r.a, squares=list(r.squares), alpha=r.alpha, beta=r.beta, witness=list(r.witness)
    )


def cmd_reduce_binary(args) -> dict:
    parts = args.form.split(",")
    if len(parts) != 3:
        raise UsageError("--form expects a,2b,c")
    a, two_b, c = (parse_rational(p) for p in parts)
    f = QuadraticForm.binary(a, two_b, c)
    r = reduction.reduce_binary(f)
    ra, r2b, rc = r.reduced.coefficients()
    D = r.reduced.determinant()
    return _result(
        "reduce-binary",
        input=[render_rational(a), render_rational(two_b), render_rational(c)],
        reduced=[render_rational(ra), render_rational(r2b), render_rational(rc)],
        form=quadratic_form_doc(r.reduced),
        unimodular=[list(row) for row in r.unimodular],
        steps=r.steps,
        determinant=render_rational(D),
        bound_satisfied=bool(ra * ra <= D * 4 / 3),
    )


def _hermite_fields(f: QuadraticForm, w) -> dict:
    D = f.determinant()
    return {
        "determinant": render_rational(D),
        "bound_float": float_field(reduction.hermite_bound(f.dim, D)),
        "value_power": render_rational(w.value ** f.dim),
        "bound_power": render_rational(reduction.hermite_bound_power(f.dim, D)),
        "within_bound": reduction.within_hermite_bound(w.value, f.dim, D),
    }


def cmd_minimum(args) -> dict:
    f = quadratic_form_from(load(args.gram))
    w = reduction.lattice_minimum(f, dim_cap=args.cap)
    return _result("minimum", value=render_rational(w.value), vector=list(w.vector), **_hermite_fields(f, w))


def cmd_hermite_check(args) -> dict:
    f = quadratic_form_from(load(args.gram))
    w = reduction.lattice_minimum(f, dim_cap=args.cap)
    fields = _hermite_fields(f, w)
    return _result("hermite-check", num_vars=f.dim, minimum=render_rational(w.value), vector=list(w.vector), **fields)


def cmd_invariant(args) -> dict:
    gens = generators_from(load(args.generators))
    grp = groups.group_closure(gens, cap=_group_cap(args.cap))
    cert = groups.moore_average(grp)
    return _result(
        "invariant",
        order=grp.order,
        form=hermitian_form_doc(cert.form),
        checked=cert.checked,
        definiteness=definiteness(cert.form).kind,
    )


def cmd_modulus_one(args) -> dict:
    T = matrix_from(load(args.matrix))
    H = hermitian_form_from(load(args.form))
    rep = groups.modulus_one_check(T, H, tol=args.tol)
    return _result(
        "modulus-one",
        charpoly=poly_doc(rep.charpoly),
        squarefree=poly_doc(rep.squarefree),
        roots_float=[[float_field(r.real), float_field(r.imag)] for r in rep.roots],
        max_deviation_float=float_field(rep.max_deviation),
        tol_float=float_field(rep.tol),
        passed=rep.passed,
    )


def cmd_finite_order(args) -> dict:
    T = matrix_from(load(args.matrix))
    cert = groups.finite_order_normal_form(T, args.order)
    s, t = cert.bezout
    return _result(
        "finite-order",
        order=cert.order,
        minimal_polynomial=poly_doc(cert.minimal_polynomial),
        quotient=poly_doc(cert.quotient),
        bezout=[poly_doc(s), poly_doc(t)],
        divides=cert.divides,
        squarefree=cert.squarefree,
    )


def cmd_study_distance(args) -> dict:
    H = hermitian_form_from(load(args.form))
    x, y = parse_vector(args.x), parse_vector(args.y)
    if len(x) != H.dim or len(y) != H.dim:
        raise HermitiaError("dimension-mismatch", f"points need {H.dim} coordinates")
    d = geometry.study_distance(x, y, H)
    return _result("study-distance", q=render_rational(d.q), distance_float=float_field(d.distance))


def cmd_fubini_r(args) -> dict:
    u, w = parse_vector(args.u), parse_vector(args.w)
    print(FUBINI_NOTE, file=sys.stderr)
    return _result("fubini-r", R=render_rational(geometry.fubini_R(u, w)))


def cmd_fixed_form(args) -> dict:
    coeffs = parse_vector(args.map)
    if len(coeffs) != 4:
        raise UsageError("--map expects a,b,c,d")
    m = geometry.MoebiusMap(*coeffs, anti=args.anti)
    h = geometry.fixed_point_form(m)
    a, b, c = h.coefficients()
    return _result(
        "fixed-form",
        a=render_rational(a),
        b=render_gaussian(b),
        c=render_rational(c),
        form=hermitian_form_doc(h),
        definiteness=definiteness(h).kind,
    )


def cmd_interior(args) -> dict:
    f = hermitian_form_from(load(args.form))
    pt = parse_vector(args.point)
    if len(pt) != 2:
        raise UsageError("--point expects u,v")
    rep = geometry.interior_predicate(f, *pt)
    return _result(
        "interior",
        value=render_rational(rep.value),
        sign=rep.sign,
        normalized_value=render_rational(rep.normalized_value),
        classification=rep.classification,
    )


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hermitia", description="Exact quadratic and Hermitian form computations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("foursquares", help="four-square decomposition via the quaternary Hermite form")
    s.add_argument("A")
    s.set_defaults(func=cmd_foursquares)

    s = sub.add_parser("reduce-binary", help="Gauss reduction of a positive-definite binary form")
    s.add_argument("--form", required=True, help="a,2b,c for a x^2 + 2b x y + c y^2")
    s.set_defaults(func=cmd_reduce_binary)

    for name, func, helptext in (
        ("minimum", cmd_minimum, "exact minimum over nonzero integer vectors"),
        ("hermite-check", cmd_hermite_check, "check the minimum against the Hermite bound"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--gram", required=True, help="quadratic-form document")
        s.add_argument("--cap", type=int, default=reduction.DEFAULT_DIM_CAP, help="dimension cap")
        s.set_defaults(func=func)

    s = sub.add_parser("invariant", help="invariant Hermitian form of a finite group by averaging")
    s.add_argument("--generators", required=True, help="group document")
    s.add_argument("--cap", type=int, default=None, help="maximum group order")
    s.set_defaults(func=cmd_invariant)

    s = sub.add_parser("modulus-one", help="eigenvalue moduli of a form-preserving matrix")
    s.add_argument("--matrix", required=True)
    s.add_argument("--form", required=True)
    s.add_argument("--tol", type=float, default=1e-9)
    s.set_defaults(func=cmd_modulus_one)

    s = sub.add_parser("finite-order", help="certify diagonalizability of a finite-order matrix")
    s.add_argument("--matrix", required=True)
    s.add_argument("--order", type=int, required=True)
    s.set_defaults(func=cmd_finite_order)

    s = sub.add_parser("study-distance", help="hyperbolic Hermitian distance")
    s.add_argument("--form", required=True)
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.set_defaults(func=cmd_study_distance)

    s = sub.add_parser("fubini-r", help="Fubini's invariant of two points in the unit ball")
    s.add_argument("--u", required=True)
    s.add_argument("--w", required=True)
    s.set_defaults(func=cmd_fubini_r)

    s = sub.add_parser("fixed-form", help="Hermitian form of the fixed points of an anti-projectivity")
    s.add_argument("--map", required=True, help="a,b,c,d")
    s.add_argument("--anti", action="store_true")
    s.set_defaults(func=cmd_fixed_form)

    s = sub.add_parser("interior", help="position of (u, v) relative to f(u, v, 1) = 0")
    s.add_argument("--form", required=True)
    s.add_argument("--point", required=True, help="u,v")
    s.set_defaults(func=cmd_interior)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        doc = args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"hermitia: usage error: {exc}", file=sys.stderr)
        print(parser.format_usage().rstrip(), file=sys.stderr)
        return 2
    except HermitiaError as exc:
        print(f"hermitia: {exc.code}: {exc}", file=sys.stderr)
        print(dumps({"kind": "error", "code": exc.code, "message": str(exc)}))
        return 1
    print(dumps(doc))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
