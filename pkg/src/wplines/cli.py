"""Command-line interface: ``wplines <command> p0 p1 p2 [options]``.

Every command prints one JSON document (``quiver --format dot`` prints DOT).
Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .collection import build_collection, check_strong_exceptional, custom_collection, euler_matrix
from .grading import Degree, WeightSequence, dualizing_element, make_group, normalize
from .matrices import determinant, matrix_order
from .presentation import dynkin_classify, overall_pass, table_row, verify_all
from .quiver import (
    BoxTooSmallError,
    IndefiniteFormError,
    build_quiver,
    cartan_from_euler,
    cartan_from_quiver,
    compare_lattices,
    coxeter_matrix,
    enumerate_roots,
    symmetrized_euler,
)
from .ring import PolynomialSyntaxError, closed_form_series, format_polynomial, graded_dim, hilbert_Rprime
from .ring import monomial_count, parse_polynomial, reduce_mod_f

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must be an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"weight must be positive, got {value}")
    return value


def _degree(text: str) -> Degree:
    try:
        return Degree.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wplines", description="Weighted projective lines and ADE singularities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("weights", nargs=3, type=_positive, metavar="p")
        return cmd

    command("classify", "Dynkin type of the weights")
    cmd = command("group", "structure of the grading group L(p)")
    cmd.add_argument("--degree", type=_degree, help="degree to normalize, 'a0 a1 a2 m'")
    cmd = command("dim", "graded dimension of R(p) in one degree")
    cmd.add_argument("--degree", type=_degree, required=True, help="'a0 a1 a2 m'")
    cmd = command("reduce", "reduce a polynomial modulo f")
    cmd.add_argument("--poly", required=True, help="e.g. 'x0^3 + 2*x1*x2'")
    cmd = command("hilbert", "Hilbert series of R'(p)")
    cmd.add_argument("--max", type=int, default=500, dest="n_max")
    cmd = command("verify", "run every check")
    cmd.add_argument("--max", type=int, default=500, dest="n_max")
    cmd.add_argument("--box", type=int, default=8)
    cmd.add_argument("--degrees", help="override the Z-degrees, 'd1 d2 d3'")
    cmd.add_argument("--relation", help="override the relation in x, y, z")
    cmd.add_argument("--generators", help="override the generators, 'g1; g2; g3'")
    cmd = command("collection", "exceptional collection and its strong exceptionality")
    cmd.add_argument("--no-e0", action="store_true", help="drop the first object O")
    cmd.add_argument("--twists", help="custom twist list, 'a0 a1 a2 m; ...'")
    cmd = command("euler", "Euler matrix of the collection")
    cmd.add_argument("--no-e0", action="store_true")
    cmd = command("quiver", "the star quiver")
    cmd.add_argument("--format", choices=("json", "dot"), default="json")
    command("cartan", "Cartan matrices from the quiver and from the Euler form")
    command("coxeter", "Coxeter transformation and its order")
    cmd = command("roots", "roots of the Cartan form")
    cmd.add_argument("--box", type=int, default=8)
    return parser


def parse_args(argv) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    args.weights = WeightSequence(*args.weights)
    return args


def _document(p: WeightSequence, **fields) -> dict:
    return {"schema_version": SCHEMA_VERSION, "weights": list(p), **fields}


def _cmd_classify(args):
    cls = dynkin_classify(args.weights)
    return 0, _document(
        args.weights,
        dynkin=cls.dynkin,
        type_by_vertex_count=cls.type_by_vertex_count,
        table_label=cls.table_label,
        table_label_instantiated=cls.table_label_instantiated,
        vertex_count=args.weights.rank,
    )


def _cmd_group(args):
    g = make_group(args.weights)
    doc = _document(
        args.weights,
        rank=g.structure.rank,
        invariant_factors=list(g.structure.invariant_factors),
        dualizing_element=dualizing_element(g).wire(),
    )
    if args.degree is not None:
        doc["degree"] = args.degree.wire()
        doc["normal_form"] = normalize(g, args.degree).wire()
    return 0, doc


def _cmd_dim(args):
    g = make_group(args.weights)
    return 0, _document(
        args.weights,
        degree=args.degree.wire(),
        normal_form=normalize(g, args.degree).wire(),
        monomial_count=monomial_count(g, args.degree),
        graded_dim=graded_dim(g, args.degree),
    )


def _cmd_reduce(args):
    poly = parse_polynomial(args.poly)
    remainder, cofactor = reduce_mod_f(args.weights, poly)
    return 0, _document(
        args.weights,
        input=format_polynomial(poly),
        remainder=format_polynomial(remainder),
        cofactor=format_polynomial(cofactor),
        in_ideal=not remainder.terms,
    )


def _cmd_hilbert(args):
    if args.n_max < 0:
        raise UsageError("--max must be nonnegative")
    g = make_group(args.weights)
    doc = _document(args.weights, coefficients=hilbert_Rprime(g, args.n_max))
    if args.weights.is_dynkin:
        row = table_row(args.weights)
        doc["z_degrees"] = list(row.z_degrees)
        doc["relation_z_degree"] = row.relation_z_degree
        doc["closed_form_matches"] = doc["coefficients"] == closed_form_series(
            row.z_degrees, row.relation_z_degree, args.n_max
        )
    return 0, doc


def _cmd_verify(args):
    p = args.weights
    row = None
    if args.degrees or args.relation or args.generators:
        if not p.is_dynkin:
            raise UsageError("overrides need weights of Dynkin type")
        row = table_row(p)
        if args.degrees:
            parts = args.degrees.replace(",", " ").split()
            if len(parts) != 3 or not all(s.isdigit() and int(s) > 0 for s in parts):
                raise UsageError("--degrees needs three positive integers")
            row = row.with_degrees(parts)
        if args.relation:
            row = row.with_relation(args.relation)
        if args.generators:
            texts = [t for t in args.generators.split(";")]
            if len(texts) != 3:
                raise UsageError("--generators needs three polynomials separated by ';'")
            row = row.with_generators(texts)
    cls = dynkin_classify(p)
    reports = verify_all(p, args.n_max, row, args.box)
    if row is None and p.is_dynkin:
        row = table_row(p)
    ok = overall_pass(reports)
    doc = _document(
        p,
        dynkin=cls.dynkin,
        type_by_vertex_count=cls.type_by_vertex_count,
        table_label=cls.table_label,
        table_label_instantiated=cls.table_label_instantiated,
        row=row.to_dict() if row else None,
        checks=[r.to_dict() for r in reports],
        overall="pass" if ok else "fail",
    )
    return (0 if ok else 1), doc


def _parse_twists(text: str) -> list[Degree]:
    try:
        return [Degree.parse(chunk) for chunk in text.split(";") if chunk.strip()]
    except ValueError as exc:
        raise UsageError(str(exc))


def _cmd_collection(args):
    if args.twists:
        coll = custom_collection(args.weights, _parse_twists(args.twists))
    else:
        coll = build_collection(args.weights, include_e0=not args.no_e0)
    report = check_strong_exceptional(coll)
    doc = _document(args.weights, labels=list(coll.labels), twists=coll.wire(), checks=[report.to_dict()])
    return (1 if report.failed else 0), doc


def _cmd_euler(args):
    coll = build_collection(args.weights, include_e0=not args.no_e0)
    e = euler_matrix(coll)
    return 0, _document(args.weights, twists=coll.wire(), matrix=e, determinant=determinant(e))


def quiver_dot(p: WeightSequence) -> str:
    q = build_quiver(p)
    lines = [f'digraph "Delta({p.p0},{p.p1},{p.p2})" {{']
    for label, twist in zip(q.labels, q.twists):
        lines.append(f'  "{twist.wire()}" [label="{label}"];')
    for s, t, arrow in q.arrows:
        lines.append(f'  "{q.twists[s].wire()}" -> "{q.twists[t].wire()}" [label="{arrow}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_quiver(args):
    if args.format == "dot":
        return 0, quiver_dot(args.weights)
    q = build_quiver(args.weights)
    return 0, _document(
        args.weights,
        vertices=[{"label": l, "degree": t.wire()} for l, t in zip(q.labels, q.twists)],
        arrows=[{"source": s, "target": t, "label": a} for s, t, a in q.arrows],
    )


def _cmd_cartan(args):
    q = build_quiver(args.weights)
    e = euler_matrix(build_collection(args.weights, include_e0=False))
    c_quiver = cartan_from_quiver(q)
    c_euler = cartan_from_euler(e)
    return 0, _document(
        args.weights,
        from_quiver=c_quiver,
        from_euler=c_euler,
        symmetrized_euler=symmetrized_euler(e),
        equal=c_quiver == c_euler,
        determinant=determinant(c_quiver),
    )


def _cmd_coxeter(args):
    e = euler_matrix(build_collection(args.weights, include_e0=False))
    phi = coxeter_matrix(e)
    return 0, _document(args.weights, matrix=phi, order=matrix_order(phi))


def _cmd_roots(args):
    p = args.weights
    c = cartan_from_quiver(build_quiver(p))
    try:
        roots = enumerate_roots(c, args.box)
    except IndefiniteFormError as exc:
        return 0, _document(p, applicable=False, reason=str(exc), determinant=determinant(c))
    except BoxTooSmallError as exc:
        raise UsageError(str(exc))
    report = compare_lattices(p, args.box)
    return 0, _document(
        p,
        applicable=True,
        count=len(roots),
        rank=len(c),
        coxeter_order=report.details.get("coxeter_order"),
        roots=[list(r) for r in roots],
    )


COMMANDS = {
    "classify": _cmd_classify,
    "group": _cmd_group,
    "dim": _cmd_dim,
    "reduce": _cmd_reduce,
    "hilbert": _cmd_hilbert,
    "verify": _cmd_verify,
    "collection": _cmd_collection,
    "euler": _cmd_euler,
    "quiver": _cmd_quiver,
    "cartan": _cmd_cartan,
    "coxeter": _cmd_coxeter,
    "roots": _cmd_roots,
}


def run(args: argparse.Namespace) -> tuple[int, dict | str]:
    return COMMANDS[args.command](args)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, doc = run(args)
    except (UsageError, PolynomialSyntaxError) as exc:
        print(f"wplines: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(doc, str):
        sys.stdout.write(doc)
    else:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
