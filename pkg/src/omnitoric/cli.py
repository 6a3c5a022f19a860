"""Command-line front end.

Every command reads self-describing JSON documents (``"type": "polytope"`` or
``"pair"``), ``-`` meaning standard input, and writes JSON to standard output
(DOT for ``lattice --dot``). Domain errors exit with status 1 and a JSON error
object on standard error; usage errors exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dichar, facering, families, surgery
from .dichar import Dicharacteristic
from .errors import InvalidPolytopeError, ToricError
from .polytope import (
    SimplePolytope,
    bijection_names,
    count_vectors,
    face_lattice,
    is_equivalent,
    make_cube,
    make_simplex,
    product,
    validation_problems,
)


class IOFailure(ToricError):
    code = "io"


class BadDocument(ToricError):
    code = "bad-document"


def _read_text(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise IOFailure(f"cannot read {path}: {exc.strerror}", {"path": path}) from None


def load_document(path: str, stdin=None):
    text = _read_text(path, stdin or sys.stdin)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadDocument(f"{path}: not JSON ({exc.msg})") from None
    return parse_document(doc)


def parse_document(doc):
    if not isinstance(doc, dict):
        raise BadDocument("expected a JSON object")
    kind = doc.get("type", "pair" if "columns" in doc else "polytope")
    if kind == "polytope":
        return SimplePolytope.from_json(doc)
    if kind == "pair":
        return Dicharacteristic.from_json(doc)
    raise BadDocument(f"unknown document type {kind!r}")


def _need_pair(obj, verb):
    if not isinstance(obj, Dicharacteristic):
        raise BadDocument(f"'{verb}' needs a pair document, got a polytope")
    return obj


def _base(obj) -> SimplePolytope:
    return obj.base if isinstance(obj, Dicharacteristic) else obj


def _names(text: str) -> list[str]:
    text = text.strip()
    if text.startswith("["):
        return list(json.loads(text))
    return [x.strip() for x in text.split(",") if x.strip()]


def _order(p: SimplePolytope, text: str | None) -> tuple[str, ...]:
    if not text:
        return surgery.default_order(p)
    choice = json.loads(text)
    if isinstance(choice, list):
        choice = {"order": choice}
    order = choice.get("order")
    vertex = choice.get("vertex")
    if order is None:
        if vertex is None:
            return surgery.default_order(p)
        ids = sorted(p.facet_index(x) for x in vertex)
        return tuple(p.facets[i] for i in ids)
    if vertex is not None and set(vertex) != set(order):
        raise BadDocument("'vertex' and 'order' name different facets")
    return tuple(order)


# ------------------------------------------------------------------ commands


def cmd_make(args, stdin):
    what = args.what
    a = args.args
    try:
        if what == "cpn":
            return families.cpn(int(a[0]), args.variant)
        if what == "bn":
            return families.bn(int(a[0]))
        if what == "bij":
            return families.bij(int(a[0]), int(a[1]))
        if what == "simplex":
            return make_simplex(int(a[0]))
        if what == "cube":
            return make_cube(int(a[0]))
    except (IndexError, ValueError) as exc:
        if isinstance(exc, ToricError):
            raise
        raise UsageError(f"bad arguments for 'make {what}'") from None
    if what == "product":
        if not a:
            raise UsageError("'make product' needs at least one SPEC")
        spec = families.FamilySpec("product", (), tuple(families.parse_spec(x) for x in a))
        return families.build(spec)
    if what == "representative":
        if len(a) != 1:
            raise UsageError("'make representative' needs one SPECFILE")
        text = _read_text(a[0], stdin)
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise BadDocument(f"{a[0]}: not JSON ({exc.msg})") from None
        return families.representative(families.summands_from_json(doc))
    raise UsageError(f"unknown family {what!r}")


def cmd_product(args, stdin):
    a = load_document(args.left, stdin)
    b = load_document(args.right, stdin)
    if isinstance(a, Dicharacteristic) and isinstance(b, Dicharacteristic):
        return families.product_pair(a, b)
    return product(_base(a), _base(b))


def cmd_connsum(args, stdin):
    a = load_document(args.left, stdin)
    b = a if args.right == "self" else load_document(args.right, stdin)
    if isinstance(a, Dicharacteristic) and isinstance(b, Dicharacteristic):
        if a.n <= 1:
            raise surgery.DegenerateDimensionError(surgery.DEGENERATE_MESSAGE, {"dim": a.n})
        return surgery.dichar_connected_sum(
            a, _order(a.base, args.left_vertex), b, _order(b.base, args.right_vertex)
        )
    pa, pb = _base(a), _base(b)
    if pa.dim <= 1:
        raise surgery.DegenerateDimensionError(surgery.DEGENERATE_MESSAGE, {"dim": pa.dim})
    spec = surgery.ConnSumSpec(pa, _order(pa, args.left_vertex), pb, _order(pb, args.right_vertex))
    return surgery.connected_sum(spec)


def cmd_prune(args, stdin):
    p = _base(load_document(args.doc, stdin))
    return surgery.prune(p, _names(args.face), args.name)


def cmd_validate(args, stdin):
    text = _read_text(args.doc, stdin)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadDocument(f"{args.doc}: not JSON ({exc.msg})") from None
    try:
        obj = parse_document(doc)
    except InvalidPolytopeError as exc:
        return {"valid": False, "polytope_problems": exc.detail}
    out = {"valid": True, "polytope_problems": validation_problems(_base(obj))}
    if isinstance(obj, Dicharacteristic):
        rep = dichar.validate(obj)
        out.update(rep.to_json())
        out["valid"] = rep.valid
    return out


def cmd_kernel(args, stdin):
    pair = dichar.checked(_need_pair(load_document(args.doc, stdin), "kernel"))
    return {"facets": list(pair.base.facets), "kernel": dichar.kernel_basis(pair)}


def cmd_restrict(args, stdin):
    pair = dichar.checked(_need_pair(load_document(args.doc, stdin), "restrict"))
    return dichar.restrict_to_face(pair, _names(args.face))


def cmd_equiv(args, stdin):
    a = load_document(args.left, stdin)
    b = load_document(args.right, stdin)
    if isinstance(a, Dicharacteristic) and isinstance(b, Dicharacteristic):
        w = dichar.pairs_equivalent(a, b, directed=args.directed)
        if w is None:
            return {"equivalent": False}
        return {"equivalent": True, **w.to_json(a, b)}
    pa, pb = _base(a), _base(b)
    phi = is_equivalent(pa, pb)
    if phi is None:
        return {"equivalent": False}
    return {"equivalent": True, "bijection": bijection_names(pa, pb, phi)}


def cmd_hvector(args, stdin):
    cv = count_vectors(_base(load_document(args.doc, stdin)))
    return {"f": list(cv.f), "h": list(cv.h)}


def cmd_facering(args, stdin):
    pair = dichar.checked(_need_pair(load_document(args.doc, stdin), "facering"))
    pres = facering.presentation(pair)
    top = pair.n if args.max_degree is None else args.max_degree
    out = pres.to_json()
    out["ranks"] = [
        {"degree": d, "cohomological_degree": 2 * d, "rank": facering.graded_rank(pres, d)}
        for d in range(top + 1)
    ]
    if args.chern:
        out["chern"] = [facering.total_chern(pair, d, pres).to_json(pres.variables) for d in range(top + 1)]
    return out


def cmd_chern(args, stdin):
    pair = dichar.checked(_need_pair(load_document(args.doc, stdin), "chern"))
    pres = facering.presentation(pair)
    return facering.total_chern(pair, args.degree, pres).to_json(pres.variables)


def cmd_lattice(args, stdin):
    lat = face_lattice(_base(load_document(args.doc, stdin)))
    if args.dot:
        return lat.to_dot()
    return lat.to_json()


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="omnitoric", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("make", help="construct a polytope or an omnioriented family member")
    p.add_argument("what", choices=["cpn", "bn", "bij", "product", "representative", "simplex", "cube"])
    p.add_argument("args", nargs="*")
    p.add_argument("--variant", choices=["l", "lprime"], default="l")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("product", help="product of two documents")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("connsum", help="connected sum; RIGHT may be 'self'")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--left-vertex", help='JSON {"vertex": [...], "order": [...]}')
    p.add_argument("--right-vertex", help='JSON {"vertex": [...], "order": [...]}')
    p.set_defaults(func=cmd_connsum)

    p = sub.add_parser("prune", help="cut off a face")
    p.add_argument("doc")
    p.add_argument("--face", required=True, help="facet names, comma separated or a JSON list")
    p.add_argument("--name", help="name for the new facet")
    p.set_defaults(func=cmd_prune)

    for verb, func, helptext in (
        ("validate", cmd_validate, "check a polytope or pair"),
        ("kernel", cmd_kernel, "integer kernel of a dicharacteristic"),
        ("hvector", cmd_hvector, "f- and h-vectors"),
    ):
        p = sub.add_parser(verb, help=helptext)
        p.add_argument("doc", nargs="?", default="-")
        p.set_defaults(func=func)

    p = sub.add_parser("restrict", help="restrict a pair to a face")
    p.add_argument("doc")
    p.add_argument("--face", required=True)
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("equiv", help="combinatorial equivalence or pair equivalence")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--directed", action="store_true")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("facering", help="Stanley-Reisner presentation and graded ranks")
    p.add_argument("doc", nargs="?", default="-")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--chern", action="store_true")
    p.set_defaults(func=cmd_facering)

    p = sub.add_parser("chern", help="graded piece of the total Chern class")
    p.add_argument("doc", nargs="?", default="-")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("lattice", help="face lattice as JSON or DOT")
    p.add_argument("doc", nargs="?", default="-")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_lattice)
    return ap


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args, stdin)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"omnitoric: error: {exc}", file=stderr)
        return 2
    except ToricError as exc:
        print(json.dumps({"error": exc.as_dict()}), file=stderr)
        return 1
    if isinstance(result, str):
        stdout.write(result)
    else:
        if hasattr(result, "to_json"):
            result = result.to_json()
        json.dump(result, stdout, indent=2)
        stdout.write("\n")
    return 0


def main():
    sys.exit(run())
