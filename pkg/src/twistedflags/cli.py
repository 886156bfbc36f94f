"""Command-line frontend.

Subcommands: ``csa``, ``qform``, ``measure``, ``rt``, ``compare``,
``corpus``.  Inputs are JSON payloads; outputs are canonical JSON (sorted
keys, fractions as reduced strings) so identical requests produce
byte-identical responses.  ``--output table`` switches to a short
human-readable rendering.

Exit codes: 0 success; 1 corpus mismatch; 2 malformed payload;
3 violated domain precondition; 4 unsupported backend capability.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .corpus import run_corpus
from .fields import CapabilityError, DeclaredTorsion, DomainError, Field
from .forms import (
    anisotropic_over_Q,
    discriminant,
    even_clifford_class,
    even_clifford_half_class,
    isometric_over_Q,
    similar_dim3,
    similar_dim6,
)
from .varieties import Grassmannian, InvolutionVariety
from .verdicts import (
    compare_conic_products,
    compare_conic_products_declared,
    compare_gr_products,
    compare_grassmannians,
    compare_involution,
    compare_quadric_products,
    compare_quadrics,
    compare_quaternion_projective,
    compare_sb_products,
    compare_severi_brauer,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_SCHEMA = 2
EXIT_DOMAIN = 3
EXIT_CAPABILITY = 4

SchemaError = jsonio.SchemaError


def _parse_field(token: str) -> Field:
    if token.startswith("abstract:"):
        path = token[len("abstract:") :]
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise SchemaError(f"cannot read field declaration {path}: {exc}")
        return jsonio.declared_field_from_json(data)
    if token not in ("Q", "R") and not token.startswith(("Qp:", "Fq:")):
        raise SchemaError(f"unknown field token {token!r}")
    return jsonio.field_from_str(token)


def _payload(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"payload is not valid JSON: {exc}")


def _emit(args, data: dict, table_lines: list[str]) -> None:
    if args.output == "table":
        for line in table_lines:
            print(line)
    else:
        print(jsonio.dumps(data))


# ---------------------------------------------------------------------------
# Subcommand handlers


def _run_csa(args, field: Field) -> int:
    payload = _payload(args.payload)
    if args.op == "quat":
        payload = {"quat": payload}
    elif args.op == "biquat":
        payload = {"biquat": payload}
    A = jsonio.csa_from_json(payload, field)
    data = jsonio.csa_to_json(A)
    _emit(args, data, [f"degree {A.degree}  index {A.index}  period {A.period}",
                       f"class {A.brclass}"])
    return EXIT_OK


def _run_qform(args, field: Field) -> int:
    payload = _payload(args.payload)
    op = args.op
    if op in ("albert", "realize"):
        key = "albert" if op == "albert" else "pairs"
        if isinstance(payload, list):
            payload = {key: payload}
        q = jsonio.form_from_json(payload, field)
        cls = even_clifford_class(q) if q.dim % 2 else even_clifford_half_class(q)
        data = {**jsonio.form_to_json(q), "clifford": jsonio.brauer_to_json(cls)}
        _emit(args, data, [f"form {q}", f"clifford class {cls}"])
        return EXIT_OK
    if op in ("similar", "isometric"):
        left = jsonio.form_from_json(payload["left"], field)
        right = jsonio.form_from_json(payload["right"], field)
        if op == "isometric":
            value = isometric_over_Q(left, right)
        elif left.dim == 3:
            value = similar_dim3(left, right)
        else:
            value = similar_dim6(left, right)
        _emit(args, {op: value}, [f"{op}: {value}"])
        return EXIT_OK
    q = jsonio.form_from_json(payload, field)
    if op == "disc":
        d = discriminant(q)
        _emit(args, {"disc": str(d.rep)}, [f"disc {d}"])
    elif op == "clifford":
        cls = even_clifford_class(q) if q.dim % 2 else even_clifford_half_class(q)
        _emit(args, jsonio.brauer_to_json(cls), [f"clifford class {cls}"])
    elif op == "anisotropic":
        value = anisotropic_over_Q(q)
        _emit(args, {"anisotropic": value}, [f"anisotropic: {value}"])
    else:
        raise SchemaError(f"unknown qform operation {op!r}")
    return EXIT_OK


def _run_measure(args, field: Field) -> int:
    payload = _payload(args.payload)
    v = jsonio.variety_from_json(payload, field)
    mu = v.measure()
    count = v.cell_count()
    assert mu.augmentation() == count
    data = {
        "element": jsonio.ring_to_json(mu),
        "canonical": jsonio.canonical_to_json(mu.canonical()),
        "count": count,
    }
    _emit(args, data, [f"measure {mu}", f"count {count}"])
    return EXIT_OK


def _run_rt(args, field: Field) -> int:
    payload = _payload(args.payload)
    op = args.op
    if op == "eval":
        e = jsonio.ring_from_json(payload, field)
        data = {"element": jsonio.ring_to_json(e), "aug": e.augmentation()}
        _emit(args, data, [f"element {e}", f"augmentation {e.augmentation()}"])
        return EXIT_OK
    if op == "normalize":
        e = jsonio.ring_from_json(payload, field)
        data = jsonio.canonical_to_json(e.canonical())
        _emit(args, data, [f"canonical {e.canonical()}"])
        return EXIT_OK
    if op == "subgroup":
        e = jsonio.ring_from_json(payload, field)
        classes = sorted(e.positive_subgroup(), key=lambda c: c.sort_token())
        data = {"subgroup": [jsonio.brauer_to_json(c) for c in classes]}
        _emit(args, data, [f"subgroup of order {len(classes)}"])
        return EXIT_OK
    left = jsonio.ring_from_json(payload["left"], field)
    right = jsonio.ring_from_json(payload["right"], field)
    if op == "equal":
        value = left == right
        _emit(args, {"equal": value}, [f"equal: {value}"])
    elif op == "mul":
        prod = left * right
        data = {
            "element": jsonio.ring_to_json(prod),
            "canonical": jsonio.canonical_to_json(prod.canonical()),
        }
        _emit(args, data, [f"product {prod}"])
    elif op == "add":
        total = left + right
        data = {
            "element": jsonio.ring_to_json(total),
            "canonical": jsonio.canonical_to_json(total.canonical()),
        }
        _emit(args, data, [f"sum {total}"])
    else:
        raise SchemaError(f"unknown rt operation {op!r}")
    return EXIT_OK


def _compare_dispatch(family: str, payload: dict, field: Field):
    left, right = payload["left"], payload["right"]
    if family == "sb":
        return compare_severi_brauer(
            jsonio.csa_from_json(left, field), jsonio.csa_from_json(right, field)
        )
    if family == "gr":
        mk = lambda p: Grassmannian(
            int(p["d"]), jsonio.csa_from_json({k: v for k, v in p.items() if k != "d"}, field)
        )
        return compare_grassmannians(mk(left), mk(right))
    if family == "quadric":
        return compare_quadrics(
            jsonio.form_from_json(left, field), jsonio.form_from_json(right, field)
        )
    if family == "hp":
        return compare_quaternion_projective(
            jsonio.csa_from_json(left, field), jsonio.csa_from_json(right, field)
        )
    if family == "iv":
        mk = lambda p: jsonio.variety_from_json({"iv": p}, field)
        v1, v2 = mk(left), mk(right)
        assert isinstance(v1, InvolutionVariety) and isinstance(v2, InvolutionVariety)
        return compare_involution(v1, v2)
    if family == "quadric_products":
        forms = [jsonio.form_from_json(f, field) for f in (*left, *right)]
        return compare_quadric_products(*forms)
    if family == "sb_products":
        algebras = [jsonio.csa_from_json(a, field) for a in (*left, *right)]
        return compare_sb_products(*algebras)
    if family == "gr_products":
        As = [jsonio.csa_from_json(a, field) for a in left["factors"]]
        Bs = [jsonio.csa_from_json(a, field) for a in right["factors"]]
        return compare_gr_products(int(left["d"]), *As, int(right["d"]), *Bs)
    if family == "conics":
        if isinstance(field, DeclaredTorsion):
            classes = [
                jsonio.brauer_from_json(c, field) for c in (*left, *right)
            ]
            return compare_conic_products_declared(
                *classes, equation_anisotropic=bool(payload["division"])
            )
        pairs = [tuple(int(x) for x in pair) for pair in (*left, *right)]
        return compare_conic_products(*pairs, field)
    raise SchemaError(f"unknown family {family!r}")


def _run_compare(args, field: Field) -> int:
    payload = _payload(args.payload)
    verdict = _compare_dispatch(args.family, payload, field)
    data = jsonio.verdict_to_json(verdict)
    lines = [
        f"measure_equal      {verdict.measure_equal}",
        f"count_equal        {verdict.count_equal}",
        f"subgroup_equal     {verdict.subgroup_equal}",
        f"isomorphic         {verdict.isomorphic}",
        f"birational         {verdict.birational}",
        f"stably_birational  {verdict.stably_birational}",
    ] + [f"  via: {step}" for step in verdict.chain]
    _emit(args, data, lines)
    return EXIT_OK


def _run_corpus(args, field: Field) -> int:
    ok, results = run_corpus(args.filter)
    data = {
        "passed": ok,
        "cases": [
            {"id": cid, "ok": passed, "detail": detail}
            for cid, passed, detail in results
        ],
    }
    lines = [
        f"{'PASS' if passed else 'FAIL'}  {cid}: {detail}"
        for cid, passed, detail in results
    ]
    lines.append(f"{sum(1 for _, p, _ in results if p)}/{len(results)} cases passed")
    _emit(args, data, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field",
        default="Q",
        help="base field: Q | R | Qp:<p> | Fq:<q> | abstract:<file>",
    )
    common.add_argument(
        "--output", choices=("json", "table"), default="json", help="output mode"
    )

    parser = argparse.ArgumentParser(
        prog="twistedflags",
        description="exact class-sum measures of twisted flag varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("csa", parents=[common], help="build an algebra descriptor")
    p.add_argument("op", choices=("quat", "biquat", "raw"))
    p.add_argument("payload")
    p.set_defaults(handler=_run_csa)

    p = sub.add_parser("qform", parents=[common], help="quadratic form operations")
    p.add_argument(
        "op",
        choices=(
            "disc",
            "clifford",
            "similar",
            "isometric",
            "anisotropic",
            "albert",
            "realize",
        ),
    )
    p.add_argument("payload")
    p.set_defaults(handler=_run_qform)

    p = sub.add_parser("measure", parents=[common], help="measure of a variety")
    p.add_argument("payload")
    p.set_defaults(handler=_run_measure)

    p = sub.add_parser("rt", parents=[common], help="quotient-ring operations")
    p.add_argument("op", choices=("eval", "normalize", "equal", "add", "mul", "subgroup"))
    p.add_argument("payload")
    p.set_defaults(handler=_run_rt)

    p = sub.add_parser("compare", parents=[common], help="classification verdicts")
    p.add_argument(
        "--family",
        required=True,
        choices=(
            "sb",
            "gr",
            "quadric",
            "hp",
            "iv",
            "quadric_products",
            "sb_products",
            "gr_products",
            "conics",
        ),
    )
    p.add_argument("payload")
    p.set_defaults(handler=_run_compare)

    p = sub.add_parser("corpus", parents=[common], help="run the golden cases")
    p.add_argument("--filter", default="", help="only run cases whose id contains this")
    p.set_defaults(handler=_run_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        field = _parse_field(args.field)
        return args.handler(args, field)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        print(f"schema error: {exc!r}", file=sys.stderr)
        return EXIT_SCHEMA


if __name__ == "__main__":
    sys.exit(main())
