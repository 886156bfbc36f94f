"""Canonical JSON encoding of every domain type.

Fractions are serialized as reduced strings "a/b" (or "0"); places of Q as
"oo" or the decimal prime; class invariant lists are sorted real place
first, then primes ascending.  Parsing and serialization are exact
inverses, and serialization is deterministic (sorted keys everywhere), so
repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction


class SchemaError(ValueError):
    """The payload does not match the expected JSON shape."""


from .algebras import CSA, biquaternion, quaternion
from .brauer import BrauerClass
from .class_ring import CanonicalForm, RingElement
from .fields import (
    DeclaredTorsion,
    DomainError,
    Field,
    GaloisField,
    PAdics,
    Place,
    Rationals,
    Reals,
    REAL_PLACE,
    finite_place,
)
from .forms import QuadraticForm, albert_form, form, odd_form_with_clifford_class
from .varieties import (
    Grassmannian,
    InvolutionVariety,
    Product,
    Quadric,
    QuaternionProjective,
    SeveriBrauer,
    TwistedVariety,
    involution_from_biquaternion,
    involution_from_form,
)
from .verdicts import Verdict


def dumps(obj) -> str:
    """Deterministic JSON text: sorted keys, no float formatting involved."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


# ---------------------------------------------------------------------------
# Fractions and fields


def frac_to_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def frac_from_str(s: str) -> Fraction:
    return Fraction(s)


def field_to_str(field: Field) -> str:
    return str(field)


def field_from_str(token: str, declared: DeclaredTorsion | None = None) -> Field:
    if token == "Q":
        return Rationals()
    if token == "R":
        return Reals()
    if token.startswith("Qp:"):
        return PAdics(int(token[3:]))
    if token.startswith("Fq:"):
        return GaloisField(int(token[3:]))
    if token == "abstract":
        if declared is None:
            raise DomainError("an abstract field needs a declaration")
        return declared
    raise SchemaError(f"unknown field token {token!r}")


def declared_field_from_json(data: dict) -> DeclaredTorsion:
    """Parse a declared-torsion field file: generator orders, optional
    redundant relations, optional [exponents, index] declarations."""
    orders = tuple(int(n) for n in data["orders"])
    relations = tuple(tuple(int(c) for c in rel) for rel in data.get("relations", []))
    index_table = tuple(
        (tuple(int(e) for e in exps), int(idx)) for exps, idx in data.get("index", [])
    )
    return DeclaredTorsion(orders, relations, index_table)


# ---------------------------------------------------------------------------
# Brauer classes


def place_to_str(v: Place) -> str:
    return str(v)


def place_from_str(s: str) -> Place:
    return REAL_PLACE if s == "oo" else finite_place(int(s))


def brauer_to_json(c: BrauerClass) -> dict:
    field = c.field
    if isinstance(field, Rationals):
        return {
            "backend": "Q",
            "inv": [[place_to_str(v), frac_to_str(f)] for v, f in c.data],
        }
    if isinstance(field, (Reals, PAdics)):
        return {"backend": str(field), "inv": frac_to_str(c.data[0])}
    if isinstance(field, GaloisField):
        return {"backend": str(field), "inv": "0"}
    return {"backend": "abstract", "exp": list(c.data)}


def brauer_from_json(data: dict, field: Field) -> BrauerClass:
    if not isinstance(data, dict):
        raise SchemaError("a Brauer class is a JSON object")
    backend = data.get("backend")
    if backend is not None and backend != str(field):
        raise SchemaError(f"class backend {backend!r} does not match field {field}")
    if isinstance(field, Rationals):
        inv = {}
        for entry in data.get("inv", []):
            v, f = entry
            inv[place_from_str(v)] = frac_from_str(f)
        return BrauerClass.from_invariants(inv, field)
    if isinstance(field, Reals):
        value = frac_from_str(data.get("inv", "0"))
        if value not in (Fraction(0), Fraction(1, 2)):
            raise DomainError("the real invariant must be 0 or 1/2")
        return BrauerClass(field, (value,))
    if isinstance(field, PAdics):
        return BrauerClass.local(frac_from_str(data.get("inv", "0")), field)
    if isinstance(field, GaloisField):
        return BrauerClass.zero(field)
    if isinstance(field, DeclaredTorsion):
        return BrauerClass.declared(tuple(int(e) for e in data["exp"]), field)
    raise DomainError(f"unsupported field {field}")


# ---------------------------------------------------------------------------
# Algebras


def csa_to_json(A: CSA) -> dict:
    return {
        "class": brauer_to_json(A.brclass),
        "deg": A.degree,
        "index": A.index,
        "period": A.period,
    }


def csa_from_json(data: dict, field: Field) -> CSA:
    if "quat" in data:
        a, b = (_square_entry(x) for x in data["quat"])
        A = quaternion(a, b, field)
    elif "biquat" in data:
        a1, b1, a2, b2 = (_square_entry(x) for x in data["biquat"])
        A = biquaternion(a1, b1, a2, b2, field)
    elif "class" in data:
        A = CSA(brauer_from_json(data["class"], field), int(data["deg"]))
    else:
        raise SchemaError("a CSA needs 'quat', 'biquat' or 'class'+'deg'")
    if "deg" in data and "class" not in data:
        deg = int(data["deg"])
        if deg % A.degree != 0:
            raise DomainError("requested degree is incompatible with the constructor")
        A = CSA(A.brclass, deg)
    return A


def _square_entry(x) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise SchemaError("square-class entries are integers or integer strings")
    return int(x)


# ---------------------------------------------------------------------------
# Quadratic forms


def form_to_json(q: QuadraticForm) -> dict:
    return {"coeffs": [str(c.rep) for c in q.coefficients]}


def form_from_json(data: dict, field: Field) -> QuadraticForm:
    if "coeffs" in data:
        return form([_square_entry(c) for c in data["coeffs"]], field)
    if "albert" in data:
        a1, b1, a2, b2 = (_square_entry(x) for x in data["albert"])
        return albert_form(a1, b1, a2, b2, field)
    if "pairs" in data:
        pairs = [(_square_entry(a), _square_entry(b)) for a, b in data["pairs"]]
        return odd_form_with_clifford_class(pairs, field)
    raise SchemaError("a form needs 'coeffs', 'albert' or 'pairs'")


# ---------------------------------------------------------------------------
# Ring elements


def ring_to_json(e: RingElement) -> list:
    return [[m, brauer_to_json(c)] for c, m in e.terms]


def ring_from_json(data: list, field: Field) -> RingElement:
    if not isinstance(data, list):
        raise SchemaError("a ring element is a JSON list of [mult, class] pairs")
    pairs = []
    for entry in data:
        mult, cls = entry
        pairs.append((int(mult), brauer_from_json(cls, field)))
    return RingElement.combination(pairs, field)


def canonical_to_json(c: CanonicalForm) -> dict:
    return {
        "aug": c.augmentation,
        "primary": [[p, brauer_to_json(cls), m] for (p, cls), m in c.parts],
    }


# ---------------------------------------------------------------------------
# Varieties


def variety_from_json(data: dict, field: Field) -> TwistedVariety:
    if not isinstance(data, dict) or len(data) != 1:
        raise SchemaError("a variety descriptor has exactly one family key")
    (family, payload), = data.items()
    if family == "sb":
        return SeveriBrauer(csa_from_json(payload, field))
    if family == "gr":
        rest = {k: v for k, v in payload.items() if k != "d"}
        return Grassmannian(int(payload["d"]), csa_from_json(rest, field))
    if family == "quadric":
        return Quadric(form_from_json(payload, field))
    if family == "hp":
        return QuaternionProjective(csa_from_json(payload, field))
    if family == "iv":
        if "albert_pairs" in payload:
            a1, b1, a2, b2 = (_square_entry(x) for x in payload["albert_pairs"])
            return involution_from_biquaternion(a1, b1, a2, b2, field)
        if "form" in payload:
            return involution_from_form(form_from_json(payload["form"], field))
        return InvolutionVariety(
            csa_from_json(payload["csa"], field),
            brauer_from_json(payload["cplus"], field),
            brauer_from_json(payload["cminus"], field),
        )
    if family == "product":
        return Product(tuple(variety_from_json(v, field) for v in payload))
    raise SchemaError(f"unknown variety family {family!r}")


def variety_to_json(v: TwistedVariety) -> dict:
    if isinstance(v, SeveriBrauer):
        return {"sb": csa_to_json(v.A)}
    if isinstance(v, Grassmannian):
        return {"gr": {"d": v.d, **csa_to_json(v.A)}}
    if isinstance(v, Quadric):
        return {"quadric": form_to_json(v.q)}
    if isinstance(v, QuaternionProjective):
        return {"hp": csa_to_json(v.A)}
    if isinstance(v, InvolutionVariety):
        return {
            "iv": {
                "csa": csa_to_json(v.A),
                "cplus": brauer_to_json(v.c_plus),
                "cminus": brauer_to_json(v.c_minus),
            }
        }
    if isinstance(v, Product):
        return {"product": [variety_to_json(f) for f in v.factors]}
    raise DomainError(f"unknown variety {v!r}")


# ---------------------------------------------------------------------------
# Verdicts


def verdict_to_json(v: Verdict) -> dict:
    return {
        "measure_equal": v.measure_equal,
        "count_equal": v.count_equal,
        "subgroup_equal": v.subgroup_equal,
        "isomorphic": str(v.isomorphic),
        "birational": str(v.birational),
        "stably_birational": str(v.stably_birational),
        "chain": list(v.chain),
    }
