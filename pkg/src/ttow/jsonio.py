"""JSON wire formats (schema "ttow/1") for tensors, operators,
polynomials, ideals, subframes, complexes, and verdicts.

Every emitter produces deterministic structures (sorted terms, explicit
field tags) so that identical jobs yield byte-identical output.
"""

import json

from .errors import ValidationError
from .fields import field_from_json
from .groebner import Ideal
from .operators import TransverseOperator
from .polys import GREVLEX, MultiPoly, poly_to_string
from .singularity import Subframe
from .tensors import Frame, Tensor

SCHEMA = "ttow/1"


def _scalar_out(field, x):
    s = field.fmt(x)
    try:
        return int(s)
    except ValueError:
        return s


def tensor_to_json(t):
    field = t.frame.field
    entries = []
    for idx in t.frame.indices():
        val = t[idx]
        if not field.is_zero(val):
            entries.append({"idx": list(idx), "val": _scalar_out(field, val)})
    return {"field": field.to_json(), "dims": list(t.frame.dims), "entries": entries}


def tensor_from_json(obj, field=None):
    if field is None:
        field = field_from_json(obj["field"])
    frame = Frame(tuple(obj["dims"]), field)
    if "dense" in obj:
        coeffs = [field.parse(x) for x in obj["dense"]]
        return Tensor(frame, coeffs)
    t = Tensor.zero(frame)
    for entry in obj.get("entries", []):
        t.coeffs[frame.flat(tuple(entry["idx"]))] = field.parse(entry["val"])
    return t


def operator_to_json(omega):
    field = omega.frame.field
    return {
        "matrices": [
            [[_scalar_out(field, x) for x in row] for row in m] for m in omega.mats
        ],
        "variance": list(omega.variance),
    }


def operator_from_json(obj, frame):
    field = frame.field
    mats = [
        [[field.parse(x) for x in row] for row in m] for m in obj["matrices"]
    ]
    return TransverseOperator(frame, mats, obj.get("variance"))


def poly_to_json(p, order=GREVLEX):
    field = p.field
    terms = sorted(p.terms, key=order.key, reverse=True)
    return {
        "terms": [
            {"coeff": _scalar_out(field, p.terms[e]), "exp": list(e)} for e in terms
        ]
    }


def poly_from_json(obj, field, nvars=None):
    terms = {}
    for term in obj["terms"]:
        e = tuple(int(k) for k in term["exp"])
        if nvars is not None and len(e) != nvars:
            raise ValidationError("exponent length mismatch")
        terms[e] = field.parse(term["coeff"])
    if not terms:
        if nvars is None:
            raise ValidationError("cannot infer variable count of the zero polynomial")
        return MultiPoly.zero(field, nvars)
    n = nvars if nvars is not None else len(next(iter(terms)))
    return MultiPoly(field, n, terms)


def ideal_to_json(I):
    return {
        "field": I.field.to_json(),
        "nvars": I.nvars,
        "basis": [poly_to_json(g, I.order) for g in I.gb],
        "strings": [poly_to_string(g) for g in I.gb],
    }


def ideal_from_json(obj, order=GREVLEX):
    field = field_from_json(obj["field"])
    nvars = obj["nvars"]
    gens = [poly_from_json(g, field, nvars) for g in obj["basis"]]
    return Ideal(gens, order) if gens else Ideal.zero(field, nvars, order)


def subframe_to_json(U):
    field = U.frame.field
    return {
        "axes": [
            {
                "axis": a,
                "basis": [[_scalar_out(field, x) for x in row] for row in rows],
            }
            for a, rows in enumerate(U.bases)
        ]
    }


def subframe_from_json(obj, frame):
    field = frame.field
    bases = [[] for _ in frame.dims]
    for ax in obj["axes"]:
        a = int(ax["axis"])
        if not 0 <= a < len(frame.dims):
            raise ValidationError("subframe axis out of range")
        bases[a] = [[field.parse(x) for x in row] for row in ax["basis"]]
    return Subframe(frame, bases)


def complex_to_json(cx):
    return {
        "ground": cx.ground_size,
        "facets": [sorted(f) for f in cx.facets()],
    }


def verdict_to_json(v):
    out = {"outcome": v.outcome}
    if v.reason is not None:
        out["reason"] = v.reason
    if v.outcome == "composable":
        out["A"] = v.A
        out["B"] = v.B
        out["witnesses"] = [
            {"e": list(e), "f": list(f)} for e, f in (v.witnesses or [])
        ]
    return out


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def load_file(path):
    with open(path) as fh:
        return json.load(fh)
