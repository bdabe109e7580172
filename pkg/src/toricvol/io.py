"""JSON input formats and JSON/CSV report emitters.

Rationals travel as ``"p/q"`` strings (or plain integers) and are never
written as floats; floating values such as brackets are written with 17
significant digits.
"""
import csv
import io
import json
from fractions import Fraction

import mpmath

from .errors import FormatError


def parse_rational(x):
    if isinstance(x, bool):
        raise FormatError(f"boolean is not a number: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"not a rational: {x!r}") from None
    if isinstance(x, float):
        raise FormatError(f"floats are not accepted, write {x!r} as a \"p/q\" string")
    raise FormatError(f"not a rational: {x!r}")


def parse_integer(x):
    r = parse_rational(x)
    if r.denominator != 1:
        raise FormatError(f"expected an integer, got {x!r}")
    return int(r)


def _vectors(doc, field, parse):
    if not isinstance(doc, dict) or field not in doc:
        raise FormatError(f"missing field {field!r}")
    rows = doc[field]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise FormatError(f"{field!r} must be a non-empty list of lists")
    vecs = [tuple(parse(x) for x in r) for r in rows]
    dim = doc.get("dim", len(vecs[0]))
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise FormatError("dim must be a positive integer")
    if any(len(v) != dim for v in vecs):
        raise FormatError(f"every entry of {field!r} must have length {dim}")
    return dim, vecs


def parse_polytope_doc(doc):
    """``{"dim": n, "vertices": [...]}`` to the list of points."""
    return _vectors(doc, "vertices", parse_rational)[1]


def parse_cone_doc(doc):
    """``{"dim": d, "rays": [...], "label": ...}`` to ``(rays, label)``."""
    _, rays = _vectors(doc, "rays", parse_integer)
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise FormatError("label must be a string")
    return rays, label


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def kind(doc):
    """``"cone"`` or ``"polytope"`` depending on which field the document has."""
    if isinstance(doc, dict) and "rays" in doc:
        return "cone"
    if isinstance(doc, dict) and "vertices" in doc:
        return "polytope"
    raise FormatError("document has neither 'rays' nor 'vertices'")


# output ---------------------------------------------------------------------

def format_rational(x):
    return str(Fraction(x))


def format_real(x):
    if isinstance(x, Fraction):
        x = mpmath.mpf(x.numerator) / x.denominator
    return mpmath.nstr(mpmath.mpf(x), 17, min_fixed=-5, max_fixed=17)


def to_jsonable(obj, floats=False):
    """Recursively convert results; ``floats`` adds ``*_float`` twins of rationals."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, (float, mpmath.mpf)):
        return float(format_real(obj))
    if isinstance(obj, bytes):
        return obj.decode("ascii")
    if isinstance(obj, dict):
        out = {}
        for k, v in obj.items():
            out[k] = to_jsonable(v, floats)
            if floats and _has_rational(v):
                out[f"{k}_float"] = _floatify(v)
        return out
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v, floats) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _has_rational(v):
    if isinstance(v, Fraction):
        return True
    return isinstance(v, (list, tuple)) and any(_has_rational(x) for x in v)


def _floatify(v):
    if isinstance(v, (list, tuple)):
        return [_floatify(x) for x in v]
    if isinstance(v, Fraction):
        return float(format_real(v))
    return v


def dumps(obj, floats=False):
    return json.dumps(to_jsonable(obj, floats), indent=2)


def csv_table(rows, columns):
    buf = io.StringIO()
    w = csv.DictWriter(buf, columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        w.writerow({k: to_jsonable(v) if not isinstance(v, str) else v for k, v in r.items()})
    return buf.getvalue()
