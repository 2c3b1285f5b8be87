"""JSON import and export of Hopf algebra structure constants.

Layout (indices 0-based, coefficients in scalar text form, omitted entries zero)::

    {
      "name": "Sweedler",
      "field": {"type": "Q"},
      "dim": 4,
      "basis": ["1", "g", "x", "gx"],
      "mult":     [[i, j, k, "c"], ...],   e_i e_j contains c e_k
      "comult":   [[i, j, k, "c"], ...],   Delta(e_i) contains c e_j (x) e_k
      "counit":   [[i, "c"], ...],
      "antipode": [[i, j, "c"], ...],      S(e_i) contains c e_j
      "unit":     [[i, "c"], ...]          optional, solved for when absent
    }
"""

from __future__ import annotations

import json

from .errors import ParseError, SchemaError
from .fields import field_from_descriptor
from .hopf import HopfAlgebra, _add_into
from .linalg import zeros

__all__ = ["algebra_to_json", "algebra_from_json", "load_algebra", "save_algebra"]


def algebra_to_json(A):
    f = A.field
    fmt = f.format
    mult = [
        [i, j, k, fmt(c)]
        for i in range(A.dim)
        for j in range(A.dim)
        for k, c in sorted(A.mult[i][j].items())
    ]
    comult = [[i, j, k, fmt(c)] for i in range(A.dim) for (j, k), c in sorted(A.comult[i].items())]
    counit = [[i, fmt(c)] for i, c in enumerate(A.counit) if c]
    antipode = [
        [i, j, fmt(A.antipode[j, i])] for i in range(A.dim) for j in range(A.dim) if A.antipode[j, i]
    ]
    return {
        "name": A.name,
        "field": f.descriptor(),
        "dim": A.dim,
        "basis": list(A.labels),
        "mult": mult,
        "comult": comult,
        "counit": counit,
        "antipode": antipode,
        "unit": [[i, fmt(c)] for i, c in sorted(A.unit.items())],
    }


def _require(obj, key, kind, pointer=""):
    if key not in obj:
        raise SchemaError(f"{pointer}/{key}", f"missing key {key!r}")
    value = obj[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise SchemaError(f"{pointer}/{key}", f"expected {getattr(kind, '__name__', kind)}")
    return value


def _index(value, dim, pointer):
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < dim:
        raise SchemaError(pointer, f"index {value!r} out of range 0..{dim - 1}")
    return value


def _scalar(field, value, pointer):
    if isinstance(value, int) and not isinstance(value, bool):
        value = str(value)
    if not isinstance(value, str):
        raise SchemaError(pointer, "coefficient must be a string")
    try:
        return field.parse(value)
    except (ParseError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(pointer, f"bad coefficient {value!r}: {exc}") from exc


def _entries(obj, key, width, dim, field):
    rows = _require(obj, key, list)
    out = []
    for n, row in enumerate(rows):
        ptr = f"/{key}/{n}"
        if not isinstance(row, list) or len(row) != width + 1:
            raise SchemaError(ptr, f"expected {width} indices and a coefficient")
        idx = tuple(_index(row[t], dim, f"{ptr}/{t}") for t in range(width))
        out.append((idx, _scalar(field, row[width], f"{ptr}/{width}")))
    return out


def algebra_from_json(obj):
    """Build a :class:`HopfAlgebra` from parsed JSON (not validated here)."""
    if not isinstance(obj, dict):
        raise SchemaError("", "top level must be an object")
    name = _require(obj, "name", str)
    fdesc = _require(obj, "field", dict)
    try:
        field = field_from_descriptor(fdesc)
    except (KeyError, ValueError, TypeError) as exc:
        raise SchemaError("/field", f"bad field descriptor: {exc}") from exc
    dim = _require(obj, "dim", int)
    if dim < 1:
        raise SchemaError("/dim", "dimension must be positive")
    basis = _require(obj, "basis", list)
    if len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise SchemaError("/basis", f"expected {dim} strings")

    mult = [[{} for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), c in _entries(obj, "mult", 3, dim, field):
        _add_into(mult[i][j], k, c)
    comult = [{} for _ in range(dim)]
    for (i, j, k), c in _entries(obj, "comult", 3, dim, field):
        _add_into(comult[i], (j, k), c)
    counit = [field.zero] * dim
    for (i,), c in _entries(obj, "counit", 1, dim, field):
        counit[i] = counit[i] + c
    S = zeros(field, dim)
    for (i, j), c in _entries(obj, "antipode", 2, dim, field):
        S[j, i] = S[j, i] + c
    unit = None
    if "unit" in obj:
        unit = {}
        for (i,), c in _entries(obj, "unit", 1, dim, field):
            _add_into(unit, i, c)
    return HopfAlgebra(field, dim, mult, comult, counit, S, unit=unit, labels=basis, name=name)


def load_algebra(path):
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError("", f"invalid JSON: {exc}") from exc
    return algebra_from_json(obj)


def save_algebra(A, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(algebra_to_json(A), fh, indent=1)
        fh.write("\n")
