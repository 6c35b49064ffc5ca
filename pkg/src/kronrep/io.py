"""JSON module files.

A module file looks like::

    {"field": {"prime": 5}, "r": 3, "dim": [2, 2],
     "maps": [[[1, 0], [0, 1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]]}

Each map is a d2 x d1 row-major integer matrix (over Q entries may also be
strings such as "1/2").  Entries are reduced modulo p on load, so files that
differ only by representatives parse to equal modules and dump identically.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exactlin import Field
from .quiver_rep import InvalidModuleError, KroneckerModule, validate


class ModuleFormatError(ValueError):
    """Malformed module document; the message names the offending location."""


def parse_field(desc) -> Field:
    if not isinstance(desc, dict):
        raise ModuleFormatError("field: expected an object like {\"prime\": 5} or {\"rational\": true}")
    if "prime" in desc:
        try:
            return Field.prime(int(desc["prime"]))
        except ValueError as exc:
            raise ModuleFormatError(f"field.prime: {exc}") from None
    if desc.get("rational") is True:
        return Field.rational()
    raise ModuleFormatError(f"field: unrecognized descriptor {desc!r}")


def _entry(x, where: str):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ModuleFormatError(f"{where}: expected an integer, got {x!r}")
    try:
        return Fraction(x)
    except ValueError:
        raise ModuleFormatError(f"{where}: cannot read {x!r} as a number") from None


def module_from_dict(doc: dict, field: Field = None) -> KroneckerModule:
    """Build a module from a decoded document; ``field`` overrides the stored field."""
    if not isinstance(doc, dict):
        raise ModuleFormatError("document: expected a JSON object")
    for key in ("field", "r", "dim", "maps"):
        if key not in doc:
            raise ModuleFormatError(f"{key}: missing")
    F = parse_field(doc["field"]) if field is None else field
    r, dim, maps = doc["r"], doc["dim"], doc["maps"]
    if not isinstance(r, int) or isinstance(r, bool):
        raise ModuleFormatError("r: expected an integer")
    if not (isinstance(dim, list) and len(dim) == 2 and all(isinstance(x, int) for x in dim)):
        raise ModuleFormatError("dim: expected a pair of integers")
    if not isinstance(maps, list):
        raise ModuleFormatError("maps: expected a list of matrices")
    d1, d2 = dim
    arrays = []
    for i, m in enumerate(maps):
        if not isinstance(m, list) or any(not isinstance(row, list) for row in m):
            raise ModuleFormatError(f"maps[{i}]: expected a list of rows")
        rows = [[_entry(x, f"maps[{i}][{a}][{b}]") for b, x in enumerate(row)] for a, row in enumerate(m)]
        if d1 == 0:
            rows = [[] for _ in range(d2)] if not rows else rows
        if any(len(row) != d1 for row in rows) or len(rows) != d2:
            raise ModuleFormatError(f"maps[{i}]: shape does not match dim {d1}x{d2} (rows x columns = d2 x d1)")
        arrays.append(F.array(rows, shape=(d2, d1)) if d1 * d2 else F.zeros(d2, d1))
    problem = validate(F, r, (d1, d2), arrays)
    if problem:
        raise InvalidModuleError(problem)
    return KroneckerModule(F, r, d1, d2, tuple(arrays))


def parse_module(text: str, field: Field = None) -> KroneckerModule:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModuleFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return module_from_dict(doc, field)


def _scalar_out(F: Field, x):
    if F.p is not None:
        return int(x)
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else str(x)


def module_to_dict(M: KroneckerModule) -> dict:
    F = M.field
    return {"field": F.descriptor(), "r": M.r, "dim": [M.d1, M.d2],
            "maps": [[[_scalar_out(F, x) for x in row] for row in m] for m in M.maps]}


def dump_module(M: KroneckerModule) -> str:
    """Canonical text: equal modules dump to identical strings."""
    return json.dumps(module_to_dict(M), sort_keys=True, separators=(", ", ": ")) + "\n"
