"""JSON interchange for field specs, codes, systems, witnesses and reports.

Schemas:

* field spec: {"p": 2, "e": 1, "m": 3, "gq": [...], "gqm": [...]} with the
  polynomials optional (canonical lexicographic minimum when omitted) and
  coefficients listed from the constant term up;
* code document: {"field": <field spec>, "generator": [[elem, ...], ...]};
* system document: {"field": <field spec>, "basis": [[elem, ...], ...]}.

An element of F_{q^m} serializes as the array of its m F_q-coefficients; an
F_q coefficient is a bare int when e = 1 and the array of its e prime-field
coordinates otherwise.  Bare ints are also accepted anywhere on input.
Serialization is deterministic: fixed key order, no timestamps, so identical
inputs give byte-identical documents.
"""

from __future__ import annotations

import json
from typing import Any

from .codes import RankMetricCode, new_code
from .errors import DomainError
from .fields import FieldTower, make_tower
from .linalg import Mat
from .qsystems import QSystem


def dumps_canonical(obj: Any) -> str:
    """Stable JSON rendering used for every emitted document."""
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# -- field spec ---------------------------------------------------------------

def _coeff_to_json(tower: FieldTower, c: int):
    if tower.e == 1:
        return c
    return list(tower.base_coeffs(c))


def _coeff_from_json(tower: FieldTower, obj) -> int:
    if isinstance(obj, int):
        return obj
    if isinstance(obj, list):
        if len(obj) != tower.e:
            raise DomainError(
                f"F_q coefficient array must have length e = {tower.e}")
        return tower.base_from_coeffs(obj)
    raise DomainError(f"cannot parse F_q coefficient from {obj!r}")


def field_to_json(tower: FieldTower) -> dict:
    return {
        "p": tower.p,
        "e": tower.e,
        "m": tower.m,
        "gq": list(tower.gq),
        "gqm": [_coeff_to_json(tower, c) for c in tower.gqm],
    }


def _coeff_parse(p: int, e: int, obj) -> int:
    """F_q coefficient from a bare int or an F_p-coordinate array."""
    if isinstance(obj, int):
        return obj
    if isinstance(obj, list):
        if len(obj) != e:
            raise DomainError(
                f"F_q coefficient array must have length e = {e}")
        c = 0
        for d in reversed(obj):
            c = c * p + d
        return c
    raise DomainError(f"cannot parse F_q coefficient from {obj!r}")


def field_from_json(obj: dict) -> FieldTower:
    if not isinstance(obj, dict):
        raise DomainError("field spec must be a JSON object")
    try:
        p = obj["p"]
    except KeyError:
        raise DomainError("field spec needs the prime p") from None
    e = obj.get("e", 1)
    m = obj.get("m", 1)
    if not (isinstance(p, int) and isinstance(e, int) and isinstance(m, int)):
        raise DomainError("p, e, m must be integers")
    gq = obj.get("gq")
    if gq is not None:
        gq = tuple(gq)
    gqm = obj.get("gqm")
    if gqm is not None:
        gqm = tuple(_coeff_parse(p, e, c) for c in gqm)
    return make_tower(p, e, m, gq=gq, gqm=gqm)


# -- elements and matrices ----------------------------------------------------

def elem_to_json(tower: FieldTower, a: int) -> list:
    return [_coeff_to_json(tower, c) for c in tower.ext_coeffs(a)]


def elem_from_json(tower: FieldTower, obj) -> int:
    if isinstance(obj, int):
        tower.ext.check_element(obj)
        return obj
    if isinstance(obj, list):
        if len(obj) != tower.m:
            raise DomainError(
                f"element array must have length m = {tower.m}")
        return tower.ext_from_coeffs(
            _coeff_from_json(tower, c) for c in obj)
    raise DomainError(f"cannot parse element from {obj!r}")


def matrix_to_json(tower: FieldTower, M: Mat) -> list:
    return [[elem_to_json(tower, x) for x in row] for row in M.rows]


def matrix_from_json(tower: FieldTower, rows) -> Mat:
    if not isinstance(rows, list) or not rows:
        raise DomainError("matrix must be a nonempty array of rows")
    return Mat(tower.ext,
               [[elem_from_json(tower, x) for x in row] for row in rows])


# -- code and system documents -------------------------------------------------

def code_to_json(C: RankMetricCode) -> dict:
    return {"field": field_to_json(C.tower),
            "generator": matrix_to_json(C.tower, C.G)}


def code_from_json(obj: dict) -> RankMetricCode:
    if not isinstance(obj, dict) or "generator" not in obj:
        raise DomainError("code document needs a generator")
    tower = field_from_json(obj.get("field", {}))
    return new_code(tower, matrix_from_json(tower, obj["generator"]))


def system_to_json(U: QSystem) -> dict:
    return {"field": field_to_json(U.tower),
            "basis": matrix_to_json(U.tower, U.basis)}


def system_from_json(obj: dict) -> QSystem:
    if not isinstance(obj, dict) or "basis" not in obj:
        raise DomainError("system document needs a basis")
    tower = field_from_json(obj.get("field", {}))
    return QSystem(tower, matrix_from_json(tower, obj["basis"]))


def witness_to_json(tower: FieldTower, witness) -> dict:
    return {"W": matrix_to_json(tower, witness.W),
            "intersection_dim": witness.intersection_dim}


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise DomainError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON in {path}: {exc}") from None
