"""Field spec strings and the JSON form-file schema.

Field specs: ``gf2:<n>:<modulus>``, ``f2t``, ``f2t-tower:<m>``.

Form file::

    {"field": "gf2:2:7", "dim": 2, "gram": [[0, 1], [1, 0]], "diag": [1, 2]}

Binary-field elements are decimal integers; function-field elements are
expression strings in t (level 0) or u (tower levels).
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import DegreeCapExceeded, InvalidForm, ParseError
from .func_field import TowerField, parse_tower
from .gf2n import BinaryField
from .quadform import QuadForm

FORM_DEGREE_CAP = 16


def parse_field_spec(s: str):
    s = s.strip()
    m = re.fullmatch(r"gf2:(\d+):(\d+)", s)
    if m:
        return BinaryField(int(m.group(1)), int(m.group(2)))
    if s == "f2t":
        return TowerField(0)
    m = re.fullmatch(r"f2t-tower:(\d+)", s)
    if m:
        return TowerField(int(m.group(1)))
    raise ParseError(f"unrecognized field spec {s!r}")


def parse_element(F, s):
    """Element syntax of ``F``; tower fields also take ``level=<k>; expr``."""
    if isinstance(F, TowerField) and isinstance(s, str) and s.strip().startswith("level"):
        x = parse_tower(s)
        if x.level > F.level:
            raise ParseError(f"element of height {x.level} does not lie in {F.spec}")
        return x
    return F.parse_elem(s)


def form_from_dict(data: dict) -> QuadForm:
    try:
        F = parse_field_spec(data["field"])
        gram_raw = data["gram"]
        diag_raw = data["diag"]
    except KeyError as e:
        raise ParseError(f"form is missing key {e.args[0]!r}") from None
    dim = data.get("dim", len(diag_raw))
    if not isinstance(gram_raw, list) or not all(isinstance(r, list) for r in gram_raw):
        raise ParseError("gram must be a list of rows")
    if len(diag_raw) != dim or len(gram_raw) != dim or any(len(r) != dim for r in gram_raw):
        raise InvalidForm(f"declared dim {dim} does not match gram/diag sizes")
    gram = [[parse_element(F, v) for v in row] for row in gram_raw]
    diag = [parse_element(F, v) for v in diag_raw]
    if isinstance(F, TowerField):
        cap = FORM_DEGREE_CAP << F.level
        for x in diag + [v for row in gram for v in row]:
            if x.at_level(F.level).degree() > cap:
                raise DegreeCapExceeded(f"form entry {F.format_elem(x)} exceeds degree {FORM_DEGREE_CAP}")
    return QuadForm(F, gram, diag)


def form_to_dict(q: QuadForm) -> dict:
    F = q.field
    return {
        "field": F.spec,
        "dim": q.dim,
        "gram": [[F.elem_to_json(v) for v in row] for row in q.gram],
        "diag": [F.elem_to_json(v) for v in q.diag],
    }


def load_form(path) -> QuadForm:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON ({e})") from None
    return form_from_dict(data)


def dump_form(q: QuadForm, path=None) -> str:
    text = json.dumps(form_to_dict(q), indent=2, ensure_ascii=False)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text


def vector_to_json(F, v):
    return [F.elem_to_json(x) for x in v]


def matrix_to_json(F, M):
    return [vector_to_json(F, row) for row in M]
