"""Reading instance files.

An instance file is a JSON object in one of two modes::

    {"mode": "roots",  "p": 5, "roots": ["0", "25", "1", "2", "3", "4"],
     "label": "optional"}

    {"mode": "matrix", "valuations": [[null, 1], [1, null]],
     "label": "optional"}

Roots are decimal strings, either integers or fractions ``"a/b"``, so the
file format carries no integer-width assumptions; plain JSON integers are
accepted as well.  The matrix diagonal must be ``null``.  Exactly the fields
of the declared mode may appear.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import InstanceError
from .valuation import Instance, ValuationMatrix, matrix_from_rows

_FIELDS = {
    "roots": {"mode", "p", "roots", "label"},
    "matrix": {"mode", "valuations", "label"},
}
_REQUIRED = {
    "roots": {"mode", "p", "roots"},
    "matrix": {"mode", "valuations"},
}


def _parse_root(raw, index: int) -> Fraction:
    if isinstance(raw, bool):
        raise InstanceError(f"root {index} must be an integer or a decimal string, got {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise InstanceError(f"root {index} is not a decimal integer or fraction: {raw!r}") from exc
    raise InstanceError(f"root {index} must be an integer or a decimal string, got {type(raw).__name__}")


def parse_instance_dict(data, *, allow_small: bool = False) -> Instance | ValuationMatrix:
    if not isinstance(data, dict):
        raise InstanceError("instance file must contain a JSON object")
    mode = data.get("mode")
    if mode not in _FIELDS:
        raise InstanceError(f"mode must be 'roots' or 'matrix', got {mode!r}")
    extra = set(data) - _FIELDS[mode]
    if extra:
        raise InstanceError(f"unexpected fields for mode '{mode}': {sorted(extra)}")
    missing = _REQUIRED[mode] - set(data)
    if missing:
        raise InstanceError(f"missing fields for mode '{mode}': {sorted(missing)}")
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise InstanceError("label must be a string")

    if mode == "roots":
        p = data["p"]
        if not isinstance(p, int) or isinstance(p, bool):
            raise InstanceError(f"p must be an integer, got {p!r}")
        raw = data["roots"]
        if not isinstance(raw, list):
            raise InstanceError("roots must be a list")
        roots = [_parse_root(x, i) for i, x in enumerate(raw)]
        inst = Instance(p=p, roots=tuple(roots), label=label)
        inst.validate(allow_small=allow_small)
        return inst

    rows = data["valuations"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InstanceError("valuations must be a 2-D array")
    for i, row in enumerate(rows):
        for j, e in enumerate(row):
            if e is None:
                if i != j:
                    raise InstanceError(f"null entry off the diagonal at ({i}, {j})")
            elif isinstance(e, bool) or not isinstance(e, int):
                raise InstanceError(f"matrix entry ({i}, {j}) must be an integer or null, got {e!r}")
    return matrix_from_rows(rows)


def load_instance(path: str | Path, *, allow_small: bool = False) -> tuple[Instance | ValuationMatrix, str | None]:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path} is not valid JSON: {exc}") from exc
    parsed = parse_instance_dict(data, allow_small=allow_small)
    label = data.get("label") if isinstance(data, dict) else None
    return parsed, label
