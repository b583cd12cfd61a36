"""JSON documents describing canonical collections.

Four kinds are understood::

    {"kind": "british", "bases": [16, 16, 28, 4, 20], "cycle_from": 4}
    {"kind": "explicit", "levels": [{"base": 3, "digits": [-1, 0, 1]}], "cycle_from": 0}
    {"kind": "collatz"}
    {"kind": "fractran", "program": "33/20 5/11 13/10 1/5 2/3 10/7 7/2"}

For the first two, the listed levels come first and then
``levels[cycle_from:]`` repeats forever (``cycle_from`` defaults to 0).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .canonical import British, ExplicitPeriodic, LevelSpec
from .fractran import FractranSyntaxError, parse
from .reductions import CollatzSpec, FractranTypeSpec


class SpecError(ValueError):
    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"{where}: {message}")


_KEYS = {
    "british": {"kind", "bases", "cycle_from"},
    "explicit": {"kind", "levels", "cycle_from"},
    "collatz": {"kind"},
    "fractran": {"kind", "program"},
}


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(where, f"expected an integer, got {value!r}")
    return value


def _list(value: Any, where: str) -> list:
    if not isinstance(value, list) or not value:
        raise SpecError(where, "expected a nonempty list")
    return value


def from_document(doc: Any) -> LevelSpec:
    if not isinstance(doc, dict):
        raise SpecError("$", "expected a JSON object")
    kind = doc.get("kind")
    if kind not in _KEYS:
        raise SpecError("$.kind", f"expected one of {sorted(_KEYS)}, got {kind!r}")
    extra = set(doc) - _KEYS[kind]
    if extra:
        raise SpecError("$", f"unexpected field(s) {sorted(extra)} for kind {kind!r}")

    if kind == "collatz":
        return CollatzSpec()
    if kind == "fractran":
        text = doc.get("program")
        if not isinstance(text, str):
            raise SpecError("$.program", "expected a program string")
        try:
            return FractranTypeSpec(parse(text))
        except FractranSyntaxError as exc:
            raise SpecError("$.program", str(exc)) from exc

    cycle_from = _int(doc.get("cycle_from", 0), "$.cycle_from")
    if kind == "british":
        bases = [_int(b, f"$.bases[{i}]") for i, b in enumerate(_list(doc.get("bases"), "$.bases"))]
        for i, b in enumerate(bases):
            if b < 2:
                raise SpecError(f"$.bases[{i}]", f"base must be >= 2, got {b}")
        if not 0 <= cycle_from < len(bases):
            raise SpecError("$.cycle_from", f"must index into bases, got {cycle_from}")
        return British(bases, cycle_from)

    digit_sets = []
    for i, entry in enumerate(_list(doc.get("levels"), "$.levels")):
        where = f"$.levels[{i}]"
        if not isinstance(entry, dict) or set(entry) - {"base", "digits"}:
            raise SpecError(where, 'expected {"base": int, "digits": [int, ...]}')
        digits = [_int(d, f"{where}.digits[{j}]") for j, d in enumerate(_list(entry.get("digits"), f"{where}.digits"))]
        if len(set(digits)) != len(digits):
            raise SpecError(f"{where}.digits", "repeated digit")
        if "base" in entry and _int(entry["base"], f"{where}.base") != len(digits):
            raise SpecError(f"{where}.base", f"base {entry['base']} differs from the {len(digits)} digits given")
        digit_sets.append(digits)
    if not 0 <= cycle_from < len(digit_sets):
        raise SpecError("$.cycle_from", f"must index into levels, got {cycle_from}")
    try:
        return ExplicitPeriodic(digit_sets, cycle_from)
    except ValueError as exc:
        raise SpecError("$.levels", str(exc)) from exc


def to_document(spec: LevelSpec) -> dict:
    if isinstance(spec, British):
        return {"kind": "british", "bases": list(spec.bases), "cycle_from": spec.cycle_from}
    if isinstance(spec, ExplicitPeriodic):
        levels = [{"base": len(t), "digits": list(t)} for t in spec.digit_sets]
        return {"kind": "explicit", "levels": levels, "cycle_from": spec.cycle_from}
    if isinstance(spec, CollatzSpec):
        return {"kind": "collatz"}
    if isinstance(spec, FractranTypeSpec):
        return {"kind": "fractran", "program": str(spec.program)}
    raise TypeError(f"no document form for {spec!r}")


def loads(text: str) -> LevelSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"line {exc.lineno} column {exc.colno}", exc.msg) from exc
    return from_document(doc)


def dumps(spec: LevelSpec) -> str:
    return json.dumps(to_document(spec), indent=2)


def load(path: str | Path) -> LevelSpec:
    return loads(Path(path).read_text())


def dump(spec: LevelSpec, path: str | Path) -> None:
    Path(path).write_text(dumps(spec) + "\n")
