"""JSON suite files.

Numbers are read as :class:`~decimal.Decimal` so that the printed precision of
expected values survives loading (it sets the comparison tolerance) and saving
writes them back digit for digit.
"""
from __future__ import annotations

import json
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Any

from ..errors import FRIError, ParseError, SchemaError
from ..fuzzyset import Trapezoid
from ..khcore import make_problem
from .corpus import NAN, BenchmarkCase, Expected

SET_KEYS = ("A1", "A2", "Astar", "B1", "B2")


def _number(value: Any, where: str) -> Decimal:
    if isinstance(value, Decimal) and value.is_finite():
        return value
    raise ParseError(f"{where}: expected a number, got {value!r}")


def _points(value: Any, where: str) -> tuple[float, ...]:
    if not isinstance(value, list) or len(value) != 4:
        raise ParseError(f"{where}: expected a list of 4 numbers, got {value!r}")
    return tuple(float(_number(v, f"{where}[{i}]")) for i, v in enumerate(value))


def _bound(value: Any, where: str):
    if value == NAN:
        return NAN
    return _number(value, where)


def _flag(value: Any, where: str) -> int:
    if isinstance(value, Decimal) and value in (0, 1):
        return int(value)
    raise ParseError(f"{where}: expected 0 or 1, got {value!r}")


def _expected(raw: Any, where: str) -> Expected:
    if not isinstance(raw, dict):
        raise ParseError(f"{where}: expected an object")
    out: dict[str, Any] = {}
    if "Bstar" in raw:
        pts = raw["Bstar"]
        if not isinstance(pts, list) or len(pts) != 4:
            raise ParseError(f"{where}.Bstar: expected a list of 4 numbers")
        out["bstar"] = tuple(_number(v, f"{where}.Bstar[{i}]") for i, v in enumerate(pts))
    for key, attr, conv in (
        ("maxDevLeft", "max_dev_left", _number),
        ("maxDevRight", "max_dev_right", _number),
        ("ELeft", "e_left", _bound),
        ("ERight", "e_right", _bound),
        ("slopeLeft", "slope_left", _flag),
        ("slopeRight", "slope_right", _flag),
    ):
        if key in raw:
            out[attr] = conv(raw[key], f"{where}.{key}")
    if "cases" in raw:
        cases = raw["cases"]
        if not isinstance(cases, list) or not all(isinstance(c, str) for c in cases):
            raise ParseError(f"{where}.cases: expected a list of strings")
        out["cases"] = frozenset(cases)
    return Expected(**out)


def parse_suite(text: str, source: str = "<string>") -> tuple[str, list[BenchmarkCase]]:
    try:
        doc = json.loads(text, parse_float=Decimal, parse_int=Decimal)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    except InvalidOperation as exc:
        raise ParseError(f"{source}: malformed number") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("cases"), list):
        raise ParseError(f"{source}: top level must be an object with a 'cases' list")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError(f"{source}: 'name' must be a string")

    cases = []
    for i, raw in enumerate(doc["cases"]):
        where = f"{source}: cases[{i}]"
        if not isinstance(raw, dict):
            raise ParseError(f"{where}: expected an object")
        cid = raw.get("id")
        if not isinstance(cid, str) or not cid:
            raise ParseError(f"{where}.id: expected a non-empty string")
        where = f"{source}: case {cid}"
        missing = [k for k in SET_KEYS if k not in raw]
        if missing:
            raise ParseError(f"{where}: missing {', '.join(missing)}")
        pts = {k: _points(raw[k], f"{where}.{k}") for k in SET_KEYS}
        try:
            problem = make_problem(pts["A1"], pts["B1"], pts["A2"], pts["B2"], pts["Astar"])
        except FRIError as exc:
            raise SchemaError(f"{where}: {exc}") from exc
        expected = _expected(raw["expected"], f"{where}.expected") if "expected" in raw else None
        provenance = raw.get("provenance", "")
        if not isinstance(provenance, str):
            raise ParseError(f"{where}.provenance: expected a string")
        cases.append(BenchmarkCase(cid, problem, expected, provenance))
    return name, cases


def load_suite(path) -> list[BenchmarkCase]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    return parse_suite(text, str(path))[1]


def _num(x) -> str:
    if isinstance(x, Decimal):
        return str(x)
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def _points_json(s: Trapezoid) -> str:
    return "[" + ", ".join(_num(v) for v in s.points) + "]"


def _case_json(case: BenchmarkCase) -> list[str]:
    p = case.problem
    sets = {"A1": p.a1, "A2": p.a2, "Astar": p.astar, "B1": p.b1, "B2": p.b2}
    fields = [f'"id": {json.dumps(case.id)}']
    if case.provenance:
        fields.append(f'"provenance": {json.dumps(case.provenance)}')
    fields += [f'"{k}": {_points_json(s)}' for k, s in sets.items()]
    e = case.expected
    if e is not None:
        inner = []
        if e.bstar is not None:
            inner.append('"Bstar": [' + ", ".join(_num(v) for v in e.bstar) + "]")
        for key, val in (("maxDevLeft", e.max_dev_left), ("maxDevRight", e.max_dev_right)):
            if val is not None:
                inner.append(f'"{key}": {_num(val)}')
        for key, val in (("ELeft", e.e_left), ("ERight", e.e_right)):
            if val is not None:
                inner.append(f'"{key}": ' + (json.dumps(NAN) if val == NAN else _num(val)))
        for key, val in (("slopeLeft", e.slope_left), ("slopeRight", e.slope_right)):
            if val is not None:
                inner.append(f'"{key}": {int(val)}')
        if e.cases is not None:
            inner.append('"cases": ' + json.dumps(sorted(e.cases)))
        fields.append('"expected": {\n        ' + ",\n        ".join(inner) + "\n      }")
    return fields


def dump_suite(cases: list[BenchmarkCase], name: str = "") -> str:
    body = []
    for case in cases:
        body.append("    {\n      " + ",\n      ".join(_case_json(case)) + "\n    }")
    cases_json = "[\n" + ",\n".join(body) + "\n  ]" if body else "[]"
    return "{\n" + f'  "name": {json.dumps(name)},\n  "cases": {cases_json}\n' + "}\n"


def save_suite(cases: list[BenchmarkCase], path, name: str = "") -> None:
    Path(path).write_text(dump_suite(cases, name), encoding="utf-8")
