"""Exact JSON documents for automorphisms and single functions.

An automorphism document has two records, ``phi`` and ``psi``::

    {"phi": {"breakpoints": [["0", "0"]], "left_slope": "2", "right_slope": "2"},
     "psi": {"breakpoints": [["0", "0"]], "left_slope": "1/2", "right_slope": "1/2"}}

Numbers are strings of the form ``-?digits`` or ``-?digits/digits`` (JSON
integers are accepted as well).  Orientation is never stored.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .automorphism import FGPair, HElement
from .homeo import PLFunction, PLHomeo, canonicalize

__all__ = [
    "ParseError",
    "parse_number",
    "loads_record",
    "loads_element",
    "dumps_element",
    "dumps_function",
    "dumps_fg",
    "element_to_obj",
    "element_from_obj",
]

_NUMBER = re.compile(r"-?[0-9]+(?:/[0-9]+)?")


class ParseError(ValueError):
    """Malformed document; ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


def _locate(text: str | None, token: str) -> tuple[int | None, int | None]:
    if text is None:
        return None, None
    pos = text.find(json.dumps(token))
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    column = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, column


def parse_number(raw: Any, text: str | None = None) -> Fraction:
    if isinstance(raw, bool):
        raise ParseError(f"expected a number, got {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if not isinstance(raw, str):
        raise ParseError(f"numbers must be integer or 'p/q' strings, got {raw!r}")
    if not _NUMBER.fullmatch(raw):
        raise ParseError(f"malformed number {raw!r}", *_locate(text, raw))
    num, _, den = raw.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {raw!r}", *_locate(text, raw))
    return Fraction(int(num), int(den) if den else 1)


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _record(obj: Any, key: str, text: str | None, homeo: bool) -> PLFunction:
    if not isinstance(obj, dict):
        raise ParseError(f"record {key!r} must be an object")
    missing = {"breakpoints", "left_slope", "right_slope"} - obj.keys()
    if missing:
        raise ParseError(f"record {key!r} is missing {sorted(missing)}")
    bps = obj["breakpoints"]
    if not isinstance(bps, list) or not all(isinstance(b, list) and len(b) == 2 for b in bps):
        raise ParseError(f"record {key!r}: breakpoints must be a list of [t, value] pairs")
    points = [(parse_number(t, text), parse_number(v, text)) for t, v in bps]
    left = parse_number(obj["left_slope"], text)
    right = parse_number(obj["right_slope"], text)
    cls = PLHomeo if homeo else PLFunction
    return cls.from_points(points, left, right)


def element_from_obj(obj: Any, text: str | None = None) -> HElement:
    """Build an HElement; raises ParseError for malformed input and
    InvariantError for well-formed input that violates an invariant."""
    if not isinstance(obj, dict) or not {"phi", "psi"} <= obj.keys():
        raise ParseError("document must be an object with records 'phi' and 'psi'")
    return HElement(_record(obj["phi"], "phi", text, True), _record(obj["psi"], "psi", text, True))


def loads_element(text: str) -> HElement:
    return element_from_obj(_load_json(text), text)


def loads_record(text: str, homeo: bool = False, key: str | None = None) -> PLFunction:
    """Parse a single function record, optionally nested under ``key``."""
    obj = _load_json(text)
    if key is not None and isinstance(obj, dict) and key in obj and "breakpoints" not in obj:
        obj = obj[key]
    return _record(obj, key or "function", text, homeo)


def function_to_obj(p: PLFunction) -> dict:
    p = canonicalize(p)
    return {
        "breakpoints": [[str(t), str(v)] for t, v in p.breakpoints],
        "left_slope": str(p.left_slope),
        "right_slope": str(p.right_slope),
    }


def element_to_obj(a: HElement) -> dict:
    return {"phi": function_to_obj(a.phi), "psi": function_to_obj(a.psi)}


def _dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def dumps_element(a: HElement) -> str:
    return _dumps(element_to_obj(a))


def dumps_function(p: PLFunction) -> str:
    return _dumps(function_to_obj(p))


def dumps_fg(p: FGPair) -> str:
    return _dumps({"f": function_to_obj(p.f), "g": function_to_obj(p.g)})
