"""Canonical tiling serialization: the "tiling/1" JSON document.

Layout:

    {
      "format": "tiling/1",
      "box": [24, 35],
      "rotation_policy": "fixed",
      "bricks": [[5, 5], [7, 7]],
      "placements": [
        {"brick": 0, "orientation": [0, 1], "origin": [0, 0]},
        ...
      ]
    }

Decoding is strict: unknown fields are rejected by name, missing or
mistyped fields are reported with their JSON path, and syntax errors
carry the line number from the parser.  encode/decode round-trips are
lossless field-for-field.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import FrobtileError, TilingParseError
from .model import BoxShape, Brick, Placement, Tiling

FORMAT_TAG = "tiling/1"

_TOP_FIELDS = {"format", "box", "rotation_policy", "bricks", "placements"}
_PLACEMENT_FIELDS = {"brick", "orientation", "origin"}


def encode(t: Tiling) -> str:
    """Serialize a tiling; placements one per line for diffability."""
    lines = [
        "{",
        f'  "format": {json.dumps(FORMAT_TAG)},',
        f'  "box": {json.dumps(list(t.box.sides))},',
        f'  "rotation_policy": {json.dumps(t.rotation_policy)},',
        f'  "bricks": {json.dumps([list(b.sides) for b in t.bricks])},',
        '  "placements": [',
    ]
    body = ",\n".join(
        '    {"brick": %d, "orientation": %s, "origin": %s}'
        % (p.brick_index, json.dumps(list(p.orientation)), json.dumps(list(p.origin)))
        for p in t.placements
    )
    if body:
        lines.append(body)
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _int_list(value, path: str) -> list[int]:
    if not isinstance(value, list) or not value:
        raise TilingParseError(f"{path}: expected a non-empty list of integers")
    for v in value:
        if not isinstance(v, int) or isinstance(v, bool):
            raise TilingParseError(f"{path}: expected integers, found {v!r}")
    return value


def decode(text: str) -> Tiling:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise TilingParseError(f"line {e.lineno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise TilingParseError("top level: expected an object")
    unknown = set(doc) - _TOP_FIELDS
    if unknown:
        raise TilingParseError(f"unknown field {sorted(unknown)[0]!r}")
    missing = _TOP_FIELDS - set(doc)
    if missing:
        raise TilingParseError(f"missing field {sorted(missing)[0]!r}")
    if doc["format"] != FORMAT_TAG:
        raise TilingParseError(f"format: expected {FORMAT_TAG!r}, found {doc['format']!r}")
    if not isinstance(doc["rotation_policy"], str):
        raise TilingParseError("rotation_policy: expected a string")
    if not isinstance(doc["bricks"], list):
        raise TilingParseError("bricks: expected a list")
    if not isinstance(doc["placements"], list):
        raise TilingParseError("placements: expected a list")

    box_sides = _int_list(doc["box"], "box")
    brick_sides = [
        _int_list(b, f"bricks[{i}]") for i, b in enumerate(doc["bricks"])
    ]
    placements = []
    for i, entry in enumerate(doc["placements"]):
        path = f"placements[{i}]"
        if not isinstance(entry, dict):
            raise TilingParseError(f"{path}: expected an object")
        unknown = set(entry) - _PLACEMENT_FIELDS
        if unknown:
            raise TilingParseError(f"{path}: unknown field {sorted(unknown)[0]!r}")
        missing = _PLACEMENT_FIELDS - set(entry)
        if missing:
            raise TilingParseError(f"{path}: missing field {sorted(missing)[0]!r}")
        brick = entry["brick"]
        if not isinstance(brick, int) or isinstance(brick, bool):
            raise TilingParseError(f"{path}.brick: expected an integer")
        orientation = _int_list(entry["orientation"], f"{path}.orientation")
        origin = entry["origin"]
        if not isinstance(origin, list):
            raise TilingParseError(f"{path}.origin: expected a list of integers")
        for v in origin:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TilingParseError(f"{path}.origin: expected integers, found {v!r}")
        placements.append(
            Placement(
                brick_index=brick,
                orientation=tuple(orientation),
                origin=tuple(origin),
            )
        )
    try:
        return Tiling(
            box=BoxShape(box_sides),
            bricks=tuple(Brick(b) for b in brick_sides),
            placements=tuple(placements),
            rotation_policy=doc["rotation_policy"],
        )
    except FrobtileError as e:
        raise TilingParseError(str(e)) from None


def codec_roundtrip(t: Tiling) -> Tiling:
    """decode(encode(t)); equals t field-for-field."""
    return decode(encode(t))


def save_tiling(t: Tiling, path: Union[str, Path]) -> None:
    Path(path).write_text(encode(t), encoding="utf-8")


def load_tiling(path: Union[str, Path]) -> Tiling:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise TilingParseError(f"cannot read {path}: {e.strerror}") from None
    return decode(text)
