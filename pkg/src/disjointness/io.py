"""Point-set file formats.

Text format: one point per line, two whitespace-separated integers or `p/q`
rationals; `#` starts a comment; blank lines are ignored.
JSON format: {"points": [[x, y], ...]} with integers or "p/q" strings.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .errors import ParseError
from .geometry import Point, PointSet


def _parse_coord(tok: str, line=None) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coordinate {tok!r}", line=line)


def loads_text(text: str) -> PointSet:
    pts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected 2 coordinates, got {len(toks)}", line=lineno)
        pts.append(Point(_parse_coord(toks[0], lineno), _parse_coord(toks[1], lineno)))
    if len(pts) < 3:
        raise ParseError(f"need at least 3 points, got {len(pts)}")
    return PointSet(pts)


def loads_json(text: str) -> PointSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}")
    if not isinstance(data, dict) or "points" not in data:
        raise ParseError('JSON point set must be an object with a "points" key')
    pts = []
    for entry in data["points"]:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ParseError(f"bad point entry {entry!r}")
        coords = []
        for c in entry:
            if isinstance(c, bool) or not isinstance(c, (int, str)):
                raise ParseError(f"bad coordinate {c!r} (want int or 'p/q' string)")
            coords.append(_parse_coord(str(c)))
        pts.append(Point(*coords))
    if len(pts) < 3:
        raise ParseError(f"need at least 3 points, got {len(pts)}")
    return PointSet(pts)


def loads(text: str) -> PointSet:
    if text.lstrip()[:1] == "{":
        return loads_json(text)
    return loads_text(text)


def load(path) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def coord_str(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def dumps_text(ps: PointSet) -> str:
    return "".join(f"{coord_str(p.x)} {coord_str(p.y)}\n" for p in ps)


def dumps_json(ps: PointSet) -> str:
    pts = []
    for p in ps:
        pts.append([
            p.x.numerator if p.x.denominator == 1 else coord_str(p.x),
            p.y.numerator if p.y.denominator == 1 else coord_str(p.y),
        ])
    return json.dumps({"points": pts})


def dump(ps: PointSet, path, fmt: str = "text") -> None:
    text = dumps_json(ps) + "\n" if fmt == "json" else dumps_text(ps)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
