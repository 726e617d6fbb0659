"""JSON and plain-text formats for images, maps, homotopies and functions.

Image:      {"dim": d, "adjacency": l, "points": [[c1, ..., cd], ...], "rim": [...]?}
Map:        {"source": <image>, "target": <image>, "pairs": [[[p...], [q...]], ...]}
Homotopy:   {"steps": j, "triples": [[[p...], t, [q...]], ...]}
Function:   {"image": <image>, "values": [[[p...], v], ...]}
Partition:  {"target": c, "functions": [<function>, ...], "cover": [[points...], ...]?}

Every parse error is a FormatError naming the file and the JSON position.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .analysis import LatticeFunction, PartitionCandidate
from .lattice import Adjacency, DigitalImage, Point
from .morphisms import DigitalMap, HomotopyTable


class FormatError(ValueError):
    def __init__(self, source: str, position: str, message: str):
        self.source = source
        self.position = position
        super().__init__(f"{source}: {position}: {message}")


def _int(value: Any, source: str, pos: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(source, pos, f"expected an integer, got {value!r}")
    return value


def _point(value: Any, d: int | None, source: str, pos: str) -> Point:
    if not isinstance(value, list):
        raise FormatError(source, pos, f"expected a list of integers, got {value!r}")
    p = tuple(_int(c, source, f"{pos}[{i}]") for i, c in enumerate(value))
    if d is not None and len(p) != d:
        raise FormatError(source, pos, f"point {list(p)} has dimension {len(p)}, expected {d}")
    return p


def _key(doc: Any, key: str, source: str, pos: str) -> Any:
    if not isinstance(doc, dict):
        raise FormatError(source, pos, "expected a JSON object")
    if key not in doc:
        raise FormatError(source, pos, f"missing key {key!r}")
    return doc[key]


def read_json(path: str | Path) -> Any:
    source = str(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(source, "file", exc.strerror or str(exc)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(source, f"line {exc.lineno} column {exc.colno}", exc.msg) from exc


def image_from_json(doc: Any, source: str = "<image>", pos: str = "$") -> DigitalImage:
    d = _int(_key(doc, "dim", source, pos), source, f"{pos}.dim")
    l = _int(_key(doc, "adjacency", source, pos), source, f"{pos}.adjacency")
    raw = _key(doc, "points", source, pos)
    if not isinstance(raw, list):
        raise FormatError(source, f"{pos}.points", "expected a list of points")
    seen: dict[Point, int] = {}
    for i, item in enumerate(raw):
        p = _point(item, d, source, f"{pos}.points[{i}]")
        if p in seen:
            raise FormatError(source, f"{pos}.points[{i}]",
                              f"duplicate of points[{seen[p]}] {list(p)}")
        seen[p] = i
    rim = [_point(item, d, source, f"{pos}.rim[{i}]")
           for i, item in enumerate(doc.get("rim", []))]
    try:
        adj = Adjacency(l, d)
        return DigitalImage(tuple(seen), adj, frozenset(rim))
    except (ValueError, OverflowError, TypeError) as exc:
        raise FormatError(source, pos, str(exc)) from exc


def image_to_json(M: DigitalImage) -> dict:
    doc: dict[str, Any] = {"dim": M.dim, "adjacency": M.l, "points": [list(p) for p in M.points]}
    if M.rim:
        doc["rim"] = [list(p) for p in sorted(M.rim)]
    return doc


def image_from_text(text: str, l: int, source: str = "<text>") -> DigitalImage:
    """One point per line, whitespace-separated integers; '#' starts a comment."""
    pts: dict[Point, int] = {}
    d = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            p = tuple(int(tok) for tok in line.split())
        except ValueError as exc:
            raise FormatError(source, f"line {lineno}", f"not an integer row: {line!r}") from exc
        if d is None:
            d = len(p)
        elif len(p) != d:
            raise FormatError(source, f"line {lineno}", f"expected {d} coordinates, got {len(p)}")
        if p in pts:
            raise FormatError(source, f"line {lineno}", f"duplicate of line {pts[p]}")
        pts[p] = lineno
    if d is None:
        raise FormatError(source, "file", "no points")
    try:
        return DigitalImage(tuple(pts), Adjacency(l, d))
    except (ValueError, OverflowError) as exc:
        raise FormatError(source, "file", str(exc)) from exc


def map_from_json(doc: Any, source: str = "<map>") -> DigitalMap:
    src = image_from_json(_key(doc, "source", source, "$"), source, "$.source")
    tgt = image_from_json(_key(doc, "target", source, "$"), source, "$.target")
    pairs = _key(doc, "pairs", source, "$")
    table: dict[Point, Point] = {}
    for i, pair in enumerate(pairs):
        pos = f"$.pairs[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError(source, pos, "expected [source point, target point]")
        p = _point(pair[0], src.dim, source, f"{pos}[0]")
        if p in table:
            raise FormatError(source, pos, f"point {list(p)} mapped twice")
        table[p] = _point(pair[1], tgt.dim, source, f"{pos}[1]")
    try:
        return DigitalMap(src, tgt, table)
    except ValueError as exc:
        raise FormatError(source, "$.pairs", str(exc)) from exc


def map_to_json(f: DigitalMap) -> dict:
    return {"source": image_to_json(f.source), "target": image_to_json(f.target),
            "pairs": [[list(p), list(q)] for p, q in f.items()]}


def homotopy_from_json(doc: Any, source_image: DigitalImage, target_image: DigitalImage,
                       source: str = "<homotopy>") -> HomotopyTable:
    steps = _int(_key(doc, "steps", source, "$"), source, "$.steps")
    table: dict[tuple[Point, int], Point] = {}
    for i, triple in enumerate(_key(doc, "triples", source, "$")):
        pos = f"$.triples[{i}]"
        if not isinstance(triple, list) or len(triple) != 3:
            raise FormatError(source, pos, "expected [point, t, point]")
        p = _point(triple[0], source_image.dim, source, f"{pos}[0]")
        t = _int(triple[1], source, f"{pos}[1]")
        if (p, t) in table:
            raise FormatError(source, pos, f"H({list(p)}, {t}) given twice")
        table[p, t] = _point(triple[2], target_image.dim, source, f"{pos}[2]")
    try:
        return HomotopyTable(source_image, target_image, steps, table)
    except ValueError as exc:
        raise FormatError(source, "$.triples", str(exc)) from exc


def homotopy_to_json(H: HomotopyTable) -> dict:
    return {"steps": H.steps,
            "triples": [[list(p), t, list(H.table[p, t])]
                        for p in H.source.points for t in range(H.steps + 1)]}


def function_from_json(doc: Any, source: str = "<function>", pos: str = "$") -> LatticeFunction:
    image = image_from_json(_key(doc, "image", source, pos), source, f"{pos}.image")
    values: dict[Point, int] = {}
    for i, item in enumerate(_key(doc, "values", source, pos)):
        ipos = f"{pos}.values[{i}]"
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError(source, ipos, "expected [point, value]")
        p = _point(item[0], image.dim, source, f"{ipos}[0]")
        if p in values:
            raise FormatError(source, ipos, f"value for {list(p)} given twice")
        values[p] = _int(item[1], source, f"{ipos}[1]")
    try:
        return LatticeFunction(image, values)
    except ValueError as exc:
        raise FormatError(source, f"{pos}.values", str(exc)) from exc


def function_to_json(f: LatticeFunction) -> dict:
    return {"image": image_to_json(f.domain),
            "values": [[list(p), f.values[p]] for p in f.domain.points]}


def partition_from_json(doc: Any, source: str = "<partition>") -> PartitionCandidate:
    target = _int(_key(doc, "target", source, "$"), source, "$.target")
    funcs = tuple(function_from_json(f, source, f"$.functions[{i}]")
                  for i, f in enumerate(_key(doc, "functions", source, "$")))
    cover = None
    if doc.get("cover") is not None:
        d = funcs[0].domain.dim if funcs else None
        cover = tuple(frozenset(_point(p, d, source, f"$.cover[{i}][{j}]")
                                for j, p in enumerate(block))
                      for i, block in enumerate(doc["cover"]))
    try:
        return PartitionCandidate(funcs, target, cover)
    except ValueError as exc:
        raise FormatError(source, "$", str(exc)) from exc


def partition_to_json(P: PartitionCandidate) -> dict:
    doc: dict[str, Any] = {"target": P.target,
                           "functions": [function_to_json(f) for f in P.functions]}
    if P.cover is not None:
        doc["cover"] = [[list(p) for p in sorted(block)] for block in P.cover]
    return doc


_GROUP = re.compile(r"\(([^()]*)\)")


def parse_point_list(text: str) -> list[Point]:
    """Parse '(0,0),(2,0)' style lists."""
    groups = _GROUP.findall(text)
    leftover = _GROUP.sub("", text).replace(",", "").replace(";", "").strip()
    if leftover or not groups:
        raise ValueError(f"cannot parse point list {text!r}; expected e.g. '(0,0),(2,0)'")
    out = []
    for g in groups:
        out.append(tuple(int(tok) for tok in g.replace(",", " ").split()))
    return out
