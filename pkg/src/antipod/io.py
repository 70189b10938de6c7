"""JSON files for point configurations, segment families and reports.

Rationals are always written as strings ("3", "-2/5"), never floats, so a
write followed by a read gives back the same numbers exactly.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from fractions import Fraction
from pathlib import Path

from .antipodality import PairReport, PointConfig
from .geom import GeometryError
from .segments import Segment3, SegmentFamily

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


class FormatError(ValueError):
    """A file does not match the expected layout; the message names the field."""


def fmt(q: Fraction) -> str:
    return str(Fraction(q))


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise FormatError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value):
        num, _, den = value.replace(" ", "").partition("/")
        if den and int(den) == 0:
            raise FormatError(f"{where}: zero denominator in {value!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise FormatError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _point(raw, where: str, dim: int | None) -> tuple:
    if not isinstance(raw, list):
        raise FormatError(f"{where}: expected a list of coordinates")
    if dim is not None and len(raw) != dim:
        raise FormatError(f"{where}: has {len(raw)} coordinates, expected {dim}")
    return tuple(parse_rational(c, f"{where}[{k}]") for k, c in enumerate(raw))


# ---------------------------------------------------------------------------
# Point configurations


def config_to_dict(config: PointConfig) -> dict:
    out = {"dim": config.dim, "points": [[fmt(c) for c in p] for p in config.points]}
    if config.label is not None:
        out["label"] = config.label
    if config.construction is not None:
        out["construction"] = config.construction
    return out


def config_from_dict(data, source: str = "input") -> PointConfig:
    if not isinstance(data, dict):
        raise FormatError(f"{source}: top level must be an object")
    if "points" not in data:
        raise FormatError(f"{source}: missing field 'points'")
    dim = data.get("dim")
    if dim is not None and (not isinstance(dim, int) or isinstance(dim, bool) or dim < 1):
        raise FormatError(f"{source}: 'dim' must be a positive integer")
    raw = data["points"]
    if not isinstance(raw, list) or not raw:
        raise FormatError(f"{source}: 'points' must be a nonempty list")
    if dim is None:
        dim = len(raw[0]) if isinstance(raw[0], list) else None
    pts = [_point(p, f"{source}: points[{i}]", dim) for i, p in enumerate(raw)]
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise FormatError(f"{source}: 'label' must be a string")
    try:
        return PointConfig(dim, tuple(pts), label, data.get("construction"))
    except GeometryError as exc:
        raise FormatError(f"{source}: {exc}") from exc


def _dumps_rows(data: dict, rows_key: str) -> str:
    """Indented JSON with each entry of ``data[rows_key]`` kept on one line."""
    head = {k: v for k, v in data.items() if k != rows_key}
    rows = ",\n".join("    " + json.dumps(r) for r in data[rows_key])
    parts = [f"  {json.dumps(k)}: {json.dumps(v, indent=2).replace(chr(10), chr(10) + '  ')}" for k, v in head.items()]
    parts.insert(1 if "dim" in head else 0, f"  {json.dumps(rows_key)}: [\n{rows}\n  ]")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def dumps_config(config: PointConfig) -> str:
    return _dumps_rows(config_to_dict(config), "points")


def loads_config(text: str, source: str = "input") -> PointConfig:
    return config_from_dict(_load_json(text, source), source)


def read_config(path) -> PointConfig:
    return loads_config(Path(path).read_text(), str(path))


def write_config(path, config: PointConfig):
    atomic_write(path, dumps_config(config))


# ---------------------------------------------------------------------------
# Segment families


def family_to_dict(family: SegmentFamily) -> dict:
    out = {"segments": [[[fmt(c) for c in s.p], [fmt(c) for c in s.q]] for s in family.segments]}
    if family.label is not None:
        out["label"] = family.label
    return out


def family_from_dict(data, source: str = "input") -> SegmentFamily:
    if not isinstance(data, dict) or "segments" not in data:
        raise FormatError(f"{source}: expected an object with field 'segments'")
    raw = data["segments"]
    if not isinstance(raw, list) or not raw:
        raise FormatError(f"{source}: 'segments' must be a nonempty list")
    segs = []
    for i, s in enumerate(raw):
        where = f"{source}: segments[{i}]"
        if not isinstance(s, list) or len(s) != 2:
            raise FormatError(f"{where}: expected a pair of endpoints")
        p, q = (_point(e, f"{where}[{k}]", 3) for k, e in enumerate(s))
        try:
            segs.append(Segment3(p, q))
        except GeometryError as exc:
            raise FormatError(f"{where}: {exc}") from exc
    return SegmentFamily(tuple(segs), data.get("label"))


def dumps_family(family: SegmentFamily) -> str:
    return _dumps_rows(family_to_dict(family), "segments")


def loads_family(text: str, source: str = "input") -> SegmentFamily:
    return family_from_dict(_load_json(text, source), source)


def read_family(path) -> SegmentFamily:
    return loads_family(Path(path).read_text(), str(path))


# ---------------------------------------------------------------------------
# Reports


def report_to_dict(report: PairReport) -> dict:
    return {
        "mode": report.mode,
        "count": report.count,
        "pairs": [
            {"pair": list(p), "direction": [fmt(c) for c in report.certificates[p].direction],
             "hi": fmt(report.certificates[p].hi), "lo": fmt(report.certificates[p].lo)}
            for p in report.pairs
        ],
    }


def atomic_write(path, text: str):
    """Write through a temporary file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_json(path, data):
    atomic_write(path, json.dumps(data, indent=2, sort_keys=False) + "\n")
