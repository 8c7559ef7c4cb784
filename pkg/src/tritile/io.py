"""Reading and writing tilings as JSON.

Layout::

    {"format": "tritile-tiling/1",
     "spec": {"a": "3", "b": "5", "c": "7", "alpha": 0.38.., "gamma": 2.09..,
              "angle_mode": "incommensurable", "side_mode": "commensurable"},
     "frame": 0.0, "fragment": false,
     "region": [[x, y], ...] or null,
     "tiles": [{"id": 0, "anchor": [x, y], "dir": {"j": 0, "k": 0},
                "chirality": "direct", "labels_order": "ABC",
                "points": [[x, y], [x, y], [x, y]]}, ...]}

Rational sides are written as strings ("3/2"), other numbers as floats with
full precision.  ``points`` is optional on input; when present it must
agree with the placement and run counterclockwise.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction

from . import geometry as geo
from .errors import InvalidSpec, OrientationError, ParseError
from .exact import GAMMA_RAD, AngleClass, TileSpec
from .model import DIRECT_ORDERS, MIRRORED_ORDERS, build_tiling, place_tile

FORMAT = "tritile-tiling/1"


def _enc_len(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return float(x)


def _pt(p):
    return [float(p[0]) + 0.0, float(p[1]) + 0.0]


def spec_to_dict(spec):
    return {
        "a": _enc_len(spec.a), "b": _enc_len(spec.b), "c": _enc_len(spec.c),
        "alpha": spec.alpha, "gamma": GAMMA_RAD,
        "angle_mode": spec.angle_mode.value, "side_mode": spec.side_mode.value,
    }


def tiling_to_dict(t):
    tiles = []
    for tile in t.tiles:
        tiles.append({
            "id": tile.id,
            "anchor": _pt(tile.anchor),
            "dir": {"j": tile.first_dir.j, "k": tile.first_dir.k},
            "chirality": tile.chirality,
            "labels_order": tile.order,
            "points": [_pt(p) for p in tile.points],
        })
    return {
        "format": FORMAT,
        "spec": spec_to_dict(t.spec),
        "frame": t.frame,
        "fragment": t.fragment,
        "region": None if t.region is None else [_pt(p) for p in t.region],
        "tiles": tiles,
    }


def dumps(t):
    return json.dumps(tiling_to_dict(t), indent=2) + "\n"


def save_tiling(t, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(t))


def _need(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing field {where}.{key}" if where else f"missing field {key}",
                         field=f"{where}.{key}" if where else key)
    return obj[key]


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ParseError(f"{where} must be a number, got {x!r}", field=where)
    if not math.isfinite(x):
        raise ParseError(f"{where} must be finite", field=where)
    return float(x)


def _point(x, where):
    if not isinstance(x, (list, tuple)) or len(x) != 2:
        raise ParseError(f"{where} must be a pair [x, y]", field=where)
    return (_number(x[0], f"{where}[0]"), _number(x[1], f"{where}[1]"))


def _length(x, where):
    if isinstance(x, bool):
        raise ParseError(f"{where} must be a length", field=where)
    if isinstance(x, (int, float)):
        return x
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            raise ParseError(f"{where} is not a number: {x!r}", field=where) from None
    raise ParseError(f"{where} must be a number or a rational string", field=where)


def spec_from_dict(d, where="spec"):
    if not isinstance(d, dict):
        raise ParseError(f"{where} must be an object", field=where)
    a = _length(_need(d, "a", where), f"{where}.a")
    b = _length(_need(d, "b", where), f"{where}.b")
    c = _length(d["c"], f"{where}.c") if "c" in d else None
    if "gamma" in d:
        g = _number(d["gamma"], f"{where}.gamma")
        if abs(g - GAMMA_RAD) > 1e-9:
            raise ParseError(f"invalid spec: gamma must be 2pi/3, got {g!r}",
                             field=f"{where}.gamma")
    alpha = _number(d["alpha"], f"{where}.alpha") if "alpha" in d else None
    try:
        return TileSpec.from_sides(a, b, c, alpha=alpha, angle_mode=d.get("angle_mode"),
                                   side_mode=d.get("side_mode"))
    except (InvalidSpec, ValueError) as exc:
        raise ParseError(f"invalid spec: {exc}", field=where) from exc


def tiling_from_dict(d, eps=None):
    if not isinstance(d, dict):
        raise ParseError("top level must be an object")
    fmt = d.get("format", FORMAT)
    if fmt != FORMAT:
        raise ParseError(f"unsupported format {fmt!r}", field="format")
    spec = spec_from_dict(_need(d, "spec", ""))
    frame = _number(d.get("frame", 0.0), "frame")
    fragment = bool(d.get("fragment", False))
    region = d.get("region")
    if region is not None:
        if not isinstance(region, list):
            raise ParseError("region must be a list of points", field="region")
        region = [_point(p, f"region[{i}]") for i, p in enumerate(region)]
    raw = _need(d, "tiles", "")
    if not isinstance(raw, list):
        raise ParseError("tiles must be a list", field="tiles")
    tiles = []
    for i, td in enumerate(raw):
        where = f"tiles[{i}]"
        tid = _need(td, "id", where) if isinstance(td, dict) and "id" in td else i
        if isinstance(tid, bool) or not isinstance(tid, int):
            raise ParseError(f"{where}.id must be an integer", field=f"{where}.id")
        anchor = _point(_need(td, "anchor", where), f"{where}.anchor")
        dd = _need(td, "dir", where)
        j, k = _need(dd, "j", f"{where}.dir"), _need(dd, "k", f"{where}.dir")
        if any(isinstance(x, bool) or not isinstance(x, int) for x in (j, k)):
            raise ParseError(f"{where}.dir needs integer j and k", field=f"{where}.dir")
        order = td.get("labels_order", "ABC")
        if order not in DIRECT_ORDERS + MIRRORED_ORDERS:
            raise ParseError(f"{where}.labels_order must be a permutation of ABC, got {order!r}",
                             field=f"{where}.labels_order")
        chir = td.get("chirality")
        if chir is not None:
            expect = "direct" if order in DIRECT_ORDERS else "mirrored"
            if chir != expect:
                raise ParseError(f"{where}: chirality {chir!r} does not match labels_order "
                                 f"{order!r}", field=f"{where}.chirality")
        tile = place_tile(spec, anchor, AngleClass(j, k), order, tid, frame)
        if "points" in td:
            pts = td["points"]
            if not isinstance(pts, list) or len(pts) != 3:
                raise ParseError(f"{where}.points must list three points", field=f"{where}.points")
            pts = [_point(p, f"{where}.points[{n}]") for n, p in enumerate(pts)]
            if geo.signed_area(pts) <= 0:
                raise OrientationError(f"tile {tid} is listed clockwise, not counterclockwise")
            tol = 1e-6 * max(1.0, spec.length("c"))
            if any(geo.dist(p, q) > tol for p, q in zip(pts, tile.points)):
                raise ParseError(f"tile {tid}: points disagree with anchor/dir/labels_order",
                                 field=f"{where}.points")
        tiles.append(tile)
    return build_tiling(spec, tiles, region, frame=frame, fragment=fragment, eps=eps)


def loads(text, eps=None):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc.msg}", line=exc.lineno) from exc
    return tiling_from_dict(d, eps=eps)


def load_tiling(path, eps=None):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text, eps=eps)


def load_region(path):
    """A region from a JSON file: a bare list of points or any object with "region"."""
    try:
        with open(path, encoding="utf-8") as fh:
            d = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc.msg}", line=exc.lineno) from exc
    pts = d.get("region") if isinstance(d, dict) else d
    if not isinstance(pts, list):
        raise ParseError("no region found", field="region")
    return [_point(p, f"region[{i}]") for i, p in enumerate(pts)]


__all__ = ["load_tiling", "save_tiling", "loads", "dumps", "tiling_to_dict",
           "tiling_from_dict", "spec_to_dict", "spec_from_dict", "load_region", "FORMAT"]
