import json

import pytest

from tritile.errors import OrientationError, ParseError
from tritile.io import dumps, load_region, load_tiling, loads, save_tiling, tiling_to_dict

from corpus import full_corpus


def _same(t, u):
    assert t.n == u.n and t.fragment == u.fragment
    assert [(x.id, x.order, x.first_dir) for x in t.tiles] == \
        [(x.id, x.order, x.first_dir) for x in u.tiles]
    for x, y in zip(t.tiles, u.tiles):
        for p, q in zip(x.points, y.points):
            assert p == pytest.approx(q, abs=1e-12)
    assert t.spec.a == u.spec.a and t.spec.b == u.spec.b


def test_round_trip_corpus(tmp_path):
    for name, t in full_corpus():
        path = tmp_path / "t.json"
        save_tiling(t, path)
        _same(t, load_tiling(path))
        _same(t, loads(dumps(t)))


def test_round_trip_fragment():
    from tritile.generators import gen_appendix_fixture
    from tritile.exact import TileSpec
    t, _ = gen_appendix_fixture(TileSpec.from_sides(3, 2))
    u = loads(dumps(t))
    assert u.fragment and u.region is None
    _same(t, u)


def test_rational_sides_as_strings():
    t = dict(full_corpus())["357/kite"]
    d = tiling_to_dict(t)
    assert d["spec"]["a"] == "3" and d["spec"]["c"] == "7"
    assert d["format"] == "tritile-tiling/1"


def _kite_dict():
    return tiling_to_dict(dict(full_corpus())["357/kite"])


def test_clockwise_points_rejected():
    d = _kite_dict()
    d["tiles"][1]["points"] = d["tiles"][1]["points"][::-1]
    with pytest.raises(OrientationError, match="tile 1"):
        loads(json.dumps(d))


def test_bad_gamma_rejected():
    d = _kite_dict()
    d["spec"]["gamma"] = 1.5
    with pytest.raises(ParseError, match="gamma"):
        loads(json.dumps(d))


def test_missing_fields():
    d = _kite_dict()
    del d["tiles"][0]["anchor"]
    with pytest.raises(ParseError) as exc:
        loads(json.dumps(d))
    assert exc.value.field == "tiles[0].anchor"
    with pytest.raises(ParseError):
        loads(json.dumps({"format": "tritile-tiling/1"}))


def test_inconsistent_points_and_chirality():
    d = _kite_dict()
    d["tiles"][0]["points"][1][0] += 0.5
    with pytest.raises(ParseError):
        loads(json.dumps(d))
    d = _kite_dict()
    d["tiles"][0]["chirality"] = "mirrored"
    with pytest.raises(ParseError, match="chirality"):
        loads(json.dumps(d))
    d = _kite_dict()
    d["tiles"][0]["labels_order"] = "ABD"
    with pytest.raises(ParseError):
        loads(json.dumps(d))


def test_bad_json_reports_line():
    text = '{\n  "format": "tritile-tiling/1",\n  "spec": {,\n}'
    with pytest.raises(ParseError) as exc:
        loads(text)
    assert exc.value.line == 3


def test_wrong_format_and_bad_spec():
    d = _kite_dict()
    d["format"] = "other/2"
    with pytest.raises(ParseError, match="format"):
        loads(json.dumps(d))
    d = _kite_dict()
    d["spec"]["c"] = "8"
    with pytest.raises(ParseError, match="invalid spec"):
        loads(json.dumps(d))


def test_points_optional():
    d = _kite_dict()
    for td in d["tiles"]:
        del td["points"]
    assert loads(json.dumps(d)).n == 2


def test_load_region(tmp_path):
    p = tmp_path / "r.json"
    p.write_text(json.dumps([[0, 0], [1, 0], [0, 1]]))
    assert load_region(p) == [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]
    p.write_text(json.dumps({"region": [[0, 0], [2, 0], [0, 2]]}))
    assert len(load_region(p)) == 3
    with pytest.raises(ParseError):
        load_region(tmp_path / "missing.json")
