"""JSON group-datum documents: round trips and diagnostics."""

import json

import pytest

from heckext.document import (
    DocumentInvariantError,
    DocumentParseError,
    dump_document,
    load_document,
    parse_document,
)
from heckext.presets import sl2, sl_n, u11, u21


@pytest.mark.parametrize(
    "preset", [sl2(5), sl_n(3, 2), u11(3), u21(2)], ids=lambda p: p.name
)
def test_round_trip(preset):
    text = dump_document(preset.name, preset.coxeter, preset.torus)
    datum = parse_document(text)
    assert datum.name == preset.name
    assert datum.coxeter == preset.coxeter
    assert datum.torus == preset.torus


def base_doc():
    preset = sl2(5)
    return json.loads(dump_document("sl2", preset.coxeter, preset.torus))


def test_parse_errors():
    with pytest.raises(DocumentParseError, match="invalid JSON"):
        parse_document("{not json")
    with pytest.raises(DocumentParseError, match="JSON object"):
        parse_document("[1, 2]")
    doc = base_doc()
    del doc["p"]
    with pytest.raises(DocumentParseError, match="missing field 'p'"):
        parse_document(json.dumps(doc))
    doc = base_doc()
    doc["extra"] = 1
    with pytest.raises(DocumentParseError, match="unknown field"):
        parse_document(json.dumps(doc))
    doc = base_doc()
    doc["zk_orders"] = ["4"]
    with pytest.raises(DocumentParseError, match="zk_orders"):
        parse_document(json.dumps(doc))
    doc = base_doc()
    doc["coxeter"] = [[1, "x"], ["x", 1]]
    with pytest.raises(DocumentParseError, match="coxeter"):
        parse_document(json.dumps(doc))


def test_invariant_errors():
    doc = base_doc()
    doc["zk_orders"] = [5]  # equal to p
    with pytest.raises(DocumentInvariantError, match="not coprime"):
        parse_document(json.dumps(doc))
    doc = base_doc()
    doc["coxeter"] = [[1, 2], [3, 1]]
    with pytest.raises(DocumentInvariantError, match="symmetric"):
        parse_document(json.dumps(doc))
    doc = base_doc()
    doc["actions"] = {"s0": doc["actions"]["s0"]}
    with pytest.raises(DocumentInvariantError, match="actions"):
        parse_document(json.dumps(doc))


def test_load_document(tmp_path):
    preset = u11(3)
    path = tmp_path / "u11.json"
    path.write_text(dump_document("u11", preset.coxeter, preset.torus))
    datum = load_document(str(path))
    assert datum.torus == preset.torus
    with pytest.raises(DocumentParseError, match="cannot read"):
        load_document(str(tmp_path / "missing.json"))
