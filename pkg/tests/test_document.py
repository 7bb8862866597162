import json

import numpy as np
import pytest

from xmodcat.document import bundled_names, dump_document, input_hash, load, parse, read_source, to_crossed_module
from xmodcat.exceptions import CorpusNotFoundError, DocumentError, DocumentSyntaxError, PeifferViolation, ShapeError


D_Z2 = {
    "name": "d_z2",
    "x1": {"table": [[0, 1], [1, 0]]},
    "x2": {"table": [[0, 1], [1, 0]]},
    "action": [[0, 1], [0, 1]],
    "boundary": [0, 1],
}


def _text(**overrides):
    return json.dumps({**D_Z2, **overrides})


def test_parse_bundled():
    assert {"d_z2", "x4_double_cover", "peiffer_violation_fixture"} <= set(bundled_names())
    x = to_crossed_module(parse(read_source("d_z2")))
    assert x.name == "d_z2"
    assert x.is_boundary_bijective()


def test_dump_reparses_to_the_same_tables(x4):
    x = to_crossed_module(parse(dump_document(x4)))
    assert np.array_equal(x.x1.table, x4.x1.table)
    assert np.array_equal(x.mu.perm, x4.mu.perm)
    assert np.array_equal(x.boundary.map, x4.boundary.map)
    assert x.name == x4.name


def test_syntax_error_carries_line():
    with pytest.raises(DocumentSyntaxError) as info:
        parse('{\n  "name": "broken",\n}\n')
    assert info.value.line == 3


@pytest.mark.parametrize(
    "text, field",
    [
        ("[]", "<document>"),
        (_text(name=3), "name"),
        (_text(x1=[[0]]), "x1"),
        (_text(x2={"table": []}), "x2.table"),
        (_text(action=[[0, 1]]), "action"),
        (_text(action=[[0, 1], [0, 2]]), "action[1][1]"),
        (_text(boundary=[0, "1"]), "boundary[1]"),
        (_text(boundary=[0, True]), "boundary[1]"),
    ],
)
def test_shape_errors(text, field):
    with pytest.raises(ShapeError) as info:
        parse(text)
    assert info.value.field == field


def test_missing_boundary():
    data = dict(D_Z2)
    del data["boundary"]
    with pytest.raises(ShapeError) as info:
        parse(json.dumps(data))
    assert info.value.field == "boundary"


def test_load_sources(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(_text(name="from-file"))
    x, text = load(str(path))
    assert x.name == "from-file"
    assert text == path.read_text()

    x, _ = load("d_s3")
    assert x.x1.order == 6

    with pytest.raises(CorpusNotFoundError):
        load("no-such-crossed-module")


def test_load_rejects_non_utf8_file(tmp_path):
    path = tmp_path / "latin1.json"
    path.write_bytes(b'{"name": "\xff\xfe"}')
    with pytest.raises(DocumentError) as info:
        read_source(str(path))
    assert "not UTF-8" in str(info.value)


def test_load_rejects_peiffer_violation():
    with pytest.raises(PeifferViolation) as info:
        load("peiffer_violation_fixture")
    assert info.value.witness == {"m": 1, "n": 1}


def test_input_hash():
    text = _text()
    assert input_hash(text) == input_hash(text)
    assert len(input_hash(text)) == 64
    assert input_hash(text) != input_hash(_text(name="other"))
