import json

import pytest
from hypothesis import given

from conftest import dlattices, spaces
from mtlab.documents import (
    Document,
    fixture_names,
    fixture_text,
    load,
    parse,
    read_text,
    resolve_map,
    serialize,
)
from mtlab.errors import NotATopology, ParseError, ValidationError
from mtlab.frames import Frame
from mtlab.functors import powerset_mt


def valid_fixtures():
    return [n for n in fixture_names() if not n.startswith("broken_")]


@pytest.mark.parametrize("name", valid_fixtures())
def test_fixture_round_trip(name):
    text = fixture_text(name)
    assert serialize(parse(text)) == text


def test_broken_fixture_rejected():
    with pytest.raises(NotATopology):
        load("broken_topology")


def test_mt_space_payload_matches_powerset(sier):
    via_doc = load("sierpinski_mt").structure
    assert via_doc.box == powerset_mt(sier).box
    table = load("sierpinski_table").structure
    assert table.box == via_doc.box and table.space is None


def test_truncated_document():
    text = fixture_text("sierpinski")
    with pytest.raises(ParseError) as e:
        parse(text[: len(text) // 2])
    assert "line" in e.value.location


@pytest.mark.parametrize(
    "obj,where",
    [
        ([], "$"),
        ({"kind": "nope"}, "$.kind"),
        ({"kind": "space", "points": ["0"]}, "$"),
        ({"kind": "space", "points": "0", "opens": []}, "$.points"),
        ({"kind": "poset", "elements": ["a"], "order": [["a"]]}, "$.order[0]"),
        ({"kind": "map", "mapping": {"a": 1}}, "$.mapping"),
    ],
)
def test_malformed_payloads(obj, where):
    with pytest.raises(ParseError) as e:
        parse(json.dumps(obj))
    assert e.value.location == where


def test_box_errors():
    obj = json.loads(fixture_text("sierpinski_table"))
    del obj["box"]["{}"]
    with pytest.raises(ParseError) as e:
        parse(json.dumps(obj))
    assert e.value.location == "$.box"


@given(spaces(0, 4))
def test_space_round_trip(x):
    text = serialize(Document("space", x))
    assert serialize(parse(text)) == text


@given(dlattices(0, 4))
def test_frame_round_trip(l):
    text = serialize(Document("frame", Frame(l)))
    assert serialize(parse(text)) == text


def test_resolve_map(sier):
    doc = load("map_sierpinski_swap")
    assert resolve_map(doc, sier, sier) == (1, 0)
    with pytest.raises(ValidationError):
        resolve_map(Document("map", {"0": "1"}), sier, sier)
    with pytest.raises(ValidationError):
        resolve_map(Document("map", {"0": "9", "1": "0"}), sier, sier)


def test_read_text_missing():
    with pytest.raises(FileNotFoundError):
        read_text("no-such-fixture")
