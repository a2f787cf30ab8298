import json

import pytest

from conftest import an, remark_algebra
from gentle_topo.errors import NotGentle, PresentationError
from gentle_topo.presentation import format_json, format_text, parse, parse_json, parse_text

A1_TEXT = """
# the A^(1) quiver
vertex 1
vertex 2
arrow alpha 1 2 1   # degree one
arrow beta 2 1 0
arrow gamma 1 2 1
rel alpha beta
rel beta gamma
"""


def test_parse_text():
    A = parse_text(A1_TEXT)
    assert A.vertices == ("1", "2")
    assert [a.degree for a in A.arrows] == [1, 0, 1]
    assert A.relations == {("alpha", "beta"), ("beta", "gamma")}


@pytest.mark.parametrize(
    "text,line,needle",
    [
        ("vertex 1\nvertex 1\n", 2, "duplicate vertex"),
        ("vertex 1\nvertex 2\narrow a 1 2 0\narrow a 2 1 0\n", 4, "duplicate arrow"),
        ("vertex 1\narrow a 1 2 0\n", 2, "undeclared vertex"),
        ("vertex 1\nvertex 2\narrow a 1 2 x\n", 3, "not an integer"),
        ("vertex 1\nrel a b\n", 2, "undeclared arrow"),
        ("vertex 1\nedge 1 2\n", 2, "unknown keyword"),
        ("vertex 1 2\n", 1, "expected"),
        ("vertex 1\nvertex 2\narrow a 1 2 0\narrow b 2 1 0\nrel a b\nrel a b\n", 6, "duplicate relation"),
    ],
)
def test_parse_errors_are_line_numbered(text, line, needle):
    with pytest.raises(PresentationError) as err:
        parse_text(text)
    assert err.value.line == line
    assert str(err.value).startswith(f"line {line}:")
    assert needle in str(err.value)


def test_gentleness_checked_after_parsing():
    with pytest.raises(NotGentle):
        parse_text("vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow a 1 2 0\narrow b 1 3 0\narrow c 1 4 0\n")


def test_json_round_trip():
    for A in (an("3,-2;0,5"), remark_algebra({"delta": 4})):
        assert parse_json(format_json(A)) == A
        assert parse(format_json(A)) == A
        assert parse(format_text(A)) == A


def test_json_errors():
    with pytest.raises(PresentationError):
        parse_json("{not json")
    with pytest.raises(PresentationError):
        parse_json(json.dumps({"vertices": ["1"], "arrows": [{"id": "a", "src": "1"}]}))
    with pytest.raises(PresentationError):
        parse_json(json.dumps({"vertices": ["1", "2"], "arrows": [{"id": "a", "src": "1", "tgt": "2", "deg": 1.5}]}))
    with pytest.raises(PresentationError):
        parse_json(json.dumps({"vertices": ["1", "1"]}))
    with pytest.raises(PresentationError):
        parse_json("[1, 2]")


def test_text_output_is_deterministic():
    A = an("1,1;0,0")
    assert format_text(A) == format_text(parse(format_text(A)))
