## \file tests/test_jjson.py
# -*- coding: utf-8 -*-
import pytest
from pathlib import Path
from types import SimpleNamespace

from relwsd.jjson import dict2ns, j_dumps, j_dumps_lines, j_loads, j_loads_lines, j_loads_ns
from relwsd.logger.exceptions import JsonLoadError

# Test data
json_data = {"radius": 30, "lemma": "café", "senses": [{"key": "b%1"}]}
json_str = '{"key": "value"}'
invalid_json_str = '{"key": "value"'


# Test j_dumps
def test_j_dumps_is_deterministic():
    """Keys sorted, non-ASCII kept, trailing newline."""
    text = j_dumps({"b": 1, "a": "é"})
    assert text == '{\n  "a": "é",\n  "b": 1\n}\n'
    assert j_dumps({"a": "é", "b": 1}) == text


def test_j_dumps_writes_file(tmp_path):
    path = tmp_path / "nested" / "data.json"
    text = j_dumps(json_data, path)
    assert path.read_text(encoding="utf-8") == text
    assert j_loads(path) == json_data


def test_j_dumps_namespace():
    # SimpleNamespace is converted to dict before dumping
    data = SimpleNamespace(key="value", inner=SimpleNamespace(n=1), items=(1, 2))
    assert j_dumps(data, indent=None) == '{"inner": {"n": 1}, "items": [1, 2], "key": "value"}\n'


# Test j_loads
def test_j_loads_from_string():
    assert j_loads(json_str) == {"key": "value"}


def test_j_loads_passes_loaded_data():
    assert j_loads(json_data) is json_data


def test_j_loads_invalid_json_position():
    """The error names the line and column of the first problem."""
    with pytest.raises(JsonLoadError) as excinfo:
        j_loads('{\n  "a": 1,\n  "b": \n}')
    assert excinfo.value.line == 4
    assert excinfo.value.source == "<string>"
    assert str(excinfo.value).startswith("<string> at line 4 column 1:")


def test_j_loads_missing_file(tmp_path):
    with pytest.raises(JsonLoadError) as excinfo:
        j_loads(tmp_path / "missing.json")
    assert "file not found" in str(excinfo.value)
    assert excinfo.value.line is None


# Test j_loads_ns
@pytest.mark.parametrize("input_data", [
    json_str,
    {"key": "value"},
])
def test_j_loads_ns(input_data):
    assert j_loads_ns(input_data) == SimpleNamespace(key="value")


def test_dict2ns_nested():
    ns = dict2ns({"cascade": {"steps": [{"name": "monosemous"}]}})
    assert ns.cascade.steps[0].name == "monosemous"


# JSON lines
def test_json_lines(tmp_path):
    """Blank lines are skipped; line numbers count them."""
    path = tmp_path / "records.jsonl"
    assert j_dumps_lines([{"id": "i1"}, {"id": "i2"}], path) == 2
    path.write_text(path.read_text(encoding="utf-8") + "\n" + '{"id": "i3"}\n', encoding="utf-8")
    assert list(j_loads_lines(path)) == [(1, {"id": "i1"}), (2, {"id": "i2"}), (4, {"id": "i3"})]


def test_json_lines_bad_line(tmp_path):
    path = tmp_path / "records.jsonl"
    path.write_text('{"id": "i1"}\n{"id": \n', encoding="utf-8")
    with pytest.raises(JsonLoadError) as excinfo:
        list(j_loads_lines(path))
    assert excinfo.value.line == 2
    assert excinfo.value.source == str(Path(path))
