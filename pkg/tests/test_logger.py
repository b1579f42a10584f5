## \file tests/test_logger.py
# -*- coding: utf-8 -*-
import pytest

from relwsd.jjson import j_loads_lines
from relwsd.logger import logger, Logger
from relwsd.logger.exceptions import (
    CascadeSyntaxError,
    ConfigError,
    DataError,
    HashMismatchError,
    LexiconError,
    RelwsdError,
    UsageError,
)


@pytest.fixture
def log_file(tmp_path):
    path = tmp_path / "logs" / "run.jsonl"
    logger.configure("DEBUG", path)
    yield path
    logger.configure("INFO")


def test_logger_is_a_singleton():
    assert Logger() is logger


def test_json_lines_sink(log_file):
    """One JSON object per record, with the exception text appended."""
    logger.debug("counting windows")
    logger.success("matrix built")
    logger.error("cannot read lexicon", ValueError("bad rank"), exc_info=False)
    records = [record for _, record in j_loads_lines(log_file)]
    assert [r["level"] for r in records] == ["DEBUG", "SUCCESS", "ERROR"]
    assert records[2]["message"] == "cannot read lexicon bad rank"
    assert all({"time", "level", "module", "message"} <= set(r) for r in records)


def test_level_threshold(tmp_path):
    path = tmp_path / "run.jsonl"
    logger.configure("WARNING", path)
    try:
        logger.info("hidden")
        logger.warning("shown")
    finally:
        logger.configure("INFO")
    assert [r["message"] for _, r in j_loads_lines(path)] == ["shown"]


def test_traceback_only_inside_except(log_file):
    try:
        raise KeyError("bank")
    except KeyError as ex:
        logger.error("lookup failed", ex)
    logger.error("no exception here")
    records = [record for _, record in j_loads_lines(log_file)]
    assert "KeyError" in records[0]["traceback"]
    assert "traceback" not in records[1]


# Exceptions
@pytest.mark.parametrize("error, code", [
    (UsageError("x"), 1),
    (ConfigError("x"), 1),
    (DataError("x"), 2),
    (HashMismatchError("x"), 2),
    (RelwsdError("x"), 2),
])
def test_exit_codes(error, code):
    assert error.exit_code == code


def test_error_messages():
    assert str(CascadeSyntaxError("unknown heuristic 'x'", 3)) == "line 3: unknown heuristic 'x'"
    assert str(LexiconError(["entries[0]: bad"], "lex.json")) == "lex.json: entries[0]: bad"
    assert str(LexiconError([])) == "<lexicon>: invalid lexicon"
