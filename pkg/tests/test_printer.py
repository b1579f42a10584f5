## \file tests/test_printer.py
# -*- coding: utf-8 -*-
from io import StringIO
from pathlib import Path

from relwsd.printer import RESET, TEXT_COLORS, pprint


class FakeTerminal(StringIO):
    def isatty(self) -> bool:
        return True


def printed(data, **kwargs) -> str:
    out = StringIO()
    pprint(data, file=out, **kwargs)
    return out.getvalue()


def test_pprint_string():
    """Plain text when the stream is not a terminal."""
    assert printed("Test string", text_color="green") == "Test string\n"


def test_pprint_dict():
    """Dicts print as indented JSON; other values through str()."""
    assert printed({"total": 6, "path": Path("a/b")}) == '{\n    "total": 6,\n    "path": "a/b"\n}\n'


def test_pprint_list():
    assert printed(["  1. monosemous: ABSTAIN", "  2. first_sense: ANSWER"]) == (
        "  1. monosemous: ABSTAIN\n  2. first_sense: ANSWER\n"
    )


def test_pprint_empty():
    assert printed("") == "No data to print!\n"
    assert printed(None) == "No data to print!\n"


def test_pprint_colours_on_terminal():
    out = FakeTerminal()
    pprint("ok", text_color="red", file=out)
    assert out.getvalue() == f"{TEXT_COLORS['red']}ok{RESET}\n"


def test_pprint_unknown_colour_falls_back_to_white():
    out = FakeTerminal()
    pprint("ok", text_color="chartreuse", file=out)
    assert out.getvalue().startswith(TEXT_COLORS["white"])
