## \file relwsd/printer.py
# -*- coding: utf-8 -*-
"""
Coloured console printing for command-line output: cascade traces, lexicon
check findings, reports. Colours are dropped when stdout is not a terminal so
that redirected output stays plain text.
"""

import json
import sys
from pathlib import Path
from typing import Any

RESET = "\033[0m"

TEXT_COLORS = {
    "red": "\033[31m",
    "green": "\033[32m",
    "blue": "\033[34m",
    "yellow": "\033[33m",
    "white": "\033[37m",
    "cyan": "\033[36m",
    "magenta": "\033[35m",
    "light_gray": "\033[37m",
    "dark_gray": "\033[90m",
    "light_red": "\033[91m",
    "light_green": "\033[92m",
    "light_blue": "\033[94m",
    "light_yellow": "\033[93m",
}

BG_COLORS = {
    "bg_red": "\033[41m",
    "bg_green": "\033[42m",
    "bg_blue": "\033[44m",
    "bg_yellow": "\033[43m",
    "bg_white": "\033[47m",
    "bg_cyan": "\033[46m",
    "bg_magenta": "\033[45m",
}

FONT_STYLES = {
    "bold": "\033[1m",
    "underline": "\033[4m",
    "italic": "\033[3m",
}


def pprint(print_data: str | list | dict | Path | Any = None,
           text_color: str = "white", bg_color: str = "", font_style: str = "",
           file=None) -> None:
    """Pretty prints the given data with optional color, background, and font style.

    Args:
        print_data (str | list | dict | Path | Any, optional): Data to be printed.
            Dicts are printed as indented JSON, lists one item per line.
        text_color (str, optional): One of the `TEXT_COLORS` keys. Defaults to "white".
        bg_color (str, optional): One of the `BG_COLORS` keys. Defaults to "" (no background).
        font_style (str, optional): One of `italic`, `underline`, `bold`. Defaults to "".
        file (optional): Stream to print to. Defaults to `sys.stdout`.

    Example:
        >>> pprint({"attempted": 2446, "precision": 0.575}, text_color='green')
    """
    stream = file or sys.stdout
    colored = getattr(stream, "isatty", lambda: False)()

    text_color = TEXT_COLORS.get(text_color.lower(), TEXT_COLORS["white"])
    bg_color = BG_COLORS.get(bg_color.lower(), "")
    font_style = FONT_STYLES.get(font_style.lower(), "")

    def _color_text(text: str) -> str:
        """Apply color, background, and font styling to the text."""
        if not colored:
            return text
        return f"{font_style}{text_color}{bg_color}{text}{RESET}"

    if print_data is None or print_data == "":
        print(_color_text("No data to print!"), file=stream)
        return

    if isinstance(print_data, dict):
        print(_color_text(json.dumps(print_data, indent=4, ensure_ascii=False, default=str)), file=stream)
    elif isinstance(print_data, (list, tuple)):
        for item in print_data:
            print(_color_text(str(item)), file=stream)
    else:
        print(_color_text(str(print_data)), file=stream)
