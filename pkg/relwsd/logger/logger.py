## \file relwsd/logger/logger.py
# -*- coding: utf-8 -*-
"""
Package logger.

Every module logs through the single `logger` instance exported here:

    >>> from relwsd.logger import logger
    >>> logger.info("matrix built", None, False)
    >>> logger.error("failed to read lexicon", ex, exc_info=True)

The second positional argument is an optional exception whose text is appended
to the message; `exc_info` attaches the current traceback. Console output is
coloured; `configure()` can add a JSON-lines file sink.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from relwsd.printer import RESET, TEXT_COLORS

SUCCESS = 25
logging.addLevelName(SUCCESS, "SUCCESS")

LEVEL_COLORS = {
    logging.DEBUG: TEXT_COLORS["dark_gray"],
    logging.INFO: TEXT_COLORS["white"],
    SUCCESS: TEXT_COLORS["green"],
    logging.WARNING: TEXT_COLORS["yellow"],
    logging.ERROR: TEXT_COLORS["red"],
    logging.CRITICAL: TEXT_COLORS["light_red"],
}


class ColoredFormatter(logging.Formatter):
    """Console formatter that paints the whole line in the level colour."""

    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)
        if not getattr(sys.stderr, "isatty", lambda: False)():
            return text
        return f"{LEVEL_COLORS.get(record.levelno, '')}{text}{RESET}"


class JsonLinesFormatter(logging.Formatter):
    """One JSON object per record, for the optional file sink."""

    def format(self, record: logging.LogRecord) -> str:
        payload = {
            "time": datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat(),
            "level": record.levelname,
            "module": record.module,
            "message": record.getMessage(),
        }
        if record.exc_info:
            payload["traceback"] = self.formatException(record.exc_info)
        return json.dumps(payload, ensure_ascii=False)


class Logger:
    """Thin facade over `logging.getLogger('relwsd')` with the package call signature."""

    _instance: Optional["Logger"] = None

    def __new__(cls) -> "Logger":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._setup()
        return cls._instance

    def _setup(self) -> None:
        self._log = logging.getLogger("relwsd")
        self._log.setLevel(logging.INFO)
        self._log.propagate = False
        if not self._log.handlers:
            console = logging.StreamHandler(sys.stderr)
            console.setFormatter(ColoredFormatter("%(asctime)s %(levelname)-8s %(message)s", "%H:%M:%S"))
            self._log.addHandler(console)
        self._file_handler: Optional[logging.Handler] = None

    def configure(self, level: str | int = "INFO", log_file: Optional[str | Path] = None) -> None:
        """Set the threshold level and (re)attach the JSON-lines file sink.

        Args:
            level (str | int): Logging level name or number.
            log_file (str | Path, optional): Path of the JSON-lines log. `None` detaches the sink.
        """
        self._log.setLevel(level.upper() if isinstance(level, str) else level)
        if self._file_handler:
            self._log.removeHandler(self._file_handler)
            self._file_handler.close()
            self._file_handler = None
        if log_file:
            path = Path(log_file)
            path.parent.mkdir(parents=True, exist_ok=True)
            self._file_handler = logging.FileHandler(path, encoding="utf-8")
            self._file_handler.setFormatter(JsonLinesFormatter())
            self._log.addHandler(self._file_handler)

    def _emit(self, level: int, message: Any, ex: Any = None, exc_info: bool = False) -> None:
        text = f"{message} {ex}" if ex is not None else str(message)
        # A traceback only exists inside an `except` block.
        exc_info = exc_info and sys.exc_info()[0] is not None
        self._log.log(level, text, exc_info=exc_info, stacklevel=3)

    def debug(self, message: Any, ex: Any = None, exc_info: bool = False) -> None:
        self._emit(logging.DEBUG, message, ex, exc_info)

    def info(self, message: Any, ex: Any = None, exc_info: bool = False) -> None:
        self._emit(logging.INFO, message, ex, exc_info)

    def success(self, message: Any, ex: Any = None, exc_info: bool = False) -> None:
        self._emit(SUCCESS, message, ex, exc_info)

    def warning(self, message: Any, ex: Any = None, exc_info: bool = False) -> None:
        self._emit(logging.WARNING, message, ex, exc_info)

    def error(self, message: Any, ex: Any = None, exc_info: bool = True) -> None:
        self._emit(logging.ERROR, message, ex, exc_info)

    def critical(self, message: Any, ex: Any = None, exc_info: bool = True) -> None:
        self._emit(logging.CRITICAL, message, ex, exc_info)


logger: Logger = Logger()
