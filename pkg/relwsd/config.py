## \file relwsd/config.py
# -*- coding: utf-8 -*-
"""
Run configuration.

A run is described by one flat set of keys, read from a TOML file (top level
or a `[relwsd]` table) or a JSON file, then overridden by command-line flags.
Defaults are the standard parameters of the method.

Example `relwsd.toml`:

    corpus = "gutenberg/"
    vocab_size = 20000
    radius = 30
    threshold = 2.0
    [relwsd.radius_by_pos]      # optional nested form
    NOUN = 25
"""

import hashlib
import json
from relwsd._compat import tomllib
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Optional

from relwsd.jjson import j_loads
from relwsd.logger import logger
from relwsd.logger.exceptions import ConfigError, JsonLoadError
from relwsd.version import __version__

LOG_LEVELS = ("DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")

PATH_KEYS = (
    "corpus", "tokens", "vocab", "matrix", "lexicon", "inflections", "cascade",
    "instances", "gold", "answers", "out", "stopwords", "log_file",
)


@dataclass
class RunConfig:
    """Every path and parameter of a run."""

    # paths
    corpus: Optional[str] = None
    tokens: Optional[str] = None
    vocab: Optional[str] = None
    matrix: Optional[str] = None
    lexicon: Optional[str] = None
    inflections: Optional[str] = None
    cascade: Optional[str] = None
    instances: Optional[str] = None
    gold: Optional[str] = None
    answers: Optional[str] = None
    out: Optional[str] = None
    stopwords: Optional[str] = None  # None selects the bundled English list
    log_file: Optional[str] = None

    # corpus
    lemmatizer: str = "suffix"
    start_marker: str = "*** START OF"
    end_marker: str = "*** END OF"
    english_threshold: float = 0.02

    # matrix
    vocab_size: int = 20000
    radius: int = 30
    threshold: float = 2.0

    # cascade
    cutoff: float = 0.10
    max_senses: int = 6
    expand_depth: int = 5
    radius_by_pos: dict = field(default_factory=lambda: {"NOUN": 25, "VERB": 25, "ADJ": 5, "ADV": 25})

    # run
    seed: int = 0
    jobs: int = 1
    log_level: str = "INFO"

    def validate(self) -> "RunConfig":
        """Check parameter ranges; raises `ConfigError` on the first violation."""
        checks = [
            (self.vocab_size >= 1, "vocab_size must be >= 1"),
            (self.radius >= 1, "radius must be >= 1"),
            (self.threshold > 0, "threshold must be > 0"),
            (0 < self.cutoff < 1, "cutoff must lie in (0, 1)"),
            (self.max_senses >= 1, "max_senses must be >= 1"),
            (self.expand_depth >= 0, "expand_depth must be >= 0"),
            (0 <= self.english_threshold <= 1, "english_threshold must lie in [0, 1]"),
            (self.jobs >= 1, "jobs must be >= 1"),
            (self.lemmatizer in ("suffix", "identity"), "lemmatizer must be 'suffix' or 'identity'"),
            (all(v >= 0 for v in self.radius_by_pos.values()), "radius_by_pos values must be >= 0"),
            (str(self.log_level).upper() in LOG_LEVELS, f"log_level must be one of {', '.join(LOG_LEVELS)}"),
        ]
        for ok, message in checks:
            if not ok:
                raise ConfigError(message)
        return self

    def merged(self, overrides: dict[str, Any]) -> "RunConfig":
        """Return a copy with every non-None override applied (flags win over the file)."""
        known = {f.name for f in fields(self)}
        data = asdict(self)
        for key, value in overrides.items():
            if value is None:
                continue
            if key.startswith("radius_") and key[7:].upper() in ("NOUN", "VERB", "ADJ", "ADV"):
                data["radius_by_pos"] = {**data["radius_by_pos"], key[7:].upper(): int(value)}
            elif key in known:
                data[key] = value
        return RunConfig(**data).validate()

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def config_hash(self) -> str:
        """sha256 over the canonical JSON of the parameters (paths and logging excluded)."""
        data = {k: v for k, v in asdict(self).items() if k not in PATH_KEYS and k not in ("log_level", "jobs")}
        canonical = json.dumps(data, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def artifact_meta(self, **extra: Any) -> dict[str, Any]:
        """Metadata written at the top of every artifact."""
        return {"tool": f"relwsd {__version__}", "config": self.config_hash(), **extra}


def load_config(path: str | Path) -> RunConfig:
    """Load a TOML or JSON configuration file.

    Args:
        path (str | Path): `.toml` or `.json` file.

    Returns:
        RunConfig: Validated configuration.

    Raises:
        ConfigError: Unreadable file, unknown keys or out-of-range values.
    """
    path = Path(path)
    try:
        if path.suffix.lower() == ".json":
            raw = j_loads(path)
        else:
            with path.open("rb") as f:
                raw = tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError, JsonLoadError) as ex:
        logger.error(f"Cannot read config {path}", ex, exc_info=False)
        raise ConfigError(f"cannot read config {path}: {ex}") from ex

    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: configuration must be a table of keys")
    if isinstance(raw.get("relwsd"), dict):
        raw = raw["relwsd"]

    known = {f.name for f in fields(RunConfig)}
    flat: dict[str, Any] = {}
    for key, value in raw.items():
        if key == "radius_by_pos":
            if not isinstance(value, dict):
                raise ConfigError(f"{path}: radius_by_pos must be a table")
            flat[key] = {**flat.get(key, RunConfig().radius_by_pos), **{k.upper(): int(v) for k, v in value.items()}}
        elif key.startswith("radius_") and key[7:].upper() in ("NOUN", "VERB", "ADJ", "ADV"):
            flat.setdefault("radius_by_pos", dict(RunConfig().radius_by_pos))[key[7:].upper()] = int(value)
        elif key in known:
            flat[key] = value
        else:
            raise ConfigError(f"{path}: unknown configuration key '{key}'")

    try:
        config = RunConfig(**flat)
    except TypeError as ex:
        raise ConfigError(f"{path}: {ex}") from ex
    logger.debug(f"Loaded config {path} ({config.config_hash()[:12]})")
    return config.validate()
