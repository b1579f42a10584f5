## \file tests/test_config.py
# -*- coding: utf-8 -*-
import pytest

from conftest import TOY
from relwsd.config import RunConfig, load_config
from relwsd.logger.exceptions import ConfigError, UsageError


def write(tmp_path, name: str, text: str):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


# Loading
def test_defaults():
    """Defaults are the standard parameters."""
    config = RunConfig()
    assert (config.vocab_size, config.radius, config.threshold, config.cutoff) == (20000, 30, 2.0, 0.1)
    assert config.radius_by_pos == {"NOUN": 25, "VERB": 25, "ADJ": 5, "ADV": 25}


def test_toml_table():
    config = load_config(TOY / "config.toml")
    assert config.vocab_size == 100
    assert config.radius == 30


def test_toml_top_level_and_pos_radius(tmp_path):
    path = write(tmp_path, "run.toml", 'radius = 10\nradius_adj = 3\n[radius_by_pos]\nverb = 12\n')
    config = load_config(path)
    assert config.radius == 10
    assert config.radius_by_pos == {"NOUN": 25, "VERB": 12, "ADJ": 3, "ADV": 25}


def test_json_config(tmp_path):
    path = write(tmp_path, "run.json", '{"threshold": 3.5, "jobs": 2}')
    config = load_config(path)
    assert config.threshold == 3.5 and config.jobs == 2


@pytest.mark.parametrize("name, text, fragment", [
    ("a.toml", "radius = 30\nwindow = 4\n", "unknown configuration key 'window'"),
    ("b.toml", "radius = \n", "cannot read config"),
    ("c.json", "[1, 2]", "must be a table"),
    ("d.toml", "cutoff = 1.5\n", "cutoff must lie in (0, 1)"),
    ("e.toml", "lemmatizer = 'porter'\n", "lemmatizer must be"),
])
def test_bad_config(tmp_path, name, text, fragment):
    """Config problems are usage errors."""
    with pytest.raises(ConfigError) as excinfo:
        load_config(write(tmp_path, name, text))
    assert fragment in str(excinfo.value)
    assert isinstance(excinfo.value, UsageError) and excinfo.value.exit_code == 1


def test_missing_config(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.toml")


# Overrides
def test_merged_ignores_none():
    config = RunConfig(radius=10).merged({"radius": None, "threshold": 4.0, "radius_noun": 7, "nonsense": 1})
    assert config.radius == 10 and config.threshold == 4.0
    assert config.radius_by_pos["NOUN"] == 7


def test_merged_validates():
    with pytest.raises(ConfigError):
        RunConfig().merged({"jobs": 0})


# Hash
def test_config_hash_ignores_paths_and_logging():
    base = RunConfig().config_hash()
    assert RunConfig(corpus="elsewhere", log_level="DEBUG", jobs=4).config_hash() == base
    assert RunConfig(radius=29).config_hash() != base
    assert len(base) == 64


def test_artifact_meta():
    meta = RunConfig().artifact_meta(seed=3)
    assert meta["tool"].startswith("relwsd ")
    assert meta["config"] == RunConfig().config_hash()
    assert meta["seed"] == 3
