from setuptools import setup

# Metadata and dependencies live in pyproject.toml.
setup()
