## \file relwsd/version.py
__version__: str = '0.1.0'
__doc__: str = 'Relevance-matrix word sense disambiguation with heuristic cascades'
__details__: str = ''
__author__: str = 'relwsd developers'
__copyright__: str = """
## License

This project is licensed under the MIT License. See the [MIT License](https://opensource.org/licenses/MIT) for details.
"""

# Bumped whenever a file layout written by the package changes.
__format_version__: str = '1.0'
