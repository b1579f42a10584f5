## \file relwsd/corpus/boilerplate.py
# -*- coding: utf-8 -*-
"""
Document-level filters: boilerplate removal and language identification.

Example usage:
    >>> doc = RawDocument("b1", "HEADER\\n*** START OF X\\nbody\\n*** END OF X\\nFOOTER")
    >>> strip_boilerplate(doc).text
    'body\\n'
"""

from relwsd.corpus.model import RawDocument, StopwordList

DEFAULT_START_MARKER = "*** START OF"
DEFAULT_END_MARKER = "*** END OF"


def strip_boilerplate(
    doc: RawDocument,
    start_marker: str = DEFAULT_START_MARKER,
    end_marker: str = DEFAULT_END_MARKER,
) -> RawDocument:
    """Remove the header block up to the start-marker line and the footer from the end-marker line.

    A marker matches a line that starts with it (leading whitespace ignored).
    Only the first start marker and the first end marker after it count.
    Missing markers leave the corresponding side untouched.

    Args:
        doc (RawDocument): Document to clean.
        start_marker (str): Prefix of the line that closes the header.
        end_marker (str): Prefix of the line that opens the footer.

    Returns:
        RawDocument: Same `doc_id`, cleaned text.
    """
    if not doc.text:
        return doc
    lines = doc.text.splitlines(keepends=True)
    begin, end = 0, len(lines)
    for i, line in enumerate(lines):
        if start_marker and line.lstrip().startswith(start_marker):
            begin = i + 1
            break
    for i in range(begin, len(lines)):
        if end_marker and lines[i].lstrip().startswith(end_marker):
            end = i
            break
    if begin == 0 and end == len(lines):
        return doc
    body = "".join(lines[begin:end])
    if body and not body.endswith("\n"):
        body += "\n"
    return RawDocument(doc.doc_id, body)


def is_english(doc: RawDocument, stopwords: StopwordList, threshold: float = 0.02) -> bool:
    """True when the share of whitespace words found in `stopwords` reaches `threshold`.

    Words are the lowercased whitespace-separated pieces of the text, taken as
    they are: "the," is not the stopword "the". An empty document is not English.
    """
    words = doc.text.lower().split()
    if not words:
        return False
    hits = sum(1 for w in words if w in stopwords)
    return hits / len(words) >= threshold
