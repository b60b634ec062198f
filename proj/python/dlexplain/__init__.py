"""Concept learning over description-logic knowledge bases."""

import json

from ._core import (
    DataError,
    KnowledgeBase,
    ParseError,
    _ingest,
    canonicalize,
    length,
    render,
    render_unicode,
    translate,
)

__all__ = [
    "DataError",
    "KnowledgeBase",
    "ParseError",
    "canonicalize",
    "ingest",
    "learn",
    "length",
    "render",
    "render_unicode",
    "translate",
    "verify",
]


def learn(kb, problem, *, max_expansions=10000, max_length=10, top_k=10,
          length_penalty="1/100", noise="0", enable_disjunction=False):
    """Search for class expressions separating the problem's examples.

    `problem` is the text of a .prob file. Returns the report as a dict.
    """
    return json.loads(kb._learn(problem, max_expansions, max_length, top_k,
                                str(length_penalty), str(noise), enable_disjunction))


def verify(kb, problem, expression):
    """Coverage of one expression on a problem, as a dict."""
    return json.loads(kb._verify(problem, expression))


def ingest(annotations, mapping, background, positives, role="contains"):
    """Build (kb_text, problem_text) from annotation and mapping tables."""
    return _ingest(annotations, mapping, role, background, set(positives))
