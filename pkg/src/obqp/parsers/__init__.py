"""The ``.obqp`` document language: words, statements and sessions."""

from obqp.parsers.document import (
    DIRECTIVES,
    Placement,
    SessionDocument,
    Statement,
    parse,
    serialize,
)
from obqp.parsers.session import (
    Directive,
    Scope,
    Session,
    build_session,
    document_for_pob,
)
from obqp.parsers.words import (
    WordResolver,
    parse_expression,
    parse_hopf_curve_spec,
    parse_symbol_text,
    parse_word_text,
    tokenize,
)

__all__ = [
    "DIRECTIVES",
    "Directive",
    "Placement",
    "Scope",
    "Session",
    "SessionDocument",
    "Statement",
    "WordResolver",
    "build_session",
    "document_for_pob",
    "parse",
    "parse_expression",
    "parse_hopf_curve_spec",
    "parse_symbol_text",
    "parse_word_text",
    "serialize",
    "tokenize",
]
