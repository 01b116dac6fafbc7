"""Custom exceptions for obqp."""

from typing import Optional


class ObqpError(Exception):
    """Base exception for obqp."""


class ConfigLoadError(ObqpError):
    """Error raised when configuration loading fails."""


class InternalInvariantError(ObqpError):
    """Error raised when a computed result contradicts an invariant upstream."""


class SurfaceError(ObqpError):
    """Error raised for invalid marked surfaces."""


class ClosedPageError(SurfaceError):
    """Error raised when a page without boundary is requested."""


class SymbolValidationError(SurfaceError):
    """Error raised when a curve or arc symbol does not fit its surface."""


class HandleVariantError(SurfaceError):
    """Error raised when a 1-handle cannot be attached as requested."""


class WordError(ObqpError):
    """Error raised for invalid monodromy words."""


class SurfaceMismatchError(WordError):
    """Error raised when words on different surfaces are combined."""


class NotAPointPushError(WordError):
    """Error raised when a point-push expansion is requested for another letter."""


class DiskCompileError(ObqpError):
    """Error raised when a word on a disk page cannot be compiled to a braid."""


class BraidError(ObqpError):
    """Error raised for invalid braid words."""


class StrandMismatchError(BraidError):
    """Error raised when braids on different strand counts are compared."""


class BandIndexError(BraidError):
    """Error raised for band generators with invalid indices."""


class MoveError(ObqpError):
    """Error raised when a move cannot be applied to a pointed open book."""


class EmptyBraidError(MoveError):
    """Error raised when stabilizing a pointed open book without marked points."""


class NotDestabilizableError(MoveError):
    """Error raised when the syntactic destabilization pattern is absent."""


class InvalidHopfCurveError(MoveError):
    """Error raised when a Hopf curve does not cross the new handle."""


class UnsupportedMoveError(MoveError):
    """Error raised when a script contains moves outside the supported set."""


class CertificateError(ObqpError):
    """Error raised for malformed quasipositivity certificates."""


class ForeignSymbolError(CertificateError):
    """Error raised when a certificate references symbols from another surface."""


class BennequinError(ObqpError):
    """Error raised by Bennequin surface computations."""


class NotInBennequinFormError(BennequinError):
    """Error raised when half-twists occur outside the leading block."""


class SharpnessUndefinedError(BennequinError):
    """Error raised when sharpness is requested for a surface with negative bands."""


class BennequinConsistencyError(BennequinError, InternalInvariantError):
    """Error raised when the genus formula yields an impossible value."""


class DocumentError(ObqpError):
    """Error raised when a DSL document cannot be processed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = f"line {line}" if line is not None else None
        if location and column is not None:
            location += f", column {column}"
        super().__init__(f"{location}: {message}" if location else message)
        self.message = message


class DocumentSyntaxError(DocumentError):
    """Error raised when a document has syntax errors.

    All issues found in the document are collected in ``issues``.
    """

    def __init__(self, issues: "list[DocumentError]"):
        self.issues = issues
        first = issues[0]
        super().__init__(first.message, first.line, first.column)


class UnknownIdentifierError(DocumentError):
    """Error raised when a document references an undeclared name."""


class ArityError(DocumentError):
    """Error raised when a statement or letter has the wrong number of arguments."""


class SessionError(DocumentError):
    """Error raised when a declaration is rejected while building a session."""
