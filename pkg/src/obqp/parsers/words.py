"""Tokenizer and parser for word expressions such as ``H[a] * D[c @ (H[b])]^-1``."""

import logging
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Union

from obqp.calculus.homology import push_point_error
from obqp.exceptions import (
    ArityError,
    DocumentError,
    SurfaceMismatchError,
    UnknownIdentifierError,
)
from obqp.models.open_book import HopfCurveSpec
from obqp.models.surface import MarkedSurface
from obqp.models.word import Generator, GeneratorKind, ImageSymbol, MonodromyWord, Symbol

logger = logging.getLogger(__name__)

IDENTITY = "id"
LETTER_KINDS = {
    "H": GeneratorKind.HALF_TWIST,
    "D": GeneratorKind.DEHN,
    "P": GeneratorKind.POINT_PUSH,
}

TOKEN_PATTERN = re.compile(
    r"""
    (?P<INT>[-+]?\d+)
    |(?P<STRING>"[^"]*")
    |(?P<NAME>[A-Za-z_][A-Za-z0-9_.]*)
    |(?P<PUNCT>[\[\]\(\),\*@\^=])
    |(?P<SPACE>\s+)
    |(?P<ERROR>.)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1) -> list[Token]:
    """Split one line into tokens; ``#`` starts a comment. Columns are 1-based."""
    tokens: list[Token] = []
    for match in TOKEN_PATTERN.finditer(text):
        kind = match.lastgroup or "ERROR"
        value = match.group()
        column = match.start() + 1
        if kind == "SPACE":
            continue
        if value == "#":
            break
        if kind == "ERROR":
            raise DocumentError(f"Unexpected character {value!r}", line, column)
        tokens.append(Token("PUNCT" if kind == "PUNCT" else kind, value, line, column))
    return tokens


class TokenStream:
    """Cursor over the tokens of one statement."""

    def __init__(self, tokens: list[Token], line: int = 1, end_column: int = 1):
        self.tokens = tokens
        self.position = 0
        self.line = line
        self.end_column = end_column

    def peek(self, offset: int = 0) -> Optional[Token]:
        index = self.position + offset
        return self.tokens[index] if index < len(self.tokens) else None

    def at_end(self) -> bool:
        return self.position >= len(self.tokens)

    def next(self) -> Token:
        token = self.peek()
        if token is None:
            raise DocumentError("Unexpected end of statement", self.line, self.end_column)
        self.position += 1
        return token

    def accept(self, text: str) -> Optional[Token]:
        token = self.peek()
        if token is not None and token.text == text and token.kind == "PUNCT":
            self.position += 1
            return token
        return None

    def expect(self, text: str, opener: Optional[Token] = None) -> Token:
        token = self.peek()
        if token is None and opener is not None:
            raise DocumentError(f"Unclosed {opener.text!r}", opener.line, opener.column)
        if token is None or token.text != text:
            found = "end of statement" if token is None else repr(token.text)
            line, column = (token.line, token.column) if token else (self.line, self.end_column)
            raise DocumentError(f"Expected {text!r}, found {found}", line, column)
        self.position += 1
        return token

    def expect_name(self, what: str = "a name") -> Token:
        token = self.peek()
        if token is None or token.kind != "NAME":
            found = "end of statement" if token is None else repr(token.text)
            line, column = (token.line, token.column) if token else (self.line, self.end_column)
            raise DocumentError(f"Expected {what}, found {found}", line, column)
        self.position += 1
        return token

    def accept_inverse(self) -> bool:
        token = self.peek()
        if token is None or token.text != "^":
            return False
        self.position += 1
        exponent = self.next()
        if exponent.text != "-1":
            raise DocumentError(
                f"Only ^-1 is supported, found ^{exponent.text}", exponent.line, exponent.column
            )
        return True


@dataclass(frozen=True)
class SymbolRef:
    """A symbol name with zero or more ``@ (expr)`` image suffixes."""

    name: str
    images: tuple["WordExpr", ...] = ()
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def to_text(self) -> str:
        text = self.name
        for image in self.images:
            text += f" @ ({image.to_text()})"
        return text


@dataclass(frozen=True)
class LetterExpr:
    kind: GeneratorKind
    symbol: SymbolRef
    point: Optional[str] = None
    inverse: bool = False
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def to_text(self) -> str:
        inner = self.symbol.to_text()
        if self.point is not None:
            inner += f",{self.point}"
        return f"{self.kind.prefix}[{inner}]" + ("^-1" if self.inverse else "")


@dataclass(frozen=True)
class WordRef:
    name: str
    inverse: bool = False
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def to_text(self) -> str:
        return self.name + ("^-1" if self.inverse else "")


@dataclass(frozen=True)
class GroupExpr:
    body: "WordExpr"
    inverse: bool = False

    def to_text(self) -> str:
        return f"({self.body.to_text()})" + ("^-1" if self.inverse else "")


Term = Union[LetterExpr, WordRef, GroupExpr]


@dataclass(frozen=True)
class WordExpr:
    """A product of terms; no terms is the identity word."""

    terms: tuple[Term, ...] = ()

    def to_text(self) -> str:
        if not self.terms:
            return IDENTITY
        return " * ".join(term.to_text() for term in self.terms)

    def references(self) -> Iterator[Union[SymbolRef, WordRef, LetterExpr]]:
        """Every symbol, word and letter reference, depth first."""
        for term in self.terms:
            if isinstance(term, WordRef):
                yield term
            elif isinstance(term, GroupExpr):
                yield from term.body.references()
            else:
                yield term
                yield from _symbol_references(term.symbol)


def _symbol_references(ref: SymbolRef) -> Iterator[Union[SymbolRef, WordRef, LetterExpr]]:
    yield ref
    for image in ref.images:
        yield from image.references()


def _parse_symbol(stream: TokenStream) -> SymbolRef:
    name = stream.expect_name("a symbol name")
    images: list[WordExpr] = []
    while stream.accept("@"):
        opener = stream.expect("(")
        images.append(parse_word_expr(stream, closing=")"))
        stream.expect(")", opener)
    return SymbolRef(name.text, tuple(images), name.line, name.column)


def _parse_letter(stream: TokenStream, head: Token) -> LetterExpr:
    kind = LETTER_KINDS[head.text]
    opener = stream.expect("[")
    if stream.peek() is None:
        raise DocumentError("Unclosed '['", opener.line, opener.column)
    symbol = _parse_symbol(stream)
    arguments: list[Token] = []
    while stream.accept(","):
        arguments.append(stream.expect_name("a marked point"))
    stream.expect("]", opener)

    expected = 1 if kind == GeneratorKind.POINT_PUSH else 0
    if len(arguments) != expected:
        raise ArityError(
            f"{head.text}[...] takes {expected + 1} argument(s), got {len(arguments) + 1}",
            head.line,
            head.column,
        )
    point = arguments[0].text if arguments else None
    return LetterExpr(kind, symbol, point, stream.accept_inverse(), head.line, head.column)


def _parse_term(stream: TokenStream) -> Optional[Term]:
    token = stream.peek()
    if token is None:
        raise DocumentError("Expected a word term", stream.line, stream.end_column)
    if token.text == "(" and token.kind == "PUNCT":
        stream.next()
        body = parse_word_expr(stream, closing=")")
        stream.expect(")", token)
        return GroupExpr(body, stream.accept_inverse())
    name = stream.expect_name("a word term")
    nxt = stream.peek()
    if name.text in LETTER_KINDS and nxt is not None and nxt.text == "[":
        return _parse_letter(stream, name)
    if name.text == IDENTITY:
        stream.accept_inverse()
        return None
    return WordRef(name.text, stream.accept_inverse(), name.line, name.column)


def parse_word_expr(stream: TokenStream, closing: Optional[str] = None) -> WordExpr:
    """Parse ``term ('*' term)*`` up to the end of the stream or a closing token."""
    terms: list[Term] = []
    while True:
        term = _parse_term(stream)
        if term is not None:
            terms.append(term)
        if not stream.accept("*"):
            break
    token = stream.peek()
    if token is not None and token.text != closing:
        raise DocumentError(f"Unexpected {token.text!r} in word", token.line, token.column)
    return WordExpr(tuple(terms))


def parse_expression(text: str, line: int = 1) -> WordExpr:
    stream = TokenStream(tokenize(text, line), line, len(text) + 1)
    expr = parse_word_expr(stream)
    if not stream.at_end():
        token = stream.next()
        raise DocumentError(f"Unexpected {token.text!r}", token.line, token.column)
    return expr


@dataclass
class WordResolver:
    """Turns parsed expressions into words over the symbols and words in scope."""

    surface: MarkedSurface
    symbols: Mapping[str, Symbol]
    words: Mapping[str, MonodromyWord] = field(default_factory=dict)

    def symbol(self, ref: SymbolRef) -> Symbol:
        if ref.name not in self.symbols:
            raise UnknownIdentifierError(f"Unknown symbol {ref.name!r}", ref.line, ref.column)
        resolved: Symbol = self.symbols[ref.name]
        for image in ref.images:
            resolved = ImageSymbol(resolved, self.word(image))
        return resolved

    def letter(self, expr: LetterExpr) -> Generator:
        symbol = self.symbol(expr.symbol)
        if expr.kind == GeneratorKind.HALF_TWIST and not symbol.is_arc:
            raise DocumentError(
                f"H[...] needs an arc, {expr.symbol.name!r} is a curve", expr.line, expr.column
            )
        if expr.kind != GeneratorKind.HALF_TWIST and symbol.is_arc:
            raise DocumentError(
                f"{expr.kind.prefix}[...] needs a curve, {expr.symbol.name!r} is an arc",
                expr.line,
                expr.column,
            )
        if expr.point is not None and not self.surface.has_point(expr.point):
            raise UnknownIdentifierError(
                f"Unknown marked point {expr.point!r}", expr.line, expr.column
            )
        letter = Generator(expr.kind, symbol, -1 if expr.inverse else 1, expr.point)
        problem = push_point_error(self.surface, letter)
        if problem is not None:
            raise DocumentError(problem, expr.line, expr.column)
        return letter

    def word(self, expr: WordExpr) -> MonodromyWord:
        letters: list[Generator] = []
        for term in expr.terms:
            if isinstance(term, LetterExpr):
                letters.append(self.letter(term))
                continue
            if isinstance(term, WordRef):
                if term.name not in self.words:
                    raise UnknownIdentifierError(
                        f"Unknown word {term.name!r}", term.line, term.column
                    )
                part = self.words[term.name]
                if part.surface != self.surface:
                    raise SurfaceMismatchError(f"Word {term.name!r} lives on another surface")
            else:
                part = self.word(term.body)
            chunk = part.letters
            if term.inverse:
                chunk = tuple(g.inverse() for g in reversed(chunk))
            letters.extend(chunk)
        return MonodromyWord(self.surface, tuple(letters))


def parse_word_text(
    text: str,
    surface: MarkedSurface,
    symbols: Mapping[str, Symbol],
    words: Optional[Mapping[str, MonodromyWord]] = None,
) -> MonodromyWord:
    """Parse and resolve a word written in the document syntax."""
    return WordResolver(surface, symbols, words or {}).word(parse_expression(text))


def parse_symbol_text(
    text: str,
    surface: MarkedSurface,
    symbols: Mapping[str, Symbol],
    words: Optional[Mapping[str, MonodromyWord]] = None,
) -> Symbol:
    """Parse a symbol written as in a letter, e.g. ``a @ (D[c])``."""
    stream = TokenStream(tokenize(text), 1, len(text) + 1)
    ref = _parse_symbol(stream)
    if not stream.at_end():
        token = stream.next()
        raise DocumentError(f"Unexpected {token.text!r} after symbol", token.line, token.column)
    return WordResolver(surface, symbols, words or {}).symbol(ref)


def parse_bool(token: Token) -> bool:
    if token.text in ("true", "yes"):
        return True
    if token.text in ("false", "no"):
        return False
    raise DocumentError(f"Expected true or false, found {token.text!r}", token.line, token.column)


def parse_int_list(stream: TokenStream) -> tuple[int, ...]:
    opener = stream.expect("[")
    values: list[int] = []
    if stream.accept("]"):
        return ()
    while True:
        token = stream.next()
        if token.kind != "INT":
            raise DocumentError(f"Expected an integer, found {token.text!r}", token.line, token.column)
        values.append(int(token.text))
        if stream.accept("]"):
            return tuple(values)
        if stream.peek() is None:
            raise DocumentError("Unclosed '['", opener.line, opener.column)
        stream.expect(",")


def parse_matrix(stream: TokenStream) -> tuple[tuple[int, ...], ...]:
    opener = stream.expect("[")
    rows: list[tuple[int, ...]] = []
    if stream.accept("]"):
        return ()
    while True:
        rows.append(parse_int_list(stream))
        if stream.accept("]"):
            return tuple(rows)
        if stream.peek() is None:
            raise DocumentError("Unclosed '['", opener.line, opener.column)
        stream.expect(",")


def parse_hopf_curve_spec(text: str) -> HopfCurveSpec:
    """Parse ``<id> class=[..] [handle=<odd int>] [collar_avoiding=true|false]``."""
    stream = TokenStream(tokenize(text), 1, len(text) + 1)
    curve_id = stream.expect_name("a curve id").text
    base_class: Optional[tuple[int, ...]] = None
    handle = 1
    collar_avoiding = True
    while not stream.at_end():
        key = stream.expect_name("an option")
        stream.expect("=")
        if key.text == "class":
            base_class = parse_int_list(stream)
        elif key.text == "handle":
            value = stream.next()
            if value.kind != "INT":
                raise DocumentError("handle= takes an integer", value.line, value.column)
            handle = int(value.text)
        elif key.text == "collar_avoiding":
            collar_avoiding = parse_bool(stream.next())
        else:
            raise DocumentError(f"Unknown curve option {key.text!r}", key.line, key.column)
    if base_class is None:
        raise ArityError(f"Curve {curve_id} needs class=[..]", 1, 1)
    return HopfCurveSpec(curve_id, base_class, handle, collar_avoiding)
