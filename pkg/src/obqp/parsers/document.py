"""Parser and serializer for ``.obqp`` session documents.

A document is a sequence of one-line statements::

    surface g=0 b=2
    point p1
    loop d1 class=[1,0] through=p1
    word w = P[d1,p1]
    classify

Declarations build surfaces, points, symbols, words and pointed open books;
directives name the operations to run on them.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Optional, Union

from obqp.exceptions import (
    ArityError,
    DocumentError,
    DocumentSyntaxError,
    UnknownIdentifierError,
)
from obqp.parsers.words import (
    LetterExpr,
    SymbolRef,
    Token,
    TokenStream,
    WordExpr,
    WordRef,
    parse_word_expr,
    tokenize,
)

logger = logging.getLogger(__name__)

OptionValue = Union[
    bool, int, str, tuple[int, ...], tuple[str, ...], tuple[tuple[int, ...], ...]
]

SYMBOL_KEYWORDS = ("curve", "loop", "arc", "disk_arc", "disk_curve")
DIRECTIVES = (
    "classify",
    "verify",
    "normalize",
    "stabilize",
    "destabilize",
    "hopf",
    "bennequin",
    "compile",
    "invariants",
)

# keyword -> (required options, allowed options)
OPTION_SPECS: dict[str, tuple[frozenset[str], frozenset[str]]] = {
    "surface": (frozenset({"g", "b"}), frozenset({"g", "b"})),
    "point": (frozenset(), frozenset({"collar"})),
    "curve": (frozenset({"class"}), frozenset({"class", "collar_avoiding", "action"})),
    "loop": (frozenset({"class", "through"}), frozenset({"class", "through", "collar_avoiding"})),
    "arc": (frozenset({"from", "to"}), frozenset({"from", "to", "collar_avoiding", "action"})),
    "disk_arc": (frozenset(), frozenset({"from", "to", "collar_avoiding"})),
    "disk_curve": (frozenset(), frozenset({"through", "collar_avoiding"})),
    "classify": (frozenset(), frozenset({"quotient", "expect"})),
    "verify": (frozenset({"cert"}), frozenset({"cert"})),
    "normalize": (frozenset(), frozenset({"budget", "level"})),
    "stabilize": (frozenset(), frozenset({"sign"})),
    "destabilize": (frozenset(), frozenset()),
    "hopf": (
        frozenset({"variant", "curve", "class"}),
        frozenset({"variant", "curve", "class", "handle", "collar_avoiding"}),
    ),
    "bennequin": (frozenset(), frozenset()),
    "compile": (frozenset(), frozenset()),
    "invariants": (frozenset(), frozenset()),
}

POINT_OPTIONS = ("through", "from", "to")
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_.]*\Z")


@dataclass(frozen=True)
class Placement:
    """``[conj(..)] std(i,i+1)`` or ``[conj(..)] block(i,j)`` on a disk page."""

    kind: str
    start: int
    stop: int
    sigma: Optional[tuple[int, ...]] = None
    word: Optional[str] = None

    def to_text(self) -> str:
        core = f"{'std' if self.kind == 'arc' else 'block'}({self.start},{self.stop})"
        if self.word is not None:
            return f"conj({self.word}) {core}"
        if self.sigma is not None:
            letters = "*".join(f"s{abs(x)}" + ("" if x > 0 else "^-1") for x in self.sigma)
            return f"conj({letters or 'id'}) {core}"
        return core


@dataclass(frozen=True)
class Statement:
    """One declaration or directive, with its source position."""

    keyword: str
    name: Optional[str] = None
    options: tuple[tuple[str, OptionValue], ...] = ()
    expr: Optional[WordExpr] = None
    placement: Optional[Placement] = None
    refs: tuple[str, ...] = ()
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    @property
    def is_directive(self) -> bool:
        return self.keyword in DIRECTIVES

    def option(self, key: str, default: Optional[OptionValue] = None) -> Optional[OptionValue]:
        for name, value in self.options:
            if name == key:
                return value
        return default

    def to_text(self) -> str:
        parts = [self.keyword]
        if self.keyword in ("disk_arc", "disk_curve") and self.placement is not None:
            parts.extend([f"{self.name} =", self.placement.to_text()])
        elif self.keyword == "word" and self.expr is not None:
            if self.name is not None:
                parts.extend([self.name, "="])
            parts.append(self.expr.to_text())
        elif self.keyword == "pob":
            parts.extend([f"{self.name} =", self.refs[0]])
        else:
            if self.name is not None:
                parts.append(self.name)
            parts.extend(self.refs)
        parts.extend(f"{key}={format_value(value)}" for key, value in self.options)
        return " ".join(parts)


@dataclass(frozen=True)
class SessionDocument:
    """Parsed document: declarations and directives in source order."""

    statements: tuple[Statement, ...] = ()

    def __len__(self) -> int:
        return len(self.statements)

    @property
    def directives(self) -> list[Statement]:
        return [s for s in self.statements if s.is_directive]


def format_value(value: OptionValue) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value if _IDENTIFIER.match(value) else f'"{value}"'
    if value and isinstance(value[0], tuple):
        return "[" + ",".join(format_value(row) for row in value) + "]"
    return "[" + ",".join(str(x) for x in value) + "]"


def _parse_flat_list(stream: TokenStream, opener: Token) -> Union[tuple[int, ...], tuple[str, ...]]:
    """Integers ``[1,0,-1]`` or marked point names ``[p1,p2]``, not mixed."""
    values: list[Token] = []
    if stream.accept("]"):
        return ()
    while True:
        token = stream.peek()
        if token is None:
            raise DocumentError("Unclosed '['", opener.line, opener.column)
        if token.kind not in ("INT", "NAME") or (values and token.kind != values[0].kind):
            raise DocumentError(f"Unexpected {token.text!r} in list", token.line, token.column)
        values.append(stream.next())
        if stream.accept("]"):
            break
        stream.expect(",", opener)
    if values[0].kind == "NAME":
        return tuple(token.text for token in values)
    return tuple(int(token.text) for token in values)


def _parse_list_value(stream: TokenStream) -> OptionValue:
    opener = stream.expect("[")
    inner = stream.peek()
    if inner is None:
        raise DocumentError("Unclosed '['", opener.line, opener.column)
    if inner.text != "[":
        return _parse_flat_list(stream, opener)
    rows: list[tuple[int, ...]] = []
    while True:
        row_opener = stream.expect("[", opener)
        row = _parse_flat_list(stream, row_opener)
        if any(isinstance(x, str) for x in row):
            raise DocumentError("Matrix rows hold integers", row_opener.line, row_opener.column)
        rows.append(tuple(int(x) for x in row))
        if stream.accept("]"):
            return tuple(rows)
        stream.expect(",", opener)


def _parse_value(stream: TokenStream) -> OptionValue:
    token = stream.peek()
    if token is None:
        raise DocumentError("Missing option value", stream.line, stream.end_column)
    if token.text == "[" and token.kind == "PUNCT":
        return _parse_list_value(stream)
    stream.next()
    if token.kind == "INT":
        return int(token.text)
    if token.kind == "STRING":
        return token.text[1:-1]
    if token.kind == "NAME":
        if token.text in ("true", "false"):
            return token.text == "true"
        return token.text
    raise DocumentError(f"Unexpected {token.text!r} as option value", token.line, token.column)


def _parse_options(stream: TokenStream, keyword: str, head: Token) -> tuple[tuple[str, OptionValue], ...]:
    required, allowed = OPTION_SPECS.get(keyword, (frozenset(), frozenset()))
    options: list[tuple[str, OptionValue]] = []
    seen: set[str] = set()
    while not stream.at_end():
        key = stream.expect_name("an option")
        stream.expect("=")
        if key.text not in allowed:
            raise DocumentError(f"{keyword} does not take {key.text}=", key.line, key.column)
        if key.text in seen:
            raise DocumentError(f"Option {key.text}= given twice", key.line, key.column)
        seen.add(key.text)
        options.append((key.text, _parse_value(stream)))
    missing = sorted(required - seen)
    if missing:
        raise ArityError(
            f"{keyword} needs {', '.join(k + '=' for k in missing)}", head.line, head.column
        )
    return tuple(options)


def _leading_name(stream: TokenStream) -> Optional[Token]:
    token, after = stream.peek(), stream.peek(1)
    if token is not None and token.kind == "NAME" and (after is None or after.text != "="):
        return stream.next()
    return None


def _parse_sigma(stream: TokenStream, opener: Token) -> tuple[int, ...]:
    letters: list[int] = []
    while True:
        token = stream.expect_name("a sigma letter")
        if token.text == "id":
            pass
        elif re.fullmatch(r"s\d+", token.text):
            index = int(token.text[1:])
            letters.append(-index if stream.accept_inverse() else index)
        else:
            raise DocumentError(f"Expected s<i>, found {token.text!r}", token.line, token.column)
        if not stream.accept("*"):
            break
    stream.expect(")", opener)
    return tuple(letters)


def _parse_placement(stream: TokenStream, keyword: str) -> Placement:
    sigma: Optional[tuple[int, ...]] = None
    word: Optional[str] = None
    head = stream.expect_name("a placement")
    if head.text == "conj":
        opener = stream.expect("(")
        first, after = stream.peek(), stream.peek(1)
        is_word = (
            first is not None
            and first.kind == "NAME"
            and first.text != "id"
            and not re.fullmatch(r"s\d+", first.text)
            and after is not None
            and after.text == ")"
        )
        if is_word and first is not None:
            word = stream.next().text
            stream.expect(")", opener)
        else:
            sigma = _parse_sigma(stream, opener)
        head = stream.expect_name("a placement")

    expected = "std" if keyword == "disk_arc" else "block"
    if head.text != expected:
        raise DocumentError(f"{keyword} takes {expected}(..), found {head.text!r}", head.line, head.column)
    opener = stream.expect("(")
    bounds: list[int] = []
    while True:
        token = stream.next()
        if token.kind != "INT":
            raise DocumentError(f"Expected a strand index, found {token.text!r}", token.line, token.column)
        bounds.append(int(token.text))
        if stream.accept(")"):
            break
        stream.expect(",", opener)
    if len(bounds) != 2:
        raise ArityError(f"{expected}(..) takes two strand indices", head.line, head.column)
    return Placement("arc" if keyword == "disk_arc" else "block", bounds[0], bounds[1], sigma, word)


def parse_statement(tokens: list[Token], line: int, end_column: int) -> Statement:
    stream = TokenStream(tokens, line, end_column)
    head = stream.expect_name("a keyword")
    keyword = head.text
    position = {"line": head.line, "column": head.column}

    if keyword == "word":
        name: Optional[str] = None
        if stream.peek(1) is not None and stream.peek(1).text == "=":  # type: ignore[union-attr]
            name = stream.expect_name("a word name").text
            stream.expect("=")
        return Statement(keyword, name, expr=parse_word_expr(stream), **position)

    if keyword == "pob":
        name_token = stream.expect_name("a pob name")
        stream.expect("=")
        target = stream.expect_name("a word name")
        if not stream.at_end():
            extra = stream.next()
            raise DocumentError(f"Unexpected {extra.text!r}", extra.line, extra.column)
        return Statement(keyword, name_token.text, refs=(target.text,), **position)

    if keyword == "disjoint":
        first = stream.expect_name("a symbol")
        second = stream.expect_name("a symbol")
        if not stream.at_end():
            extra = stream.next()
            raise DocumentError(f"Unexpected {extra.text!r}", extra.line, extra.column)
        return Statement(keyword, refs=(first.text, second.text), **position)

    if keyword in ("disk_arc", "disk_curve"):
        name_token = stream.expect_name("a symbol name")
        stream.expect("=")
        placement = _parse_placement(stream, keyword)
        options = _parse_options(stream, keyword, head)
        return Statement(keyword, name_token.text, options, placement=placement, **position)

    if keyword in ("point",) + SYMBOL_KEYWORDS[:3]:
        name_token = stream.expect_name("a name")
        return Statement(keyword, name_token.text, _parse_options(stream, keyword, head), **position)

    if keyword == "surface" or keyword in DIRECTIVES:
        leading = _leading_name(stream)
        options = _parse_options(stream, keyword, head)
        if keyword == "surface":
            return Statement(keyword, leading.text if leading else None, options, **position)
        refs = (leading.text,) if leading else ()
        return Statement(keyword, options=options, refs=refs, **position)

    raise DocumentError(f"Unknown statement {keyword!r}", head.line, head.column)


@dataclass
class _Scope:
    points: set[str] = field(default_factory=set)
    symbols: set[str] = field(default_factory=set)


class _NameChecker:
    """Forward references are forbidden and names are unique per kind."""

    def __init__(self) -> None:
        self.surfaces: set[str] = set()
        self.words: set[str] = set()
        self.pobs: set[str] = set()
        self.scope: Optional[_Scope] = None
        self.has_target = False

    def _unknown(self, what: str, name: str, line: int, column: int) -> UnknownIdentifierError:
        return UnknownIdentifierError(f"Unknown {what} {name!r}", line, column)

    def _require_scope(self, statement: Statement) -> _Scope:
        if self.scope is None:
            raise DocumentError(
                f"{statement.keyword} before any surface declaration", statement.line, statement.column
            )
        return self.scope

    def _check_expr(self, expr: WordExpr, scope: _Scope, statement: Statement) -> None:
        for ref in expr.references():
            if isinstance(ref, WordRef) and ref.name not in self.words:
                raise self._unknown("word", ref.name, ref.line, ref.column)
            if isinstance(ref, SymbolRef) and ref.name not in scope.symbols:
                raise self._unknown("symbol", ref.name, ref.line, ref.column)
            if isinstance(ref, LetterExpr) and ref.point is not None and ref.point not in scope.points:
                raise self._unknown("marked point", ref.point, ref.line, ref.column)

    def check(self, statement: Statement) -> None:
        keyword = statement.keyword
        where = (statement.line, statement.column)
        if keyword == "surface":
            if statement.name is not None:
                if statement.name in self.surfaces:
                    raise DocumentError(f"Surface {statement.name!r} declared twice", *where)
                self.surfaces.add(statement.name)
            self.scope = _Scope()
            return

        if statement.is_directive:
            if statement.refs:
                target = statement.refs[0]
                if target not in self.pobs and target not in self.words:
                    raise self._unknown("pob or word", target, *where)
            elif not self.has_target:
                raise DocumentError(f"{keyword} has no pob or word to act on", *where)
            return

        if keyword == "pob":
            if statement.refs[0] not in self.words:
                raise self._unknown("word", statement.refs[0], *where)
            if statement.name in self.pobs:
                raise DocumentError(f"Pob {statement.name!r} declared twice", *where)
            self.pobs.add(statement.name or "")
            self.has_target = True
            return

        scope = self._require_scope(statement)
        if keyword == "point":
            if statement.name in scope.points:
                raise DocumentError(f"Marked point {statement.name!r} declared twice", *where)
            scope.points.add(statement.name or "")
        elif keyword in SYMBOL_KEYWORDS:
            for key in POINT_OPTIONS:
                value = statement.option(key)
                names = (value,) if isinstance(value, str) else value
                for point in names if isinstance(names, tuple) else ():
                    if isinstance(point, str) and point not in scope.points:
                        raise self._unknown("marked point", point, *where)
            placement = statement.placement
            if placement is not None and placement.word is not None:
                if placement.word not in self.words:
                    raise self._unknown("word", placement.word, *where)
            if statement.name in scope.symbols:
                raise DocumentError(f"Symbol {statement.name!r} declared twice", *where)
            scope.symbols.add(statement.name or "")
        elif keyword == "disjoint":
            for ref in statement.refs:
                if ref not in scope.symbols:
                    raise self._unknown("symbol", ref, *where)
        elif keyword == "word" and statement.expr is not None:
            self._check_expr(statement.expr, scope, statement)
            if statement.name is not None:
                if statement.name in self.words:
                    raise DocumentError(f"Word {statement.name!r} declared twice", *where)
                self.words.add(statement.name)
            self.has_target = True


def parse(text: str) -> SessionDocument:
    """Parse a whole document, reporting every syntax error at once."""
    statements: list[Statement] = []
    issues: list[DocumentError] = []
    arity: list[ArityError] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        try:
            tokens = tokenize(raw, number)
            if not tokens:
                continue
            statements.append(parse_statement(tokens, number, len(raw.rstrip()) + 1))
        except ArityError as e:
            arity.append(e)
        except DocumentError as e:
            issues.append(e)

    if issues:
        raise DocumentSyntaxError(issues)
    if arity:
        raise arity[0]

    checker = _NameChecker()
    for statement in statements:
        checker.check(statement)

    document = SessionDocument(tuple(statements))
    logger.info(f"Parsed document with {len(document)} statements")
    return document


def serialize(document: SessionDocument) -> str:
    """Canonical text of a document; parsing it gives back an equal document."""
    return "\n".join(statement.to_text() for statement in document.statements) + "\n"
