"""Build surfaces, symbols, words and pointed open books from a parsed document."""

import logging
from dataclasses import dataclass, field
from typing import Optional, Union

from obqp.braids.compiler import compile_word
from obqp.calculus.homology import DEFAULT_CONVENTION
from obqp.calculus.rewriting import collect_symbols
from obqp.exceptions import DocumentError, ObqpError, SessionError
from obqp.models.open_book import PointedOpenBook
from obqp.models.surface import (
    ArcSymbol,
    CurveSymbol,
    DiskPlacement,
    HomologyClass,
    IntMatrix,
    MarkedPoint,
    MarkedSurface,
)
from obqp.models.word import MonodromyWord, PushConvention, Symbol
from obqp.parsers.document import (
    SYMBOL_KEYWORDS,
    OptionValue,
    Placement,
    SessionDocument,
    Statement,
    format_value,
)
from obqp.parsers.words import WordResolver
from obqp.surface.lattice import (
    build_surface,
    disk_arc_endpoints,
    disk_curve_class,
    validate_symbol,
)

logger = logging.getLogger(__name__)


@dataclass
class Scope:
    """Everything declared under one ``surface`` statement."""

    surface: MarkedSurface
    name: Optional[str] = None
    symbols: dict[str, Symbol] = field(default_factory=dict)
    disjoint_pairs: list[tuple[str, str]] = field(default_factory=list)
    points_closed: bool = False


@dataclass(frozen=True)
class Directive:
    """A directive bound to the pointed open book it acts on."""

    statement: Statement
    target: str
    pob: PointedOpenBook
    scope: Scope

    @property
    def name(self) -> str:
        return self.statement.keyword

    def option(self, key: str, default: Optional[OptionValue] = None) -> Optional[OptionValue]:
        return self.statement.option(key, default)


@dataclass
class Session:
    document: SessionDocument
    scopes: list[Scope] = field(default_factory=list)
    words: dict[str, MonodromyWord] = field(default_factory=dict)
    pobs: dict[str, PointedOpenBook] = field(default_factory=dict)
    directives: list[Directive] = field(default_factory=list)
    last_target: Optional[str] = None

    def scope_of(self, surface: MarkedSurface) -> Scope:
        for scope in reversed(self.scopes):
            if scope.surface == surface:
                return scope
        raise SessionError("No surface declaration matches this pointed open book")

    def pob(self, name: Optional[str] = None) -> PointedOpenBook:
        """The named pob or word, or the last one declared."""
        target = name or self.last_target
        if target is None:
            raise SessionError("The document declares no pob or word")
        if target in self.pobs:
            return self.pobs[target]
        if target in self.words:
            word = self.words[target]
            return PointedOpenBook(word.surface, word)
        raise SessionError(f"Unknown pob or word {target!r}")


def _fail(statement: Statement, message: str) -> SessionError:
    return SessionError(message, statement.line, statement.column)


def _int_list(statement: Statement, key: str) -> Optional[tuple[int, ...]]:
    value = statement.option(key)
    if value is None:
        return None
    if not isinstance(value, tuple) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise _fail(statement, f"{key}= takes a list of integers")
    return tuple(int(x) for x in value)  # type: ignore[arg-type]


def _matrix(statement: Statement, key: str) -> Optional[IntMatrix]:
    value = statement.option(key)
    if value is None:
        return None
    if not isinstance(value, tuple) or not all(isinstance(row, tuple) for row in value):
        raise _fail(statement, f"{key}= takes a matrix [[..],..]")
    return tuple(tuple(int(x) for x in row) for row in value)  # type: ignore[union-attr]


def _flag(statement: Statement, key: str, default: bool = False) -> bool:
    value = statement.option(key, default)
    if not isinstance(value, bool):
        raise _fail(statement, f"{key}= takes true or false")
    return value


def _points(statement: Statement, key: str) -> tuple[str, ...]:
    value = statement.option(key)
    if value is None:
        return ()
    if isinstance(value, str):
        return (value,)
    if isinstance(value, tuple) and all(isinstance(x, str) for x in value):
        return tuple(str(x) for x in value)
    raise _fail(statement, f"{key}= takes a marked point or a list of them")


def _point(statement: Statement, key: str) -> Optional[str]:
    value = statement.option(key)
    if value is not None and not isinstance(value, str):
        raise _fail(statement, f"{key}= takes a marked point")
    return value


class SessionBuilder:
    """Walks a document in order, building each declaration on the current surface."""

    def __init__(
        self, document: SessionDocument, convention: PushConvention = DEFAULT_CONVENTION
    ) -> None:
        self.session = Session(document)
        self.convention = convention
        self.scope: Optional[Scope] = None

    def build(self) -> Session:
        for statement in self.session.document.statements:
            try:
                self._declare(statement)
            except DocumentError:
                raise
            except ObqpError as e:
                raise _fail(statement, str(e)) from e
        logger.info(
            f"Built session: {len(self.session.scopes)} surface(s), "
            f"{len(self.session.words)} word(s), {len(self.session.directives)} directive(s)"
        )
        return self.session

    def _current(self, statement: Statement) -> Scope:
        if self.scope is None:
            raise _fail(statement, f"{statement.keyword} before any surface declaration")
        return self.scope

    def _declare(self, statement: Statement) -> None:
        keyword = statement.keyword
        if keyword == "surface":
            genus, boundary = statement.option("g"), statement.option("b")
            if not isinstance(genus, int) or not isinstance(boundary, int):
                raise _fail(statement, "g= and b= take integers")
            self.scope = Scope(build_surface(genus, boundary), statement.name)
            self.session.scopes.append(self.scope)
        elif keyword == "point":
            self._add_point(statement)
        elif keyword in SYMBOL_KEYWORDS:
            scope = self._current(statement)
            symbol = self._symbol(statement, scope)
            validate_symbol(scope.surface, symbol)
            scope.symbols[symbol.id] = symbol
            scope.points_closed = True
        elif keyword == "disjoint":
            scope = self._current(statement)
            first, second = statement.refs
            scope.disjoint_pairs.append((first, second))
        elif keyword == "word":
            self._add_word(statement)
        elif keyword == "pob":
            word = self.session.words[statement.refs[0]]
            self.session.pobs[statement.name or ""] = PointedOpenBook(word.surface, word)
            self.session.last_target = statement.name
        elif statement.is_directive:
            self._add_directive(statement)

    def _add_point(self, statement: Statement) -> None:
        scope = self._current(statement)
        if scope.points_closed:
            raise _fail(
                statement, "Marked points must be declared before symbols and words on a surface"
            )
        surface = scope.surface
        point = MarkedPoint(statement.name or "", _flag(statement, "collar"))
        scope.surface = build_surface(
            surface.genus, surface.boundary_count, surface.marked_points + (point,)
        )

    def _placement(self, statement: Statement, scope: Scope) -> DiskPlacement:
        placement: Optional[Placement] = statement.placement
        if placement is None:
            raise _fail(statement, f"{statement.keyword} needs a placement")
        if not scope.surface.is_disk:
            raise _fail(statement, f"{statement.keyword} needs a disk page")
        conjugator: tuple[int, ...] = placement.sigma or ()
        if placement.word is not None:
            word = self.session.words[placement.word]
            if word.surface != scope.surface:
                raise _fail(statement, f"Word {placement.word!r} lives on another surface")
            conjugator = compile_word(word, self.convention).letters
        n = scope.surface.n
        bad = [x for x in conjugator if x == 0 or abs(x) > n - 1]
        if bad or not 1 <= placement.start <= placement.stop <= n:
            raise _fail(statement, f"Placement {placement.to_text()} does not fit {n} strands")
        return DiskPlacement(placement.kind, placement.start, placement.stop, conjugator)

    def _symbol(self, statement: Statement, scope: Scope) -> Union[CurveSymbol, ArcSymbol]:
        keyword = statement.keyword
        name = statement.name or ""
        collar_avoiding = _flag(statement, "collar_avoiding")
        surface = scope.surface

        if keyword == "disk_arc":
            disk = self._placement(statement, scope)
            if disk.stop != disk.start + 1:
                raise _fail(statement, f"std({disk.start},{disk.stop}) is not a standard arc")
            first, second = _point(statement, "from"), _point(statement, "to")
            if (first is None) != (second is None):
                raise _fail(statement, "from= and to= go together")
            endpoints = (first, second) if first and second else disk_arc_endpoints(surface, disk)
            return ArcSymbol(name, endpoints, collar_avoiding, disk=disk)

        if keyword == "disk_curve":
            disk = self._placement(statement, scope)
            h1_class = disk_curve_class(surface, disk)
            return CurveSymbol(
                name, h1_class, collar_avoiding, through_points=_points(statement, "through"), disk=disk
            )

        if keyword == "arc":
            first, second = _point(statement, "from"), _point(statement, "to")
            return ArcSymbol(
                name, (first or "", second or ""), collar_avoiding, _matrix(statement, "action")
            )

        h1_class = HomologyClass(_int_list(statement, "class") or ())
        if keyword == "loop":
            return CurveSymbol(
                name, h1_class, collar_avoiding, through_points=_points(statement, "through")
            )
        return CurveSymbol(name, h1_class, collar_avoiding, _matrix(statement, "action"))

    def _add_word(self, statement: Statement) -> None:
        scope = self._current(statement)
        scope.points_closed = True
        if statement.expr is None:
            raise _fail(statement, "word without an expression")
        resolver = WordResolver(scope.surface, scope.symbols, self.session.words)
        word = resolver.word(statement.expr)
        for symbol in collect_symbols(word).values():
            validate_symbol(scope.surface, symbol)
        name = statement.name or f"_{statement.line}"
        self.session.words[name] = word
        self.session.last_target = name

    def _add_directive(self, statement: Statement) -> None:
        target = statement.refs[0] if statement.refs else self.session.last_target
        if target is None:
            raise _fail(statement, f"{statement.keyword} has no pob or word to act on")
        pob = self.session.pob(target)
        self.session.directives.append(
            Directive(statement, target, pob, self.session.scope_of(pob.surface))
        )


def build_session(
    document: SessionDocument, convention: PushConvention = DEFAULT_CONVENTION
) -> Session:
    return SessionBuilder(document, convention).build()


def _symbol_line(surface: MarkedSurface, symbol: Union[CurveSymbol, ArcSymbol]) -> str:
    options: list[tuple[str, OptionValue]] = []
    disk = symbol.disk
    if isinstance(symbol, ArcSymbol):
        if disk is not None:
            head = f"disk_arc {symbol.id} = {_placement_text(disk)}"
            if tuple(disk_arc_endpoints(surface, disk)) != symbol.endpoints:
                options += [("from", symbol.endpoints[0]), ("to", symbol.endpoints[1])]
        else:
            head = f"arc {symbol.id}"
            options += [("from", symbol.endpoints[0]), ("to", symbol.endpoints[1])]
    elif disk is not None:
        head = f"disk_curve {symbol.id} = {_placement_text(disk)}"
    else:
        head = f"{'loop' if symbol.through_points else 'curve'} {symbol.id}"
        options.append(("class", symbol.h1_class.coords))
    if isinstance(symbol, CurveSymbol) and symbol.through_points:
        points = symbol.through_points
        options.append(("through", points[0] if len(points) == 1 else points))
    if symbol.collar_avoiding:
        options.append(("collar_avoiding", True))
    if symbol.declared_action is not None and disk is None:
        if not (isinstance(symbol, CurveSymbol) and symbol.through_points):
            options.append(("action", symbol.declared_action))
    return " ".join([head] + [f"{key}={format_value(value)}" for key, value in options])


def _placement_text(disk: DiskPlacement) -> str:
    return Placement(disk.kind, disk.start, disk.stop, disk.conjugator or None).to_text()


def document_for_pob(pob: PointedOpenBook, word_name: str = "w", pob_name: str = "main") -> str:
    """A self-contained document declaring exactly what ``pob`` needs."""
    surface = pob.surface
    lines = [f"surface g={surface.genus} b={surface.boundary_count}"]
    for point in surface.marked_points:
        lines.append(f"point {point.id} collar=true" if point.collar else f"point {point.id}")
    for symbol in collect_symbols(pob.word).values():
        lines.append(_symbol_line(surface, symbol))
    lines.append(f"word {word_name} = {pob.word.to_text()}")
    lines.append(f"pob {pob_name} = {word_name}")
    return "\n".join(lines) + "\n"
