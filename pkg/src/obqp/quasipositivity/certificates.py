"""Assembly, verification, conjugation and JSON form of quasipositivity certificates."""

import json
import logging
from dataclasses import replace
from typing import Literal, Mapping, Optional

from pydantic import BaseModel, ValidationError

from obqp.braids.artin import braid_equal
from obqp.braids.compiler import compile_word
from obqp.calculus.homology import (
    DEFAULT_CONVENTION,
    act_on_homology,
    homologically_nontrivial,
    symbol_class,
    validate_letter,
)
from obqp.calculus.rewriting import canonical_form, compose, inverse
from obqp.exceptions import (
    CertificateError,
    DiskCompileError,
    ForeignSymbolError,
    ObqpError,
    SymbolValidationError,
)
from obqp.models.certificate import (
    CertificateEntry,
    ClassificationResult,
    DehnEntry,
    HalfTwistEntry,
    QPCertificate,
    QPLevel,
    VerificationGrade,
    VerificationResult,
)
from obqp.models.open_book import PointedOpenBook
from obqp.models.surface import HomologyQuotient, MarkedSurface
from obqp.models.word import (
    Generator,
    GeneratorKind,
    ImageSymbol,
    MonodromyWord,
    PushConvention,
    Symbol,
)
from obqp.parsers.words import parse_symbol_text, parse_word_text
from obqp.quasipositivity.engine import dehn_witness

logger = logging.getLogger(__name__)


def assemble(cert: QPCertificate) -> MonodromyWord:
    """The word w1 * H1 * w1^-1 * ... * D[c]^e * ... a certificate stands for."""
    letters: list[Generator] = []
    for entry in cert.entries:
        if isinstance(entry, HalfTwistEntry):
            letters.extend(entry.conjugator.letters)
            letters.append(Generator(GeneratorKind.HALF_TWIST, entry.arc, entry.sign))
            letters.extend(inverse(entry.conjugator).letters)
        else:
            letters.append(Generator(GeneratorKind.DEHN, entry.curve, entry.sign))
    return MonodromyWord(cert.surface, tuple(letters))


def _entry_letters(entry: CertificateEntry) -> list[Generator]:
    if isinstance(entry, HalfTwistEntry):
        arc = Generator(GeneratorKind.HALF_TWIST, entry.arc, entry.sign)
        return [arc, *entry.conjugator.letters]
    return [Generator(GeneratorKind.DEHN, entry.curve, entry.sign)]


def _check_symbols(surface: MarkedSurface, cert: QPCertificate) -> None:
    if cert.surface != surface:
        raise ForeignSymbolError("Certificate is written over a different surface")
    for index, entry in enumerate(cert.entries):
        if isinstance(entry, HalfTwistEntry):
            if entry.conjugator.surface != surface:
                raise ForeignSymbolError(f"Entry {index + 1}: conjugator lives on another surface")
            if not entry.arc.is_arc:
                raise ForeignSymbolError(f"Entry {index + 1}: {entry.arc.id} is not an arc")
        elif entry.curve.is_arc:
            raise ForeignSymbolError(f"Entry {index + 1}: {entry.curve.id} is not a curve")
        for letter in _entry_letters(entry):
            try:
                validate_letter(surface, letter)
            except SymbolValidationError as e:
                raise ForeignSymbolError(f"Entry {index + 1}: {e}") from e


def level_violation(
    cert: QPCertificate, convention: PushConvention = DEFAULT_CONVENTION
) -> Optional[str]:
    """First way a certificate breaks its level's conditions, or None."""
    surface = cert.surface
    for index, entry in enumerate(cert.entries):
        position = f"Entry {index + 1}"
        if isinstance(entry, HalfTwistEntry):
            if entry.sign != 1:
                return f"{position}: half-twist entries must be positive"
        elif cert.level == QPLevel.STEIN:
            if entry.sign != 1:
                return f"{position}: Stein certificates allow only positive Dehn twists"
            h1_class = symbol_class(surface, entry.curve, convention)
            if not homologically_nontrivial(surface, h1_class, cert.quotient):
                return f"{position}: {entry.curve.id} is null-homologous in {cert.quotient.value}"
            witness = dehn_witness(surface, entry.curve, cert.quotient, convention)
            if entry.witness is not None and tuple(entry.witness) != witness:
                return f"{position}: recorded witness does not match the class of {entry.curve.id}"

    if cert.level == QPLevel.SQP:
        outside = [p.id for p in surface.marked_points if not p.collar]
        if outside:
            return f"Marked point {outside[0]} is not a collar point"
        for index, entry in enumerate(cert.entries):
            for symbol in (letter.symbol for letter in _entry_letters(entry)):
                if not symbol.collar_avoiding:
                    return f"Entry {index + 1}: {symbol.id} is not declared collar_avoiding"
    return None


def verify_certificate(
    pob: PointedOpenBook,
    cert: QPCertificate,
    convention: PushConvention = DEFAULT_CONVENTION,
) -> VerificationResult:
    """Check a certificate's level conditions and that it multiplies out to the word."""
    surface = pob.surface
    _check_symbols(surface, cert)

    reason = level_violation(cert, convention)
    if reason is not None:
        return VerificationResult(False, reason=reason)

    assembled = assemble(cert)
    if act_on_homology(assembled, convention) != act_on_homology(pob.word, convention):
        return VerificationResult(
            False, reason="Certificate and word act differently on homology or marked points"
        )

    syntactic = canonical_form(assembled, convention) == canonical_form(pob.word, convention)
    if surface.is_disk:
        if syntactic or surface.n == 0:
            return VerificationResult(True, VerificationGrade.EXACT)
        try:
            same = braid_equal(
                compile_word(assembled, convention), compile_word(pob.word, convention)
            )
        except DiskCompileError as e:
            return VerificationResult(False, reason=f"Cannot decide on the disk page: {e}")
        if not same:
            return VerificationResult(False, reason="Certificate and word are different braids")
        return VerificationResult(True, VerificationGrade.EXACT)

    grade = VerificationGrade.SYNTACTIC if syntactic else VerificationGrade.HOMOLOGICAL
    logger.debug(f"Certificate accepted with grade {grade.value}")
    return VerificationResult(True, grade)


def grade_classification(
    pob: PointedOpenBook,
    result: ClassificationResult,
    convention: PushConvention = DEFAULT_CONVENTION,
) -> ClassificationResult:
    """Record the verification grade of the preferred certificate on ``result``."""
    cert = result.preferred_certificate
    if cert is None:
        return result
    verdict = verify_certificate(pob, cert, convention)
    if not verdict.valid:
        logger.warning(f"The {cert.level.value} certificate did not verify: {verdict.reason}")
        return result
    result.grade = verdict.grade
    return result


def conjugate_certificate(
    cert: QPCertificate,
    h: MonodromyWord,
    convention: PushConvention = DEFAULT_CONVENTION,
) -> QPCertificate:
    """Certificate for h * w * h^-1 from a certificate for w."""
    if h.surface != cert.surface:
        raise CertificateError("Conjugating word lives on another surface")
    if h.is_empty:
        return cert
    entries: list[CertificateEntry] = []
    for entry in cert.entries:
        if isinstance(entry, HalfTwistEntry):
            entries.append(replace(entry, conjugator=compose(h, entry.conjugator)))
            continue
        curve = ImageSymbol(entry.curve, h)
        witness = None
        if entry.witness is not None:
            witness = dehn_witness(cert.surface, curve, cert.quotient, convention)
        entries.append(DehnEntry(curve, entry.sign, witness))
    return replace(cert, entries=tuple(entries))


class CertificateEntryRecord(BaseModel):
    type: Literal["half_twist", "dehn"]
    conjugator: str = "id"
    symbol: str
    sign: int = 1
    witness: Optional[list[int]] = None


class CertificateRecord(BaseModel):
    level: QPLevel
    quotient: HomologyQuotient = HomologyQuotient.H1F
    entries: list[CertificateEntryRecord] = []


def load_certificate(
    text: str,
    surface: MarkedSurface,
    symbols: Mapping[str, Symbol],
    words: Optional[Mapping[str, MonodromyWord]] = None,
) -> QPCertificate:
    """Read a certificate from JSON, resolving symbol texts against the session."""
    try:
        payload = json.loads(text)
        if isinstance(payload, dict) and "certificate" in payload:
            payload = payload["certificate"]
        record = CertificateRecord.model_validate(payload)
    except json.JSONDecodeError as e:
        raise CertificateError(f"Certificate is not valid JSON: {e}") from e
    except ValidationError as e:
        raise CertificateError(f"Invalid certificate: {e}") from e

    entries: list[CertificateEntry] = []
    for index, item in enumerate(record.entries):
        try:
            symbol = parse_symbol_text(item.symbol, surface, symbols, words)
            if item.type == "half_twist":
                conjugator = parse_word_text(item.conjugator, surface, symbols, words)
                entries.append(HalfTwistEntry(conjugator, symbol, item.sign))
            else:
                witness = tuple(item.witness) if item.witness is not None else None
                entries.append(DehnEntry(symbol, item.sign, witness))
        except ObqpError as e:
            raise ForeignSymbolError(f"Entry {index + 1}: {e}") from e
    return QPCertificate(record.level, surface, tuple(entries), record.quotient)


def dump_certificate(cert: QPCertificate, indent: int = 2) -> str:
    return json.dumps(cert.to_dict(), indent=indent, sort_keys=True)
