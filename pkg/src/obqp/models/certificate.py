"""Data models for quasipositivity classification and certificates."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional, Union

from obqp.models.surface import HomologyQuotient, MarkedSurface
from obqp.models.word import Generator, MonodromyWord, Symbol, symbol_text


class QPLevel(str, Enum):
    """Quasipositivity levels, from weakest to strongest."""

    QP = "qp"
    SQP = "sqp"
    STEIN = "stein"


# Certificate preference when several levels hold.
LEVEL_PREFERENCE = (QPLevel.STEIN, QPLevel.SQP, QPLevel.QP)


class VerificationGrade(str, Enum):
    """How strongly a certificate was checked against the word."""

    EXACT = "exact"
    SYNTACTIC = "syntactic"
    HOMOLOGICAL = "homological"


@dataclass(frozen=True)
class HalfTwistEntry:
    """Conjugated positive half-twist w * H[arc] * w^-1."""

    conjugator: MonodromyWord
    arc: Symbol
    sign: int = 1

    def to_text(self) -> str:
        letter = f"H[{symbol_text(self.arc)}]" + ("" if self.sign > 0 else "^-1")
        if self.conjugator.is_empty:
            return letter
        return f"({self.conjugator.to_text()}) . {letter}"


@dataclass(frozen=True)
class DehnEntry:
    """Dehn twist letter, with its class in the Stein quotient when recorded."""

    curve: Symbol
    sign: int = 1
    witness: Optional[tuple[int, ...]] = None

    def to_text(self) -> str:
        return f"D[{symbol_text(self.curve)}]" + ("" if self.sign > 0 else "^-1")


CertificateEntry = Union[HalfTwistEntry, DehnEntry]


@dataclass(frozen=True)
class QPCertificate:
    """Factorization witnessing membership of a word in a quasipositivity level."""

    level: QPLevel
    surface: MarkedSurface
    entries: tuple[CertificateEntry, ...] = ()
    quotient: HomologyQuotient = HomologyQuotient.H1F

    def to_text(self) -> str:
        if not self.entries:
            return "id"
        return " * ".join(entry.to_text() for entry in self.entries)

    def to_dict(self) -> dict[str, Any]:
        entries: list[dict[str, Any]] = []
        for entry in self.entries:
            if isinstance(entry, HalfTwistEntry):
                entries.append(
                    {
                        "type": "half_twist",
                        "conjugator": entry.conjugator.to_text(),
                        "symbol": symbol_text(entry.arc),
                        "sign": entry.sign,
                    }
                )
            else:
                record: dict[str, Any] = {
                    "type": "dehn",
                    "conjugator": "id",
                    "symbol": symbol_text(entry.curve),
                    "sign": entry.sign,
                }
                if entry.witness is not None:
                    record["witness"] = list(entry.witness)
                entries.append(record)
        return {"level": self.level.value, "quotient": self.quotient.value, "entries": entries}


@dataclass(frozen=True)
class LevelViolation:
    """A letter (or the surface, position None) that breaks a level's conditions."""

    level: QPLevel
    position: Optional[int]
    message: str
    letter: Optional[Generator] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "level": self.level.value,
            "position": self.position,
            "letter": self.letter.to_text() if self.letter else None,
            "message": self.message,
        }


@dataclass
class ClassificationResult:
    """Syntactic verdicts for one word."""

    qp: bool
    sqp: bool
    stein: bool
    quotient: HomologyQuotient
    certificates: dict[QPLevel, QPCertificate] = field(default_factory=dict)
    violations: list[LevelViolation] = field(default_factory=list)
    grade: Optional[VerificationGrade] = None

    def holds(self, level: QPLevel) -> bool:
        return {QPLevel.QP: self.qp, QPLevel.SQP: self.sqp, QPLevel.STEIN: self.stein}[level]

    @property
    def preferred_certificate(self) -> Optional[QPCertificate]:
        for level in LEVEL_PREFERENCE:
            if level in self.certificates:
                return self.certificates[level]
        return None

    def to_dict(self) -> dict[str, Any]:
        certificate = self.preferred_certificate
        return {
            "qp": self.qp,
            "sqp": self.sqp,
            "stein": self.stein,
            "quotient": self.quotient.value,
            "certificate": certificate.to_dict() if certificate else None,
            "grade": self.grade.value if self.grade else None,
            "violations": [v.to_dict() for v in self.violations],
        }


@dataclass
class VerificationResult:
    """Outcome of checking a certificate against a word."""

    valid: bool
    grade: Optional[VerificationGrade] = None
    reason: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "valid": self.valid,
            "grade": self.grade.value if self.grade else None,
            "reason": self.reason,
        }


@dataclass
class NormalizationResult:
    """Outcome of the bounded search for a quasipositive form."""

    certificate: Optional[QPCertificate]
    path: list[str] = field(default_factory=list)
    grade: Optional[VerificationGrade] = None
    states_explored: int = 0
    exhausted: bool = False

    @property
    def found(self) -> bool:
        return self.certificate is not None

    def to_dict(self) -> dict[str, Any]:
        return {
            "found": self.found,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "grade": self.grade.value if self.grade else None,
            "path": list(self.path),
            "depth": len(self.path),
            "states_explored": self.states_explored,
            "exhausted": self.exhausted,
        }
