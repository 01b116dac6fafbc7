"""Data models for obqp."""

from obqp.models.bennequin import (
    Band,
    BennequinReport,
    BennequinSurfaceData,
    BoundaryGenus,
    SingularityCounts,
)
from obqp.models.certificate import (
    LEVEL_PREFERENCE,
    CertificateEntry,
    ClassificationResult,
    DehnEntry,
    HalfTwistEntry,
    LevelViolation,
    NormalizationResult,
    QPCertificate,
    QPLevel,
    VerificationGrade,
    VerificationResult,
)
from obqp.models.config import ObqpConfig
from obqp.models.open_book import (
    HopfCurveSpec,
    Move,
    MoveKind,
    MoveScript,
    PointedOpenBook,
    ReplayResult,
    ReplayStep,
)
from obqp.models.surface import (
    ArcSymbol,
    CurveSymbol,
    DiskPlacement,
    HandleVariant,
    HomologyClass,
    HomologyQuotient,
    IntMatrix,
    MarkedPoint,
    MarkedSurface,
)
from obqp.models.word import (
    Generator,
    GeneratorKind,
    ImageSymbol,
    MonodromyWord,
    PushConvention,
    Symbol,
    symbol_text,
)

__all__ = [
    "LEVEL_PREFERENCE",
    "ArcSymbol",
    "Band",
    "BennequinReport",
    "BennequinSurfaceData",
    "BoundaryGenus",
    "CertificateEntry",
    "ClassificationResult",
    "CurveSymbol",
    "DehnEntry",
    "DiskPlacement",
    "Generator",
    "GeneratorKind",
    "HalfTwistEntry",
    "HandleVariant",
    "HomologyClass",
    "HomologyQuotient",
    "HopfCurveSpec",
    "ImageSymbol",
    "IntMatrix",
    "LevelViolation",
    "MarkedPoint",
    "MarkedSurface",
    "MonodromyWord",
    "Move",
    "MoveKind",
    "MoveScript",
    "NormalizationResult",
    "ObqpConfig",
    "PointedOpenBook",
    "PushConvention",
    "QPCertificate",
    "QPLevel",
    "ReplayResult",
    "ReplayStep",
    "SingularityCounts",
    "Symbol",
    "VerificationGrade",
    "VerificationResult",
    "symbol_text",
]
