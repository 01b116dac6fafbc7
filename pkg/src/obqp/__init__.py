"""obqp: word calculus for pointed open books, quasipositivity and Bennequin surfaces."""

__version__ = "0.1.0"

from obqp.bennequin import bennequin_report
from obqp.config import load_config
from obqp.exceptions import (
    CertificateError,
    ConfigLoadError,
    DocumentError,
    MoveError,
    ObqpError,
    SurfaceError,
    WordError,
)
from obqp.models import MarkedSurface, MonodromyWord, PointedOpenBook, QPLevel
from obqp.parsers import build_session, document_for_pob, parse, serialize
from obqp.quasipositivity import LEVEL_REGISTRY, QPClassifier, classify, verify_certificate
from obqp.reporters import get_reporter
from obqp.surface.lattice import build_surface

__all__ = [
    "__version__",
    "CertificateError",
    "ConfigLoadError",
    "DocumentError",
    "LEVEL_REGISTRY",
    "MarkedSurface",
    "MonodromyWord",
    "MoveError",
    "ObqpError",
    "PointedOpenBook",
    "QPClassifier",
    "QPLevel",
    "SurfaceError",
    "WordError",
    "bennequin_report",
    "build_session",
    "build_surface",
    "classify",
    "document_for_pob",
    "get_reporter",
    "load_config",
    "parse",
    "serialize",
    "verify_certificate",
]
