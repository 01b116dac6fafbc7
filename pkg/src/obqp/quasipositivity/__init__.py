"""Quasipositivity levels, certificates and the bounded normalizer."""

from obqp.calculus.homology import homologically_nontrivial
from obqp.quasipositivity.base import BaseLevelRule
from obqp.quasipositivity.builtin import (
    QuasipositiveRule,
    SteinQuasipositiveRule,
    StronglyQuasipositiveRule,
)
from obqp.quasipositivity.certificates import (
    assemble,
    conjugate_certificate,
    dump_certificate,
    grade_classification,
    load_certificate,
    verify_certificate,
)
from obqp.quasipositivity.engine import LEVEL_REGISTRY, QPClassifier, build_certificate, classify
from obqp.quasipositivity.normalizer import QPNormalizer, normalize_to_qp

__all__ = [
    "BaseLevelRule",
    "LEVEL_REGISTRY",
    "QPClassifier",
    "QPNormalizer",
    "QuasipositiveRule",
    "SteinQuasipositiveRule",
    "StronglyQuasipositiveRule",
    "assemble",
    "build_certificate",
    "classify",
    "conjugate_certificate",
    "dump_certificate",
    "grade_classification",
    "homologically_nontrivial",
    "load_certificate",
    "normalize_to_qp",
    "verify_certificate",
]
