"""Operations behind the CLI subcommands and document directives.

Each operation takes a pointed open book with its declaration scope and
returns a JSON-ready payload; ``failed`` marks a negative verdict that the
caller should turn into exit code 2.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from obqp.bennequin import bennequin_report
from obqp.braids.artin import braid_invariants
from obqp.braids.compiler import compile_word
from obqp.calculus.homology import act_on_homology
from obqp.calculus.rewriting import expand_point_pushes, push_copy_symbols
from obqp.exceptions import CertificateError, DiskCompileError, SessionError
from obqp.models.certificate import QPLevel
from obqp.models.config import ObqpConfig
from obqp.models.open_book import HopfCurveSpec, PointedOpenBook
from obqp.models.surface import HandleVariant, HomologyQuotient
from obqp.models.word import MonodromyWord
from obqp.moves.hopf import stabilize_hopf
from obqp.moves.markov import destabilize, stabilize
from obqp.moves.script import apply_records, load_move_records, replay_summary
from obqp.parsers.session import Directive, Scope, Session, document_for_pob
from obqp.quasipositivity.certificates import (
    grade_classification,
    load_certificate,
    verify_certificate,
)
from obqp.quasipositivity.engine import QPClassifier
from obqp.quasipositivity.normalizer import QPNormalizer
from obqp.surface.lattice import subcritical_rank

logger = logging.getLogger(__name__)


@dataclass
class CommandOutcome:
    payload: dict[str, Any]
    failed: bool = False


@dataclass
class Target:
    """A pointed open book together with the names in scope around it."""

    name: str
    pob: PointedOpenBook
    scope: Scope
    words: dict[str, MonodromyWord] = field(default_factory=dict)

    @classmethod
    def from_session(cls, session: Session, name: Optional[str] = None) -> "Target":
        pob = session.pob(name)
        target = name or session.last_target or ""
        return cls(target, pob, session.scope_of(pob.surface), _words_on(session, pob))

    @classmethod
    def from_directive(cls, session: Session, directive: Directive) -> "Target":
        pob = directive.pob
        return cls(directive.target, pob, directive.scope, _words_on(session, pob))


def _words_on(session: Session, pob: PointedOpenBook) -> dict[str, MonodromyWord]:
    return {name: word for name, word in session.words.items() if word.surface == pob.surface}


def _header(target: Target) -> dict[str, Any]:
    return {"target": target.name, "word": target.pob.word.to_text()}


def classify_command(
    target: Target,
    config: ObqpConfig,
    quotient: Optional[HomologyQuotient] = None,
    expect: Optional[QPLevel] = None,
) -> CommandOutcome:
    classifier = QPClassifier(quotient or config.quotient, config.convention)
    result = grade_classification(target.pob, classifier.classify(target.pob), config.convention)
    payload = {**_header(target), **result.to_dict()}
    failed = expect is not None and not result.holds(expect)
    if expect is not None:
        payload["expect"] = expect.value
    return CommandOutcome(payload, failed)


def verify_command(target: Target, config: ObqpConfig, certificate_text: str) -> CommandOutcome:
    """Check a JSON certificate; unreadable or foreign certificates count as rejected."""
    try:
        surface = target.pob.surface
        symbols = {
            **push_copy_symbols(surface, target.scope.symbols, config.convention),
            **target.scope.symbols,
        }
        cert = load_certificate(certificate_text, surface, symbols, target.words)
        verdict = verify_certificate(target.pob, cert, config.convention)
    except CertificateError as e:
        logger.debug(f"Certificate rejected: {e}")
        payload = {**_header(target), "valid": False, "grade": None, "reason": str(e)}
        return CommandOutcome(payload, True)
    return CommandOutcome({**_header(target), **verdict.to_dict()}, not verdict.valid)


def normalize_command(
    target: Target,
    config: ObqpConfig,
    budget: Optional[int] = None,
    level: QPLevel = QPLevel.QP,
) -> CommandOutcome:
    normalizer = QPNormalizer(
        level=level,
        quotient=config.quotient,
        convention=config.convention,
        max_states=config.max_states,
        max_fold_width=config.max_fold_width,
        disjoint_pairs=target.scope.disjoint_pairs,
        seed=config.seed,
    )
    budget = config.budget if budget is None else budget
    result = normalizer.normalize(target.pob, budget)
    payload = {**_header(target), "level": level.value, "budget": budget, **result.to_dict()}
    return CommandOutcome(payload)


def compile_command(target: Target, config: ObqpConfig) -> CommandOutcome:
    braid = compile_word(target.pob.word, config.convention)
    payload = {
        **_header(target),
        "strands": braid.strand_count,
        "braid": braid.to_text(),
        "letters": list(braid.letters),
        **braid_invariants(braid).to_dict(),
    }
    return CommandOutcome(payload)


def invariants_command(target: Target, config: ObqpConfig) -> CommandOutcome:
    pob = target.pob
    surface = pob.surface
    expanded = expand_point_pushes(pob.word, config.convention)
    payload: dict[str, Any] = {
        **_header(target),
        "surface": surface.describe(),
        "basis": list(surface.basis_labels()),
        "subcritical_rank": subcritical_rank(surface),
        "length": len(pob.word),
        "expanded_length": len(expanded),
        "action": act_on_homology(pob.word, config.convention).to_dict(),
        "braid": None,
    }
    if surface.is_disk and surface.n > 0:
        try:
            braid = compile_word(pob.word, config.convention)
            payload["braid"] = braid_invariants(braid).to_dict()
        except DiskCompileError as e:
            logger.debug(f"No braid invariants: {e}")
    return CommandOutcome(payload)


def _moved(target: Target, result: PointedOpenBook) -> dict[str, Any]:
    return {
        "target": target.name,
        "before": target.pob.word.to_text(),
        "word": result.word.to_text(),
        "n": result.surface.n,
        "surface": result.surface.describe(),
        "document": document_for_pob(result),
    }


def stabilize_command(target: Target, config: ObqpConfig, sign: int = 1) -> CommandOutcome:
    stab = stabilize(target.pob, sign)
    return CommandOutcome({**_moved(target, stab.result), "arc": stab.arc.id, "sign": sign})


def destabilize_command(target: Target, config: ObqpConfig) -> CommandOutcome:
    destab = destabilize(target.pob)
    payload = {
        **_moved(target, destab.result),
        "removed": destab.letter.to_text(),
        "position": "leading" if destab.leading else "trailing",
    }
    return CommandOutcome(payload)


def hopf_command(
    target: Target, config: ObqpConfig, variant: HandleVariant, spec: HopfCurveSpec
) -> CommandOutcome:
    before = target.pob.surface
    hopf = stabilize_hopf(target.pob, variant, spec)
    after = hopf.result.surface
    payload = {
        **_moved(target, hopf.result),
        "variant": variant.value,
        "curve": hopf.curve.id,
        "class": list(hopf.curve.h1_class.coords),
        "subcritical_rank": [subcritical_rank(before), subcritical_rank(after)],
        "page_euler_characteristic": [before.euler_characteristic, after.euler_characteristic],
    }
    return CommandOutcome(payload)


def bennequin_command(target: Target, config: ObqpConfig) -> CommandOutcome:
    report = bennequin_report(target.pob, config.convention)
    return CommandOutcome({**_header(target), **report.to_dict()})


def script_command(target: Target, config: ObqpConfig, script_text: str) -> CommandOutcome:
    records = load_move_records(script_text)
    _, outcome = apply_records(target.pob, records, target.scope.symbols, target.words)
    payload = {
        **_header(target),
        **replay_summary(outcome),
        "document": document_for_pob(outcome.end),
    }
    return CommandOutcome(payload)


def _option_int(directive: Directive, key: str, default: Optional[int] = None) -> Optional[int]:
    value = directive.option(key)
    if value is None:
        return default
    if not isinstance(value, int) or isinstance(value, bool):
        raise SessionError(f"{key}= takes an integer", directive.statement.line)
    return value


def _option_int_or(directive: Directive, key: str, default: int) -> int:
    value = _option_int(directive, key)
    # 0 is a real value here; stabilize and hopf_curve reject it
    return default if value is None else value


def _option_text(directive: Directive, key: str) -> Optional[str]:
    value = directive.option(key)
    if value is not None and not isinstance(value, str):
        raise SessionError(f"{key}= takes a name", directive.statement.line)
    return value


def _hopf_spec(directive: Directive) -> HopfCurveSpec:
    curve_id = _option_text(directive, "curve") or ""
    coords = directive.option("class")
    if not isinstance(coords, tuple) or not all(isinstance(x, int) for x in coords):
        raise SessionError("class= takes a list of integers", directive.statement.line)
    collar = directive.option("collar_avoiding", True)
    return HopfCurveSpec(
        curve_id,
        tuple(int(x) for x in coords),  # type: ignore[arg-type]
        _option_int_or(directive, "handle", 1),
        bool(collar),
    )


def run_directive(
    session: Session,
    directive: Directive,
    config: ObqpConfig,
    base_dir: Optional[Path] = None,
) -> CommandOutcome:
    """Execute one directive of a document."""
    target = Target.from_directive(session, directive)
    name = directive.name
    logger.debug(f"Running {name} on {target.name} (line {directive.statement.line})")

    if name == "classify":
        quotient = _option_text(directive, "quotient")
        expect = _option_text(directive, "expect")
        return classify_command(
            target,
            config,
            HomologyQuotient(quotient) if quotient else None,
            QPLevel(expect) if expect else None,
        )
    if name == "verify":
        path = Path(_option_text(directive, "cert") or "")
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        return verify_command(target, config, path.read_text(encoding="utf-8"))
    if name == "normalize":
        level = _option_text(directive, "level")
        return normalize_command(
            target, config, _option_int(directive, "budget"), QPLevel(level or QPLevel.QP.value)
        )
    if name == "stabilize":
        return stabilize_command(target, config, _option_int_or(directive, "sign", 1))
    if name == "destabilize":
        return destabilize_command(target, config)
    if name == "hopf":
        variant = HandleVariant.parse(_option_text(directive, "variant") or "")
        return hopf_command(target, config, variant, _hopf_spec(directive))
    if name == "bennequin":
        return bennequin_command(target, config)
    if name == "compile":
        return compile_command(target, config)
    return invariants_command(target, config)


def run_session(
    session: Session, config: ObqpConfig, base_dir: Optional[Path] = None
) -> CommandOutcome:
    """Execute every directive in order; the run fails if any directive does."""
    results: list[dict[str, Any]] = []
    failed = False
    for directive in session.directives:
        outcome = run_directive(session, directive, config, base_dir)
        results.append(
            {"directive": directive.name, "line": directive.statement.line, **outcome.payload}
        )
        failed = failed or outcome.failed
    logger.info(f"Ran {len(results)} directive(s)")
    return CommandOutcome({"results": results, "failed": failed}, failed)
