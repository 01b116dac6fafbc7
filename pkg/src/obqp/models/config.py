"""Run configuration for obqp commands."""

from dataclasses import dataclass
from typing import Any

from obqp.constants import (
    DEFAULT_MAX_FOLD_WIDTH,
    DEFAULT_NORMALIZE_BUDGET,
    DEFAULT_NORMALIZE_MAX_STATES,
    PUSH_POSITIVE_COPY,
    PUSH_PUNCTURE_SIGN,
    QUOTIENT_H1F,
)
from obqp.models.surface import HomologyQuotient
from obqp.models.word import PushConvention


@dataclass(frozen=True)
class ObqpConfig:
    """Settings shared by every command; values come from ``obqp.yml`` or defaults."""

    quotient: HomologyQuotient = HomologyQuotient.H1F
    positive_copy: str = PUSH_POSITIVE_COPY
    puncture_sign: int = PUSH_PUNCTURE_SIGN
    budget: int = DEFAULT_NORMALIZE_BUDGET
    max_states: int = DEFAULT_NORMALIZE_MAX_STATES
    max_fold_width: int = DEFAULT_MAX_FOLD_WIDTH
    indent: int = 2
    seed: int = 0

    @property
    def convention(self) -> PushConvention:
        return PushConvention(self.positive_copy, self.puncture_sign)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ObqpConfig":
        push = data.get("point_push") or {}
        normalize = data.get("normalize") or {}
        output = data.get("output") or {}
        # raises ValueError on a bad copy side or sign, before any command runs
        convention = PushConvention(
            push.get("positive_copy", PUSH_POSITIVE_COPY),
            int(push.get("puncture_sign", PUSH_PUNCTURE_SIGN)),
        )
        return cls(
            quotient=HomologyQuotient(data.get("quotient", QUOTIENT_H1F)),
            positive_copy=convention.positive_copy,
            puncture_sign=convention.puncture_sign,
            budget=int(normalize.get("budget", DEFAULT_NORMALIZE_BUDGET)),
            max_states=int(normalize.get("max_states", DEFAULT_NORMALIZE_MAX_STATES)),
            max_fold_width=int(normalize.get("max_fold_width", DEFAULT_MAX_FOLD_WIDTH)),
            indent=int(output.get("indent", 2)),
            seed=int(data.get("seed", 0)),
        )

    @classmethod
    def default(cls) -> "ObqpConfig":
        return cls()

    def to_dict(self) -> dict[str, Any]:
        return {
            "quotient": self.quotient.value,
            "point_push": {
                "positive_copy": self.positive_copy,
                "puncture_sign": self.puncture_sign,
            },
            "normalize": {
                "budget": self.budget,
                "max_states": self.max_states,
                "max_fold_width": self.max_fold_width,
            },
            "output": {"indent": self.indent},
            "seed": self.seed,
        }
