"""Braid words on n strands as signed sigma indices."""

import re
from dataclasses import dataclass
from typing import Sequence

from obqp.exceptions import BraidError

_SIGMA_RE = re.compile(r"^s(\d+)(\^-1)?$")


def sigma_permutation(letters: Sequence[int], strand_count: int) -> tuple[int, ...]:
    """Zero-based strand permutation of a sigma word, rightmost letter applied first."""
    perm = list(range(strand_count))
    for letter in reversed(letters):
        i = abs(letter) - 1
        perm = [i + 1 if p == i else i if p == i + 1 else p for p in perm]
    return tuple(perm)


def permutation_cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    cycles: list[tuple[int, ...]] = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cycle = []
        k = start
        while k not in seen:
            seen.add(k)
            cycle.append(k)
            k = perm[k]
        cycles.append(tuple(cycle))
    return cycles


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators of B_n; letter i means sigma_i, -i its inverse."""

    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strand_count < 1:
            raise BraidError(f"Braid needs at least one strand, got {self.strand_count}")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strand_count - 1:
                raise BraidError(
                    f"Generator index {letter} out of range for {self.strand_count} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strand_count != self.strand_count:
            raise BraidError(
                f"Cannot multiply braids on {self.strand_count} and {other.strand_count} strands"
            )
        return BraidWord(self.strand_count, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, tuple(-x for x in reversed(self.letters)))

    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def permutation(self) -> tuple[int, ...]:
        return sigma_permutation(self.letters, self.strand_count)

    def stabilized(self, sign: int = 1) -> "BraidWord":
        """Markov stabilization: append sigma_n^sign on n + 1 strands."""
        n = self.strand_count
        return BraidWord(n + 1, self.letters + (sign * n,))

    def to_text(self) -> str:
        if not self.letters:
            return "id"
        return "*".join(f"s{abs(x)}" + ("" if x > 0 else "^-1") for x in self.letters)

    @classmethod
    def parse(cls, text: str, strand_count: int) -> "BraidWord":
        """Parse ``s1*s2^-1`` style text; ``id`` is the empty braid."""
        text = text.strip()
        if text in ("", "id"):
            return cls(strand_count)
        letters = []
        for token in text.split("*"):
            match = _SIGMA_RE.match(token.strip())
            if not match:
                raise BraidError(f"Invalid braid letter: {token.strip()!r}")
            index = int(match.group(1))
            letters.append(-index if match.group(2) else index)
        return cls(strand_count, tuple(letters))
