"""Artin action of the braid group on a free group, and braid equality through it."""

import logging
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from obqp.braids.braid_word import BraidWord, permutation_cycles
from obqp.exceptions import BandIndexError, StrandMismatchError

logger = logging.getLogger(__name__)

# x_k is k, its inverse is -k
FreeWord = tuple[int, ...]


def reduce_free(word: Sequence[int]) -> FreeWord:
    stack: list[int] = []
    for x in word:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def invert_free(word: Sequence[int]) -> FreeWord:
    return tuple(-x for x in reversed(word))


def free_word_text(word: Sequence[int]) -> str:
    if not word:
        return "1"
    return " ".join(f"x{abs(x)}" + ("" if x > 0 else "^-1") for x in word)


@dataclass(frozen=True)
class FreeGroupEndo:
    """Endomorphism of F_n given by the reduced images of x_1 .. x_n."""

    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, rank: int) -> "FreeGroupEndo":
        return cls(tuple((k,) for k in range(1, rank + 1)))

    @property
    def rank(self) -> int:
        return len(self.images)

    def apply(self, word: Sequence[int]) -> FreeWord:
        result: list[int] = []
        for x in word:
            image = self.images[abs(x) - 1]
            result.extend(image if x > 0 else invert_free(image))
        return reduce_free(result)

    def compose(self, inner: "FreeGroupEndo") -> "FreeGroupEndo":
        """self o inner."""
        return FreeGroupEndo(tuple(self.apply(image) for image in inner.images))

    def abelianization(self) -> np.ndarray:
        """Exponent-sum matrix; column k is the abelianized image of x_(k+1)."""
        matrix = np.zeros((self.rank, self.rank), dtype=np.int64)
        for k, image in enumerate(self.images):
            for x in image:
                matrix[abs(x) - 1, k] += 1 if x > 0 else -1
        return matrix

    def to_dict(self) -> dict[str, Any]:
        return {f"x{k + 1}": free_word_text(image) for k, image in enumerate(self.images)}


def letter_endo(letter: int, rank: int) -> FreeGroupEndo:
    """sigma_i: x_i -> x_i x_(i+1) x_i^-1, x_(i+1) -> x_i; the inverse letter undoes it."""
    i = abs(letter)
    images = [(k,) for k in range(1, rank + 1)]
    if letter > 0:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    else:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    return FreeGroupEndo(tuple(images))


def artin_action(braid: BraidWord) -> FreeGroupEndo:
    """Composite of the letter actions, rightmost letter applied first."""
    endo = FreeGroupEndo.identity(braid.strand_count)
    for letter in reversed(braid.letters):
        endo = letter_endo(letter, braid.strand_count).compose(endo)
    return endo


def braid_equal(first: BraidWord, second: BraidWord) -> bool:
    """Exact equality in B_n, by faithfulness of the Artin action."""
    if first.strand_count != second.strand_count:
        raise StrandMismatchError(
            f"Cannot compare braids on {first.strand_count} and {second.strand_count} strands"
        )
    return artin_action(first) == artin_action(second)


def band_generator(i: int, j: int, strand_count: int) -> BraidWord:
    """Positive band a_(i,j) = (s_(j-1) .. s_(i+1)) s_i (s_(j-1) .. s_(i+1))^-1."""
    if not 1 <= i < j <= strand_count:
        raise BandIndexError(f"Band indices need 1 <= i < j <= {strand_count}, got ({i}, {j})")
    outer = tuple(range(j - 1, i, -1))
    return BraidWord(strand_count, outer + (i,) + tuple(-x for x in reversed(outer)))


def full_twist(i: int, j: int) -> tuple[int, ...]:
    """Letters of (s_i .. s_(j-1))^(j-i+1), the twist about strands i..j."""
    if j <= i:
        return ()
    return tuple(range(i, j)) * (j - i + 1)


@dataclass(frozen=True)
class BraidInvariants:
    """Writhe, permutation, closure components and transverse self-linking."""

    writhe: int
    permutation: tuple[int, ...]
    component_count: int
    self_linking: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "writhe": self.writhe,
            "permutation": list(self.permutation),
            "components": self.component_count,
            "sl": self.self_linking,
        }


def braid_invariants(braid: BraidWord) -> BraidInvariants:
    perm = braid.permutation()
    writhe = braid.writhe()
    return BraidInvariants(
        writhe=writhe,
        permutation=perm,
        component_count=len(permutation_cycles(perm)),
        self_linking=writhe - braid.strand_count,
    )
