"""Two-row arrays pairing a long cycle with an arbitrary permutation.

A pair (s, pi) is displayed with the word of s on top and pi(s_i) below;
the diagonal D reads the array cyclically, D(pi(s_{i-1})) = s_i, and always
equals the product s∘pi⁻¹.  The word of s is normalized to start at 1, and
that word induces the linear order used by every exceedance comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .permutations import Permutation, compose

__all__ = ["PlanePermutation", "ExceedanceStats", "count_exceedances"]


# ---------------------------------------------------------------------------
# tuple-level helpers, shared by the class and the exhaustive sweeps


def _positions(word: tuple[int, ...]) -> list[int]:
    """pos[x] = index of x in the word (pos[0] unused)."""
    pos = [0] * (len(word) + 1)
    for idx, x in enumerate(word):
        pos[x] = idx
    return pos


def count_exceedances(word: tuple[int, ...], pi_image: tuple[int, ...]) -> int:
    """Number of elements x with x strictly before pi(x) in the word order."""
    pos = _positions(word)
    return sum(1 for x in range(1, len(word) + 1) if pos[pi_image[x - 1]] > pos[x])


def _classify(word: tuple[int, ...], pi_image: tuple[int, ...]):
    """(exceedances, anti-exceedances, trivial anti-exceedances) as sets.

    Each cycle of pi contributes one trivial anti-exceedance: the preimage of
    its word-order minimum.
    """
    n = len(word)
    pos = _positions(word)
    exc, anti = set(), set()
    for x in range(1, n + 1):
        if pos[pi_image[x - 1]] > pos[x]:
            exc.add(x)
        else:
            anti.add(x)
    trivial = set()
    seen = [False] * (n + 1)
    for start in range(1, n + 1):
        if seen[start]:
            continue
        best = start
        x = start
        while not seen[x]:
            seen[x] = True
            if pos[x] < pos[best]:
                best = x
            x = pi_image[x - 1]
        # predecessor of the minimum inside its own cycle
        y = best
        while pi_image[y - 1] != best:
            y = pi_image[y - 1]
        trivial.add(y)
    return exc, anti, trivial


def _diagonal_from_pairs(word: tuple[int, ...], pi_image: tuple[int, ...]) -> tuple[int, ...]:
    """Image of the diagonal read column-by-column: bottom of one column maps
    to the top of the next, cyclically."""
    n = len(word)
    img = [0] * n
    for idx in range(n):
        img[pi_image[word[idx] - 1] - 1] = word[(idx + 1) % n]
    return tuple(img)


def _transpose(word: tuple[int, ...], pi_image: tuple[int, ...], i: int, j: int, k: int):
    """Swap the diagonal blocks under segments word[i..j] and word[j+1..k]."""
    new_word = word[:i] + word[j + 1 : k + 1] + word[i : j + 1] + word[k + 1 :]
    img = list(pi_image)
    a, b, c = word[i - 1], word[j], word[k]
    img[a - 1], img[b - 1], img[c - 1] = pi_image[b - 1], pi_image[c - 1], pi_image[a - 1]
    return new_word, tuple(img)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExceedanceStats:
    exceedances: frozenset[int]
    anti_exceedances: frozenset[int]
    trivial_anti_exceedances: frozenset[int]
    ntaes: frozenset[int]


@dataclass(frozen=True)
class PlanePermutation:
    """A long cycle s (stored as its word, rotated to start at 1) together
    with an arbitrary permutation pi on the same ground set."""

    s: tuple[int, ...]
    pi: Permutation

    def __post_init__(self) -> None:
        word = tuple(self.s)
        n = len(word)
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"not a cycle word of 1..{n}: {word!r}")
        if self.pi.n != n:
            raise ValueError(f"size mismatch: word of {n} vs permutation of {self.pi.n}")
        pivot = word.index(1)
        object.__setattr__(self, "s", word[pivot:] + word[:pivot])

    @property
    def n(self) -> int:
        return len(self.s)

    def s_perm(self) -> Permutation:
        return Permutation.from_cycle_word(self.s)

    def diagonal(self) -> Permutation:
        """The product s∘pi⁻¹."""
        return compose(self.s_perm(), self.pi.inverse())

    def diagonal_from_pairs(self) -> Permutation:
        """The diagonal read directly off the two-row array; must coincide
        with diagonal()."""
        return Permutation(_diagonal_from_pairs(self.s, self.pi.image))

    def exceedance_stats(self) -> ExceedanceStats:
        exc, anti, trivial = _classify(self.s, self.pi.image)
        return ExceedanceStats(
            exceedances=frozenset(exc),
            anti_exceedances=frozenset(anti),
            trivial_anti_exceedances=frozenset(trivial),
            ntaes=frozenset(anti - trivial),
        )

    def exceedance_count(self) -> int:
        return count_exceedances(self.s, self.pi.image)

    def ntae_count(self) -> int:
        """Always equals n - (number of cycles of pi) - exceedance_count()."""
        return self.n - self.pi.cycle_count - self.exceedance_count()

    def transpose_blocks(self, h: tuple[int, int, int]) -> "PlanePermutation":
        """Transpose the adjacent diagonal blocks under word segments
        [s_i..s_j] and [s_{j+1}..s_k]; requires 1 <= i <= j < k <= n-1.

        The result keeps the same diagonal; its vertical differs from pi only
        at the images of s_{i-1}, s_j and s_k.
        """
        i, j, k = h
        if not (1 <= i <= j < k <= self.n - 1):
            raise IndexError(f"positions {h} out of range for n={self.n}")
        word, img = _transpose(self.s, self.pi.image, i, j, k)
        return PlanePermutation(word, Permutation(img))

    def reflect(self) -> "PlanePermutation":
        """The pair (s⁻¹, D⁻¹): word reversed (re-anchored at 1) with the
        inverted diagonal as the new vertical."""
        word = (self.s[0],) + tuple(reversed(self.s[1:]))
        return PlanePermutation(word, self.diagonal().inverse())

    # -- serialization ------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"s": list(self.s), "pi": list(self.pi.image)})

    @classmethod
    def from_json(cls, text: str) -> "PlanePermutation":
        doc = json.loads(text)
        return cls(tuple(doc["s"]), Permutation(tuple(doc["pi"])))

    def to_text(self) -> str:
        bottom = [self.pi.image[x - 1] for x in self.s]
        width = max(len(str(x)) for x in self.s)
        top_row = " ".join(str(x).rjust(width) for x in self.s)
        bot_row = " ".join(str(x).rjust(width) for x in bottom)
        return top_row + "\n" + bot_row

    @classmethod
    def from_text(cls, text: str) -> "PlanePermutation":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 2:
            raise ValueError("expected two rows")
        top = [int(tok) for tok in lines[0].split()]
        bottom = [int(tok) for tok in lines[1].split()]
        if len(top) != len(bottom):
            raise ValueError("rows have different lengths")
        img = [0] * len(top)
        for x, y in zip(top, bottom):
            img[x - 1] = y
        return cls(tuple(top), Permutation(tuple(img)))

    def __str__(self) -> str:
        return self.to_text()
