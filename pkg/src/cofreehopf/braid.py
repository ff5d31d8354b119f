"""Permutations, reduced words and braiding operators on tensor words.

Conventions, fixed once and pinned down by tests:

* A permutation is stored in one-line notation, 1-based: ``images[k-1]``
  is where position k is sent.
* Composition ``v * w`` applies w first, then v.
* A permutation acts on tensor positions: the letter at position k of a
  word moves to position w(k).
* ``reduced_word(w)`` returns generator indices ``(i_1, ..., i_l)`` with
  ``w = s_{i_1} ∘ ... ∘ s_{i_l}`` and l equal to the inversion count.
* The braid lift of ``w`` applies the braiding at adjacent positions
  following a reduced word, rightmost generator first; for braidings
  satisfying the Yang-Baxter equation the result is independent of the
  reduced word chosen, and for the flip braiding it reproduces the
  position action.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from . import linalg
from .checks import PASS, CheckResult, fail
from .elements import Element, apply_local
from .errors import StructuralError
from .scalars import Scalar


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise StructuralError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition applying ``other`` first."""
        if self.size != other.size:
            raise StructuralError("permutation size mismatch")
        return Permutation(tuple(self(other(k)) for k in range(1, self.size + 1)))

    def inverse(self) -> Permutation:
        images = [0] * self.size
        for k, v in enumerate(self.images, start=1):
            images[v - 1] = k
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def inversions(self) -> int:
        return sum(
            1
            for a in range(self.size)
            for b in range(a + 1, self.size)
            if self.images[a] > self.images[b]
        )

    def act_on_word(self, word: tuple) -> tuple:
        """Move the letter at position k to position images[k-1]."""
        if len(word) != self.size:
            raise StructuralError("word length does not match permutation size")
        out = [None] * self.size
        for k, letter in enumerate(word):
            out[self.images[k] - 1] = letter
        return tuple(out)


def identity_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def transposition(n: int, i: int) -> Permutation:
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """One reduced word for w, built by stripping descents from the right."""
    images = list(w.images)
    strip: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                strip.append(i + 1)
                changed = True
                break
    return tuple(reversed(strip))


@lru_cache(maxsize=None)
def all_reduced_words(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """Every reduced word of w (w of moderate size: factorial growth)."""
    if w.is_identity():
        return ((),)
    n = w.size
    words: list[tuple[int, ...]] = []
    for i in range(1, n):
        if w(i) > w(i + 1):
            shorter = w * transposition(n, i)
            words.extend(prefix + (i,) for prefix in all_reduced_words(shorter))
    return tuple(words)


def block_rotation(i: int, j: int) -> Permutation:
    """The permutation sending positions 1..i to j+1..j+i and i+1..i+j to 1..j."""
    if i < 0 or j < 0 or i + j < 1:
        raise StructuralError("block sizes must be nonnegative with i + j >= 1")
    return Permutation(tuple(range(j + 1, j + i + 1)) + tuple(range(1, j + 1)))


class BraidingTable:
    """A linear operator on V tensor V given on basis letter pairs.

    Entries map each ordered pair (a, b) of letters to an Element over
    two-letter words.  Construction verifies totality and, for ambient
    dimension at most ``invertibility_cap``, invertibility by exact
    elimination over the fraction field; larger tables skip the
    elimination (documented cap, default 64 for V tensor V).
    """

    __slots__ = ("dim", "entries", "alphabet")

    def __init__(self, dim: int, entries: Mapping[tuple[int, int], Element],
                 alphabet=None, invertibility_cap: int = 64):
        self.dim = dim
        self.entries = dict(entries)
        self.alphabet = alphabet
        for a in range(dim):
            for b in range(dim):
                entry = self.entries.get((a, b))
                if entry is None:
                    raise StructuralError(f"braiding table missing entry for {(a, b)}")
                for word in entry.support():
                    if len(word) != 2 or not all(
                            isinstance(l, int) and 0 <= l < dim for l in word):
                        raise StructuralError(
                            f"braiding entry for {(a, b)} has an invalid word {word}")
        if dim * dim <= invertibility_cap and not self._invertible():
            raise StructuralError("braiding table is not invertible on V tensor V")

    def _invertible(self) -> bool:
        pairs = [(a, b) for a in range(self.dim) for b in range(self.dim)]
        index = {p: i for i, p in enumerate(pairs)}
        size = len(pairs)
        zero = Scalar.zero()
        matrix = [[zero] * size for _ in range(size)]
        for col, pair in enumerate(pairs):
            for word, coeff in self.entries[pair]._terms.items():
                matrix[index[word]][col] = coeff
        return linalg.is_invertible(matrix)

    def apply(self, x: Element, pos: int = 1) -> Element:
        return apply_local(self.entries, pos, x)

    def basis_words(self, length: int):
        """All basis words of the given tensor power, in index order."""
        def rec(prefix: tuple, k: int):
            if k == 0:
                yield prefix
                return
            for a in range(self.dim):
                yield from rec(prefix + (a,), k - 1)
        yield from rec((), length)


def flip_braiding(dim: int, alphabet=None) -> BraidingTable:
    entries = {
        (a, b): Element.from_word((b, a), alphabet=alphabet)
        for a in range(dim)
        for b in range(dim)
    }
    return BraidingTable(dim, entries, alphabet)


def diagonal_braiding(dim: int, exponents, alphabet=None) -> BraidingTable:
    """sigma(v_a, v_b) = q**exponents[a][b] * (v_b, v_a)."""
    entries = {
        (a, b): Element.from_word((b, a), Scalar.q_power(exponents[a][b]), alphabet)
        for a in range(dim)
        for b in range(dim)
    }
    return BraidingTable(dim, entries, alphabet)


def check_yang_baxter(table: BraidingTable) -> CheckResult:
    """Compare both hexagon compositions on every basis word of V^3."""
    for word in table.basis_words(3):
        x = Element.from_word(word, alphabet=table.alphabet)
        lhs = table.apply(table.apply(table.apply(x, 1), 2), 1)
        rhs = table.apply(table.apply(table.apply(x, 2), 1), 2)
        if lhs != rhs:
            return fail("yang-baxter", word, lhs, rhs)
    return PASS


def braid_lift(table: BraidingTable, w: Permutation, x: Element) -> Element:
    """Apply the braid-group lift of w along one reduced word.

    Words in x must have length equal to the size of w.  Yang-Baxter
    validity of the table is the caller's contract; it is what makes the
    result independent of the chosen reduced word.
    """
    for word in x.support():
        if len(word) != w.size:
            raise StructuralError(
                f"word length {len(word)} does not match permutation size {w.size}")
    out = x
    for i in reversed(reduced_word(w)):
        out = table.apply(out, i)
    return out


def braid_lift_word(table: BraidingTable, generators: tuple[int, ...], x: Element) -> Element:
    """Apply an explicit generator word, rightmost generator first."""
    out = x
    for i in reversed(generators):
        out = table.apply(out, i)
    return out


def block_braiding(table: BraidingTable, i: int, j: int, x: Element) -> Element:
    """The braiding between a degree-i block and a degree-j block.

    For i = 0 or j = 0 this is the identity on the nontrivial factor
    (the flip across a scalar leg).
    """
    if i == 0 or j == 0:
        return x
    return braid_lift(table, block_rotation(i, j), x)
