"""Sparse linear combinations of tensor words.

A word is a tuple of letters.  Letters are opaque hashables: plain
integers index a declared basis, group elements tag graded letters, and
an (index, group element) pair is a letter of a module over a group
algebra.  A whole word may itself appear as a letter, which is how
tensor squares and higher tensor powers of a space are carried (the key
``(u, v)`` is a two-letter word whose letters are words).

An :class:`Element` maps words to nonzero scalars.  Canonical form
(no zero coefficients) is restored by every operation.  The ``alphabet``
attribute tags which basis declaration the words refer to; combining
elements over different declared alphabets is a structural error.

Canonical term order sorts words lexicographically by per-letter sort
keys; shorter words precede their extensions.  This order is the one
rendered by the CLI and frozen by the golden tests.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .errors import StructuralError
from .scalars import Scalar, split_sign

Word = tuple


def letter_key(letter):
    """Total sort key across the letter kinds used in this package."""
    if isinstance(letter, int):
        return (0, letter)
    if isinstance(letter, tuple):
        return (3, tuple(letter_key(part) for part in letter))
    sk = getattr(letter, "sort_key", None)
    if sk is not None:
        return (1, sk())
    return (2, repr(letter))


def word_key(word: Word):
    return tuple(letter_key(letter) for letter in word)


def merge_alphabets(a, b):
    if a is None:
        return b
    if b is None or a is b or a == b:
        return a
    raise StructuralError(f"alphabet mismatch: {a!r} vs {b!r}")


class Element:
    """A finite scalar combination of words over one alphabet."""

    __slots__ = ("_terms", "alphabet")

    def __init__(self, terms: Mapping[Word, Scalar] | None = None, alphabet=None):
        canon: dict[Word, Scalar] = {}
        if terms:
            for w, c in terms.items():
                c = Scalar.coerce(c)
                if not c.is_zero():
                    canon[tuple(w)] = c
        self._terms = canon
        self.alphabet = alphabet

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, alphabet=None) -> Element:
        return cls(None, alphabet)

    @classmethod
    def from_word(cls, word: Word, coeff: Scalar | int | Fraction = 1, alphabet=None) -> Element:
        return cls({tuple(word): Scalar.coerce(coeff)}, alphabet)

    @classmethod
    def unit(cls, alphabet=None) -> Element:
        """The empty word with coefficient 1."""
        return cls({(): Scalar.one()}, alphabet)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, word: Word) -> Scalar:
        return self._terms.get(tuple(word), Scalar.zero())

    def support(self) -> list[Word]:
        return sorted(self._terms, key=word_key)

    def terms(self) -> Iterable[tuple[Word, Scalar]]:
        """Term iteration in canonical order."""
        for w in self.support():
            yield w, self._terms[w]

    def max_length(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        if self._terms != other._terms:
            return False
        try:
            merge_alphabets(self.alphabet, other.alphabet)
        except StructuralError:
            return False
        return True

    def __repr__(self) -> str:
        return f"Element({self._terms!r})"

    # -- linear operations --------------------------------------------------

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        alphabet = merge_alphabets(self.alphabet, other.alphabet)
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        res = Element.__new__(Element)
        res._terms = out
        res.alphabet = alphabet
        return res

    def __neg__(self) -> Element:
        res = Element.__new__(Element)
        res._terms = {w: -c for w, c in self._terms.items()}
        res.alphabet = self.alphabet
        return res

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scale(self, factor: Scalar | int | Fraction) -> Element:
        factor = Scalar.coerce(factor)
        if factor.is_zero():
            return Element.zero(self.alphabet)
        res = Element.__new__(Element)
        res._terms = {w: c * factor for w, c in self._terms.items()}
        res.alphabet = self.alphabet
        return res

    def tensor(self, other: Element) -> Element:
        alphabet = merge_alphabets(self.alphabet, other.alphabet)
        out: dict[Word, Scalar] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                s = out.get(w)
                p = c1 * c2
                s = p if s is None else s + p
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        res = Element.__new__(Element)
        res._terms = out
        res.alphabet = alphabet
        return res

    def map_words(self, fn: Callable[[Word], Element], alphabet=None) -> Element:
        """Linear extension of a word-level map ``fn(word) -> Element``."""
        out = Element.zero(alphabet)
        for w, c in self._terms.items():
            out = out + fn(w).scale(c)
        return out


def tensor_all(factors: list[Element], alphabet=None) -> Element:
    out = Element.unit(alphabet)
    for f in factors:
        out = out.tensor(f)
    return out


def apply_local(table: Mapping, pos: int, x: Element) -> Element:
    """Rewrite the letters at positions (pos, pos+1), 1-based, of every word.

    ``table`` maps ordered letter pairs to Elements; values may have any
    word length (length 2 keeps words the same size, length 1 merges two
    letters into one, a zero value drops the term).
    """
    if pos < 1:
        raise StructuralError(f"position must be >= 1, got {pos}")
    out: dict[Word, Scalar] = {}
    for word, c in x._terms.items():
        if len(word) < pos + 1:
            raise StructuralError(
                f"position {pos} out of range for word of length {len(word)}")
        pair = (word[pos - 1], word[pos])
        entry = table.get(pair)
        if entry is None:
            raise StructuralError(f"no table entry for letter pair {pair!r}")
        head, tail = word[:pos - 1], word[pos + 1:]
        for mid, c2 in entry._terms.items():
            w = head + mid + tail
            s = out.get(w)
            p = c * c2
            s = p if s is None else s + p
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
    return Element(out, x.alphabet)


MINUS = "−"  # canonical term separator uses the minus-sign character


def render_element(x: Element, letter_text: Callable = str, sep: str = "@") -> str:
    """Canonical text form: terms in canonical order joined by + / minus.

    A coefficient of 1 is omitted; a pure sign is folded into the join;
    any other coefficient is rendered as a grammar atom followed by a
    space.  The empty word renders as its coefficient alone.
    """
    if x.is_zero():
        return "0"
    chunks: list[str] = []
    for word, coeff in x.terms():
        neg, atom = split_sign(coeff)
        if word:
            body = sep.join(letter_text(letter) for letter in word)
            if atom != "1":
                body = atom + " " + body
        else:
            body = atom
        if not chunks:
            chunks.append((MINUS if neg else "") + body)
        else:
            chunks.append((f" {MINUS} " if neg else " + ") + body)
    return "".join(chunks)
