"""Braided algebras by structure constants and the quantum quasi-shuffle.

A braided algebra is a based space with a braiding table and structure
constants for an associative multiplication compatible with the
braiding.  On its tensor space the quasi-shuffle product interleaves
three moves, dispatched on the lengths of the two factor words: keep the
left head, braid the right head to the front, or merge the two heads
through the multiplication.  The two one-sided clauses are implemented
verbatim in addition to the general clause; an always-general code path
is kept as an internal cross-check oracle.

The deconcatenation coproduct, the connectedness filtration and the
extension of a degree-one letter map to a morphism of the whole tensor
bialgebra live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .braid import BraidingTable, block_braiding
from .checks import PASS, CheckResult, fail
from .elements import Element, apply_local
from .errors import StructuralError
from .scalars import Scalar


@dataclass(eq=False)
class BraidedAlgebraSpec:
    """Structure constants of a finite-dimensional braided algebra.

    ``mult`` maps letter pairs to combinations of letters; missing pairs
    are stored explicitly as zero during construction, so the table is
    total.  ``unit``, when present, is a two-sided unit letter that the
    braiding flips trivially.
    """

    dim: int
    braiding: BraidingTable
    mult: dict[tuple[int, int], Element]
    unit: int | None = None
    names: tuple[str, ...] | None = None
    alphabet: object = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.braiding.dim != self.dim:
            raise StructuralError("braiding dimension does not match the basis size")
        if self.alphabet is None:
            self.alphabet = self
        total = {}
        for a in range(self.dim):
            for b in range(self.dim):
                value = self.mult.get((a, b))
                if value is None:
                    value = Element.zero(self.alphabet)
                for word in value.support():
                    if len(word) != 1 or not (0 <= word[0] < self.dim):
                        raise StructuralError(
                            f"mult entry for {(a, b)} must be a combination of letters")
                total[(a, b)] = Element(dict(value._terms), self.alphabet)
        self.mult = total

    def mult_entry(self, a: int, b: int) -> Element:
        return self.mult[(a, b)]

    def letter_name(self, letter: int) -> str:
        if self.names is not None:
            return self.names[letter]
        return f"a{letter}"

    def word(self, *letters: int, coeff=1) -> Element:
        return Element.from_word(tuple(letters), coeff, self.alphabet)

    def one(self) -> Element:
        return Element.unit(self.alphabet)

    def basis_words(self, length: int):
        yield from self.braiding.basis_words(length)

    def sigma(self, x: Element, pos: int = 1) -> Element:
        return self.braiding.apply(x, pos)


def check_braided_algebra(spec: BraidedAlgebraSpec) -> CheckResult:
    """Associativity, the two braiding/multiplication exchange laws, and
    (when a unit is declared) the unit laws, on all basis words."""
    m = spec.mult
    sig = spec.braiding.entries
    for word in spec.basis_words(3):
        x = Element.from_word(word, alphabet=spec.alphabet)
        left = apply_local(m, 1, apply_local(m, 1, x))
        right = apply_local(m, 1, apply_local(m, 2, x))
        if left != right:
            return fail("associativity", word, left, right)
        lhs = apply_local(m, 2, apply_local(sig, 1, apply_local(sig, 2, x)))
        rhs = apply_local(sig, 1, apply_local(m, 1, x))
        if lhs != rhs:
            return fail("braided-compatibility-left", word, lhs, rhs)
        lhs = apply_local(m, 1, apply_local(sig, 2, apply_local(sig, 1, x)))
        rhs = apply_local(sig, 1, apply_local(m, 2, x))
        if lhs != rhs:
            return fail("braided-compatibility-right", word, lhs, rhs)
    if spec.unit is not None:
        u = spec.unit
        for a in range(spec.dim):
            letter = spec.word(a)
            if apply_local(m, 1, spec.word(u, a)) != letter:
                return fail("left-unit", (u, a))
            if apply_local(m, 1, spec.word(a, u)) != letter:
                return fail("right-unit", (a, u))
            if apply_local(sig, 1, spec.word(a, u)) != spec.word(u, a):
                return fail("unit-braiding", (a, u))
            if apply_local(sig, 1, spec.word(u, a)) != spec.word(a, u):
                return fail("unit-braiding", (u, a))
    return PASS


def adjoin_unit(spec: BraidedAlgebraSpec, name: str = "one") -> BraidedAlgebraSpec:
    """Extend a non-unital spec by a fresh unit letter.

    Multiplication gains the unit laws, the braiding flips the unit
    across every letter, and every original entry is kept.
    """
    if spec.unit is not None:
        raise StructuralError("spec already has a unit")
    dim = spec.dim
    unit = dim
    entries = {}
    mult = {}
    alphabet = object()
    for (a, b), value in spec.braiding.entries.items():
        entries[(a, b)] = Element(dict(value._terms), alphabet)
    for (a, b), value in spec.mult.items():
        mult[(a, b)] = Element(dict(value._terms), alphabet)
    for a in range(dim + 1):
        entries[(a, unit)] = Element.from_word((unit, a), alphabet=alphabet)
        if a != unit:
            entries[(unit, a)] = Element.from_word((a, unit), alphabet=alphabet)
        mult[(unit, a)] = Element.from_word((a,), alphabet=alphabet)
        if a != unit:
            mult[(a, unit)] = Element.from_word((a,), alphabet=alphabet)
    names = None
    if spec.names is not None:
        unit_name = name
        while unit_name in spec.names:
            unit_name += "_"
        names = spec.names + (unit_name,)
    braiding = BraidingTable(dim + 1, entries, alphabet)
    return BraidedAlgebraSpec(dim + 1, braiding, mult, unit, names, alphabet)


@lru_cache(maxsize=None)
def _qsh_words(spec: BraidedAlgebraSpec, u: tuple, v: tuple) -> Element:
    if not u:
        return Element.from_word(v, alphabet=spec.alphabet)
    if not v:
        return Element.from_word(u, alphabet=spec.alphabet)
    i, j = len(u), len(v)
    if i == 1 and j == 1:
        return _qsh_base(spec, u[0], v[0])
    if i == 1:
        return _qsh_one_left(spec, u[0], v)
    if j == 1:
        return _qsh_one_right(spec, u, v[0])
    return _qsh_general(spec, u, v, _qsh_words)


def _qsh_base(spec: BraidedAlgebraSpec, a: int, b: int) -> Element:
    out = spec.word(a, b)
    out = out + spec.braiding.entries[(a, b)]
    out = out + spec.mult_entry(a, b)
    return out


def _qsh_one_left(spec: BraidedAlgebraSpec, a: int, v: tuple) -> Element:
    out = Element.from_word((a,) + v, alphabet=spec.alphabet)
    rest = v[1:]
    for (c0, c1), coeff in spec.braiding.entries[(a, v[0])]._terms.items():
        sub = _qsh_words(spec, (c1,), rest)
        out = out + _prepend(c0, sub).scale(coeff)
    merged = spec.mult_entry(a, v[0])
    for (d,), coeff in merged._terms.items():
        out = out + Element.from_word((d,) + rest, coeff, spec.alphabet)
    return out


def _qsh_one_right(spec: BraidedAlgebraSpec, u: tuple, b: int) -> Element:
    i = len(u)
    out = _prepend(u[0], _qsh_words(spec, u[1:], (b,)))
    moved = block_braiding(
        spec.braiding, i, 1, Element.from_word(u + (b,), alphabet=spec.alphabet))
    out = out + moved
    shifted = block_braiding(
        spec.braiding, i - 1, 1, Element.from_word(u[1:] + (b,), alphabet=spec.alphabet))
    for word, coeff in shifted._terms.items():
        merged = spec.mult_entry(u[0], word[0])
        for (d,), c2 in merged._terms.items():
            out = out + Element.from_word((d,) + word[1:], coeff * c2, spec.alphabet)
    return out


def _qsh_general(spec: BraidedAlgebraSpec, u: tuple, v: tuple, rec) -> Element:
    i = len(u)
    out = _prepend(u[0], rec(spec, u[1:], v))
    moved = block_braiding(
        spec.braiding, i, 1, Element.from_word(u + (v[0],), alphabet=spec.alphabet))
    for word, coeff in moved._terms.items():
        sub = rec(spec, word[1:], v[1:])
        out = out + _prepend(word[0], sub).scale(coeff)
    shifted = block_braiding(
        spec.braiding, i - 1, 1, Element.from_word(u[1:] + (v[0],), alphabet=spec.alphabet))
    for word, coeff in shifted._terms.items():
        merged = spec.mult_entry(u[0], word[0])
        sub = rec(spec, word[1:], v[1:])
        for (d,), c2 in merged._terms.items():
            out = out + _prepend(d, sub).scale(coeff * c2)
    return out


def _prepend(letter: int, x: Element) -> Element:
    return Element({(letter,) + w: c for w, c in x._terms.items()}, x.alphabet)


@lru_cache(maxsize=None)
def _qsh_words_general_only(spec: BraidedAlgebraSpec, u: tuple, v: tuple) -> Element:
    """Internal oracle: every length pattern through the general clause."""
    if not u:
        return Element.from_word(v, alphabet=spec.alphabet)
    if not v:
        return Element.from_word(u, alphabet=spec.alphabet)
    return _qsh_general(spec, u, v, _qsh_words_general_only)


def quasi_shuffle(spec: BraidedAlgebraSpec, x: Element, y: Element) -> Element:
    """Bilinear quantum quasi-shuffle product on the tensor space."""
    out = Element.zero(spec.alphabet)
    for u, cu in x._terms.items():
        for v, cv in y._terms.items():
            out = out + _qsh_words(spec, u, v).scale(cu * cv)
    return out


def quasi_shuffle_general_clause(spec: BraidedAlgebraSpec, x: Element, y: Element) -> Element:
    out = Element.zero(spec.alphabet)
    for u, cu in x._terms.items():
        for v, cv in y._terms.items():
            out = out + _qsh_words_general_only(spec, u, v).scale(cu * cv)
    return out


def _pair_alphabet(alphabet):
    return ("tensor2", alphabet)


def deconcat(x: Element) -> Element:
    """Full deconcatenation coproduct, as an Element over pairs of words."""
    out: dict[tuple, Scalar] = {}
    for w, c in x._terms.items():
        for k in range(len(w) + 1):
            key = (w[:k], w[k:])
            s = out.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return Element(out, _pair_alphabet(x.alphabet))


def deconcat_reduced(x: Element) -> Element:
    """Reduced coproduct: the full one minus both extremal embeddings."""
    out = deconcat(x)
    empty = ()
    corrections: dict[tuple, Scalar] = {}
    for w, c in x._terms.items():
        for key in ((w, empty), (empty, w)):
            s = corrections.get(key)
            s = c if s is None else s + c
            corrections[key] = s
    return out - Element(corrections, _pair_alphabet(x.alphabet))


@lru_cache(maxsize=None)
def _word_in_filtration(word: tuple, r: int) -> bool:
    if r <= 0:
        return len(word) == 0
    if len(word) == 0:
        return True
    for k in range(1, len(word)):
        if not (_word_in_filtration(word[:k], r - 1)
                and _word_in_filtration(word[k:], r - 1)):
            return False
    return True


def filtration_degree(x: Element) -> int:
    """Smallest r with x in the r-th step of the connectedness filtration.

    Computed from the reduced-coproduct definition: a word sits in step r
    when every interior cut lands in step r-1 on both sides.  That this
    agrees with the maximal word length is exercised by the tests, not
    assumed by this function.
    """
    r = 0
    while not all(_word_in_filtration(w, r) for w in x._terms):
        r += 1
    return r


def check_quasi_shuffle_bialgebra(spec: BraidedAlgebraSpec,
                                  pairs) -> CheckResult:
    """Coproduct compatibility of the quasi-shuffle product.

    For each sample pair of basis words, deconcatenating the product
    must equal multiplying the deconcatenations componentwise after
    braiding the two middle tensor legs across each other.
    """
    for u, v in pairs:
        x = Element.from_word(u, alphabet=spec.alphabet)
        y = Element.from_word(v, alphabet=spec.alphabet)
        lhs = deconcat(quasi_shuffle(spec, x, y))
        rhs: dict[tuple, Scalar] = {}
        for i in range(len(u) + 1):
            u1, u2 = u[:i], u[i:]
            for j in range(len(v) + 1):
                v1, v2 = v[:j], v[j:]
                crossed = block_braiding(
                    spec.braiding, len(u2), len(v1),
                    Element.from_word(u2 + v1, alphabet=spec.alphabet))
                for word, c in crossed._terms.items():
                    left = _qsh_words(spec, u1, word[:len(v1)])
                    right = _qsh_words(spec, word[len(v1):], v2)
                    for wl, cl in left._terms.items():
                        for wr, cr in right._terms.items():
                            key = (wl, wr)
                            s = rhs.get(key)
                            p = c * cl * cr
                            s = p if s is None else s + p
                            if s.is_zero():
                                rhs.pop(key, None)
                            else:
                                rhs[key] = s
        rhs_elem = Element(rhs, _pair_alphabet(spec.alphabet))
        if lhs != rhs_elem:
            return fail("quasi-shuffle-bialgebra", (u, v), lhs, rhs_elem)
    return PASS


def _f_letterwise(f: Mapping[int, Element], word: tuple, zero: Element) -> Element:
    if len(word) != 1:
        return zero
    return f.get(word[0], zero)


def extend_letter_morphism(spec_b: BraidedAlgebraSpec, spec_a: BraidedAlgebraSpec,
                           f: Mapping[int, Element], x: Element) -> Element:
    """Extend a degree-one letter map to the tensor-bialgebra morphism.

    The letter map must kill the unit letter (when one is declared),
    intertwine the two braidings, and intertwine the multiplications;
    all three are verified on basis letters before any evaluation.  The
    extension is the truncating series: counit part plus, for each n up
    to the filtration degree of x, the n-fold letter map applied to the
    (n-1)-iterated reduced coproduct.
    """
    zero_a = Element.zero(spec_a.alphabet)
    f = {letter: value for letter, value in f.items() if not value.is_zero()}
    for value in f.values():
        for word in value.support():
            if len(word) != 1 or not (0 <= word[0] < spec_a.dim):
                raise StructuralError("letter map values must be combinations of letters")
    if spec_b.unit is not None and spec_b.unit in f:
        raise StructuralError("letter map must vanish on the unit letter")
    for a in range(spec_b.dim):
        fa = f.get(a, zero_a)
        for b in range(spec_b.dim):
            fb = f.get(b, zero_a)
            lhs = Element.zero(spec_a.alphabet)
            for (c, d), coeff in spec_b.braiding.entries[(a, b)]._terms.items():
                lhs = lhs + f.get(c, zero_a).tensor(f.get(d, zero_a)).scale(coeff)
            rhs_pair = fa.tensor(fb)
            rhs = apply_local(spec_a.braiding.entries, 1, rhs_pair) if rhs_pair else rhs_pair
            if lhs != rhs:
                raise StructuralError(
                    f"letter map does not intertwine the braidings at {(a, b)}")
            m_lhs = apply_local(spec_a.mult, 1, rhs_pair) if rhs_pair else rhs_pair
            m_rhs = spec_b.mult_entry(a, b).map_words(
                lambda w: _f_letterwise(f, w, zero_a), spec_a.alphabet)
            if m_lhs != m_rhs:
                raise StructuralError(
                    f"letter map does not intertwine the multiplications at {(a, b)}")

    out = Element({(): x.coefficient(())}, spec_a.alphabet)
    bound = filtration_degree(x)
    state = Element({(w,): c for w, c in x._terms.items()},
                    ("tensorpow", spec_b.alphabet))
    for n in range(1, bound + 1):
        for key, coeff in state._terms.items():
            factors = [_f_letterwise(f, w, zero_a) for w in key]
            if any(factor.is_zero() for factor in factors):
                continue
            term = Element.unit(spec_a.alphabet)
            for factor in factors:
                term = term.tensor(factor)
            out = out + term.scale(coeff)
        if n <= bound - 1:
            state = _split_first_factor(state)
    return out


def _split_first_factor(state: Element) -> Element:
    out: dict[tuple, Scalar] = {}
    for key, coeff in state._terms.items():
        head, rest = key[0], key[1:]
        if len(head) == 0:
            cuts = [(((), ()), Scalar.rational(-1))]
        else:
            cuts = [(((head[:k]), (head[k:])), Scalar.one())
                    for k in range(1, len(head))]
        for (u, v), sign in cuts:
            nk = (u, v) + rest
            s = out.get(nk)
            p = coeff * sign
            s = p if s is None else s + p
            if s.is_zero():
                out.pop(nk, None)
            else:
                out[nk] = s
    return Element(out, state.alphabet)
