"""The cotensor coalgebra on V tensor K[G] and its product structure.

Basis keys come in two kinds.  A degree-0 key is a group element (the
base group algebra sits in degree 0).  A degree-n key is a chain word: a
tuple of (letter, group element) pairs whose group components satisfy
the chain condition g_k = degree(v_{k+1}) * g_{k+1} at every cut, which
is exactly membership in the iterated cotensor product when the module
is group-graded.  Both coactions are then monomial on basis keys: the
left one reads degree(v_1) * g_1 off the first pair, the right one reads
g_n off the last.

The product is evaluated through the universal property of the cotensor
coalgebra: project the tensor square onto the group algebra (degree-0
part) and onto the module (degree-1 part: left action, right action and
the module multiplication), then feed both projections into the
truncating coalgebra-map series.  The series is iterated on the
ordinary (flip) coproduct of the tensor square and truncates at the
total degree, because the degree-1 projection kills any factor that is
pure group algebra on both legs or has a leg of degree two or more.

The coinvariant side: the projection onto right coinvariants is the
convolution of the identity with the composite
inclusion-antipode-projection; chain words with trailing group element 1
form the coinvariant basis, and flattening them to plain tensor words is
inverse to the chain lift that reinstates the group components.  The
smash product on tensor words with a group tag gives the second,
independent route to the same algebra.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .checks import PASS, CheckResult, fail
from .elements import Element, word_key
from .errors import StructuralError
from .grouphopf import GroupElement, HElement, YDSpec, braided_spec
from .qalg import _qsh_words
from .scalars import Scalar, split_sign

MWord = tuple  # tuple[(letter index, GroupElement), ...]
Key = object   # GroupElement (degree 0) or MWord (degree >= 1)


def key_degree(key: Key) -> int:
    return 0 if isinstance(key, GroupElement) else len(key)


def key_sort(key: Key):
    if isinstance(key, GroupElement):
        return (0, key.sort_key())
    return (1, word_key(key))


def left_degree(spec: YDSpec, key: Key) -> GroupElement:
    if isinstance(key, GroupElement):
        return key
    v, g = key[0]
    return spec.group.multiply(spec.degrees[v], g)


def right_degree(spec: YDSpec, key: Key) -> GroupElement:
    if isinstance(key, GroupElement):
        return key
    return key[-1][1]


def chain_violation(spec: YDSpec, word: MWord) -> int | None:
    """First cut (1-based) violating the chain condition, or None."""
    for k in range(len(word) - 1):
        v_next, g_next = word[k + 1]
        if word[k][1] != spec.group.multiply(spec.degrees[v_next], g_next):
            return k + 1
    return None


class CotensorElement:
    """A finite combination of basis keys of the cotensor coalgebra."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: YDSpec, terms: Mapping[Key, Scalar] | None = None):
        self.spec = spec
        canon: dict[Key, Scalar] = {}
        if terms:
            for key, c in terms.items():
                c = Scalar.coerce(c)
                if not c.is_zero():
                    canon[key] = c
        self._terms = canon

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, spec: YDSpec) -> CotensorElement:
        return cls(spec)

    @classmethod
    def unit(cls, spec: YDSpec) -> CotensorElement:
        return cls(spec, {spec.group.identity(): Scalar.one()})

    @classmethod
    def from_group(cls, spec: YDSpec, g: GroupElement, coeff=1) -> CotensorElement:
        return cls(spec, {g: Scalar.coerce(coeff)})

    @classmethod
    def from_h(cls, spec: YDSpec, h: HElement) -> CotensorElement:
        return cls(spec, dict(h._terms))

    @classmethod
    def from_word(cls, spec: YDSpec, word: MWord, coeff=1) -> CotensorElement:
        word = tuple((int(v), g) for v, g in word)
        bad = chain_violation(spec, word)
        if bad is not None:
            raise StructuralError(f"chain condition fails at cut {bad} of {word}")
        return cls(spec, {word: Scalar.coerce(coeff)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> Iterable[tuple[Key, Scalar]]:
        for key in sorted(self._terms, key=key_sort):
            yield key, self._terms[key]

    def coefficient(self, key: Key) -> Scalar:
        return self._terms.get(key, Scalar.zero())

    def h_part(self) -> HElement:
        return HElement(self.spec.group, {
            key: c for key, c in self._terms.items() if isinstance(key, GroupElement)})

    def degree_component(self, n: int) -> CotensorElement:
        return CotensorElement(self.spec, {
            key: c for key, c in self._terms.items() if key_degree(key) == n})

    def max_degree(self) -> int:
        return max((key_degree(key) for key in self._terms), default=0)

    def __eq__(self, other) -> bool:
        return isinstance(other, CotensorElement) and self.spec is other.spec \
            and self._terms == other._terms

    def __repr__(self) -> str:
        return f"CotensorElement({self._terms!r})"

    # -- linear operations ---------------------------------------------------

    def __add__(self, other: CotensorElement) -> CotensorElement:
        if self.spec is not other.spec:
            raise StructuralError("cotensor elements over different module data")
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return CotensorElement(self.spec, out)

    def __neg__(self) -> CotensorElement:
        return CotensorElement(self.spec, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: CotensorElement) -> CotensorElement:
        return self + (-other)

    def scale(self, factor) -> CotensorElement:
        factor = Scalar.coerce(factor)
        return CotensorElement(self.spec, {k: c * factor for k, c in self._terms.items()})

    def render(self) -> str:
        return render_cotensor(self)


def check_chain_condition(spec: YDSpec, terms) -> CheckResult:
    """Validate the chain condition at every cut of every word.

    ``terms`` may be a CotensorElement or any mapping whose keys are
    group elements or chain words.
    """
    mapping = terms._terms if isinstance(terms, CotensorElement) else terms
    for key in mapping:
        if isinstance(key, GroupElement):
            continue
        bad = chain_violation(spec, key)
        if bad is not None:
            return fail("cotensor-chain", (key, bad))
    return PASS


# -- coproduct and counit ----------------------------------------------------


def coproduct_pairs(spec: YDSpec, key: Key) -> list[tuple[Key, Key]]:
    """Basis coproduct; every pair carries coefficient 1.

    Group elements are group-like.  A chain word splits as the left
    degree prepended, all interior deconcatenations, and the right
    degree appended.
    """
    if isinstance(key, GroupElement):
        return [(key, key)]
    pairs: list[tuple[Key, Key]] = [(left_degree(spec, key), key)]
    pairs.extend((key[:k], key[k:]) for k in range(1, len(key)))
    pairs.append((key, right_degree(spec, key)))
    return pairs


def _pair_alphabet(spec: YDSpec):
    return ("cotensor2", spec)


def coproduct(x: CotensorElement) -> Element:
    """The coalgebra coproduct as an Element over pairs of basis keys."""
    out: dict[tuple, Scalar] = {}
    for key, c in x._terms.items():
        for pair in coproduct_pairs(x.spec, key):
            s = out.get(pair)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(pair, None)
            else:
                out[pair] = s
    return Element(out, _pair_alphabet(x.spec))


def counit(x: CotensorElement) -> Scalar:
    out = Scalar.zero()
    for key, c in x._terms.items():
        if isinstance(key, GroupElement):
            out = out + c
    return out


# -- the universal-property product ------------------------------------------


def _module_projection(spec: YDSpec, a: Key, b: Key) -> dict[tuple[int, GroupElement], Scalar]:
    """Degree-1 projection of the product map on a basis pair of the square.

    Left action for (group, letter) pairs, right action for (letter,
    group), the module multiplication in smash form for (letter, letter);
    everything else projects to zero.
    """
    da, db = key_degree(a), key_degree(b)
    out: dict[tuple[int, GroupElement], Scalar] = {}
    if da == 0 and db == 1:
        v, g2 = b[0]
        target = spec.group.multiply(a, g2)
        for (i,), c in spec.act_letter(a, v)._terms.items():
            out[(i, target)] = out.get((i, target), Scalar.zero()) + c
    elif da == 1 and db == 0:
        v, g1 = a[0]
        out[(v, spec.group.multiply(g1, b))] = Scalar.one()
    elif da == 1 and db == 1:
        v, g1 = a[0]
        w, g2 = b[0]
        target = spec.group.multiply(g1, g2)
        for (i,), c in spec.act_letter(g1, w)._terms.items():
            for (j,), d in spec.mult_entry(v, i)._terms.items():
                out[(j, target)] = out.get((j, target), Scalar.zero()) + c * d
    return {key: c for key, c in out.items() if not c.is_zero()}


@lru_cache(maxsize=None)
def _star_key(spec: YDSpec, kx: Key, ky: Key) -> CotensorElement:
    total = key_degree(kx) + key_degree(ky)
    out: dict[Key, Scalar] = {}
    if total == 0:
        out[spec.group.multiply(kx, ky)] = Scalar.one()
        return CotensorElement(spec, out)
    if key_degree(kx) == 0 and key_degree(ky) == 0:
        out[spec.group.multiply(kx, ky)] = Scalar.one()
    state: dict[tuple, Scalar] = {((kx, ky),): Scalar.one()}
    for n in range(1, total + 1):
        for factors, coeff in state.items():
            images = [_module_projection(spec, a, b) for a, b in factors]
            if any(not img for img in images):
                continue
            words: list[tuple[MWord, Scalar]] = [((), coeff)]
            for img in images:
                words = [
                    (word + (letter,), c * d)
                    for word, c in words
                    for letter, d in img.items()
                ]
            for word, c in words:
                s = out.get(word)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(word, None)
                else:
                    out[word] = s
        if n < total:
            state = _split_square(spec, state)
    result = CotensorElement(spec, out)
    assert check_chain_condition(spec, result), "product left the cotensor subspace"
    return result


def _split_square(spec: YDSpec, state: dict[tuple, Scalar]) -> dict[tuple, Scalar]:
    """One more step of the tensor-square coproduct, on the first factor."""
    out: dict[tuple, Scalar] = {}
    for factors, coeff in state.items():
        a, b = factors[0]
        rest = factors[1:]
        for a1, a2 in coproduct_pairs(spec, a):
            for b1, b2 in coproduct_pairs(spec, b):
                key = ((a1, b1), (a2, b2)) + rest
                s = out.get(key)
                s = coeff if s is None else s + coeff
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
    return out


def star(x: CotensorElement, y: CotensorElement) -> CotensorElement:
    """The associative product induced by the universal property."""
    if x.spec is not y.spec:
        raise StructuralError("cotensor elements over different module data")
    out = CotensorElement.zero(x.spec)
    for kx, cx in x._terms.items():
        for ky, cy in y._terms.items():
            out = out + _star_key(x.spec, kx, ky).scale(cx * cy)
    return out


# -- right coinvariants --------------------------------------------------------


def right_translate(spec: YDSpec, key: Key, g: GroupElement) -> Key:
    """The right module action of a group element on a basis key."""
    if isinstance(key, GroupElement):
        return spec.group.multiply(key, g)
    return tuple((v, spec.group.multiply(h, g)) for v, h in key)


def coinvariant_projection(x: CotensorElement) -> CotensorElement:
    """Convolution of the identity with inclusion-antipode-projection."""
    spec = x.spec
    out = CotensorElement.zero(spec)
    for key, c in x._terms.items():
        for k1, k2 in coproduct_pairs(spec, key):
            if key_degree(k2) == 0:
                inv = spec.group.inverse(k2)
                out = out + _star_key(spec, k1, inv).scale(c)
    return out


def coinvariant_projection_direct(x: CotensorElement) -> CotensorElement:
    """The closed form of the same projection: kill the right degree."""
    spec = x.spec
    out: dict[Key, Scalar] = {}
    for key, c in x._terms.items():
        if isinstance(key, GroupElement):
            target: Key = spec.group.identity()
        else:
            target = right_translate(spec, key, spec.group.inverse(right_degree(spec, key)))
        s = out.get(target)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(target, None)
        else:
            out[target] = s
    return CotensorElement(spec, out)


def is_coinvariant(x: CotensorElement) -> bool:
    for key in x._terms:
        if isinstance(key, GroupElement):
            if not key.is_identity():
                return False
        elif not right_degree(x.spec, key).is_identity():
            return False
    return True


def flatten_coinvariant(x: CotensorElement) -> Element:
    """Strip the group components off a right-coinvariant element."""
    if not is_coinvariant(x):
        raise StructuralError("element is not right-coinvariant")
    out: dict[tuple, Scalar] = {}
    for key, c in x._terms.items():
        word = () if isinstance(key, GroupElement) else tuple(v for v, _ in key)
        s = out.get(word)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(word, None)
        else:
            out[word] = s
    return Element(out, x.spec)


def chain_lift_word(spec: YDSpec, word: tuple[int, ...]) -> Key:
    """Reinstate group components: suffix degree products, ending at 1."""
    if not word:
        return spec.group.identity()
    out = []
    g = spec.group.identity()
    for v in reversed(word):
        out.append((v, g))
        g = spec.group.multiply(spec.degrees[v], g)
    return tuple(reversed(out))


def chain_lift(spec: YDSpec, x: Element) -> CotensorElement:
    """The coinvariant embedding of the tensor space over the letters."""
    out: dict[Key, Scalar] = {}
    for word, c in x._terms.items():
        key = chain_lift_word(spec, word)
        s = out.get(key)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s
    return CotensorElement(spec, out)


def coinvariant_coproduct(x: CotensorElement) -> Element:
    """Both coproduct legs pushed into the coinvariants."""
    spec = x.spec
    out: dict[tuple, Scalar] = {}
    for key, c in x._terms.items():
        for k1, k2 in coproduct_pairs(spec, key):
            pair = (_project_key(spec, k1), _project_key(spec, k2))
            s = out.get(pair)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(pair, None)
            else:
                out[pair] = s
    return Element(out, _pair_alphabet(spec))


def _project_key(spec: YDSpec, key: Key) -> Key:
    if isinstance(key, GroupElement):
        return spec.group.identity()
    return right_translate(spec, key, spec.group.inverse(right_degree(spec, key)))


# -- the smash-product route ---------------------------------------------------


class SmashElement:
    """A combination of (tensor word over the letters, group element) pairs."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: YDSpec,
                 terms: Mapping[tuple[tuple[int, ...], GroupElement], Scalar] | None = None):
        self.spec = spec
        canon: dict[tuple[tuple[int, ...], GroupElement], Scalar] = {}
        if terms:
            for (word, g), c in terms.items():
                c = Scalar.coerce(c)
                if not c.is_zero():
                    canon[(tuple(word), g)] = c
        self._terms = canon

    @classmethod
    def zero(cls, spec: YDSpec) -> SmashElement:
        return cls(spec)

    @classmethod
    def unit(cls, spec: YDSpec) -> SmashElement:
        return cls(spec, {((), spec.group.identity()): Scalar.one()})

    @classmethod
    def of(cls, spec: YDSpec, word: tuple[int, ...], g: GroupElement | None = None,
           coeff=1) -> SmashElement:
        if g is None:
            g = spec.group.identity()
        return cls(spec, {(tuple(word), g): Scalar.coerce(coeff)})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self):
        def sort(item):
            word, g = item
            return (word_key(word), g.sort_key())
        for key in sorted(self._terms, key=sort):
            yield key, self._terms[key]

    def __eq__(self, other) -> bool:
        return isinstance(other, SmashElement) and self.spec is other.spec \
            and self._terms == other._terms

    def __repr__(self) -> str:
        return f"SmashElement({self._terms!r})"

    def __add__(self, other: SmashElement) -> SmashElement:
        if self.spec is not other.spec:
            raise StructuralError("smash elements over different module data")
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return SmashElement(self.spec, out)

    def __neg__(self) -> SmashElement:
        return SmashElement(self.spec, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: SmashElement) -> SmashElement:
        return self + (-other)

    def scale(self, factor) -> SmashElement:
        factor = Scalar.coerce(factor)
        return SmashElement(self.spec, {k: c * factor for k, c in self._terms.items()})

    def render(self) -> str:
        return render_smash(self)


def smash_product(x: SmashElement, y: SmashElement) -> SmashElement:
    """(u # g)(w # g') = (u qsh g.w) # gg', the group acting letterwise."""
    if x.spec is not y.spec:
        raise StructuralError("smash elements over different module data")
    spec = x.spec
    bspec = braided_spec(spec)
    out: dict[tuple, Scalar] = {}
    for (u, g), c in x._terms.items():
        for (w, g2), d in y._terms.items():
            tag = spec.group.multiply(g, g2)
            acted = spec.act_word(g, w)
            for word2, c3 in acted._terms.items():
                prod = _qsh_words(bspec, u, word2)
                base = c * d * c3
                for word3, c4 in prod._terms.items():
                    key = (word3, tag)
                    s = out.get(key)
                    p = base * c4
                    s = p if s is None else s + p
                    if s.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = s
    return SmashElement(spec, out)


def to_smash(x: CotensorElement) -> SmashElement:
    """Split off the group tag through the coproduct and the projection."""
    spec = x.spec
    out: dict[tuple, Scalar] = {}
    for key, c in x._terms.items():
        for k1, k2 in coproduct_pairs(spec, key):
            if key_degree(k2) != 0:
                continue
            proj = _project_key(spec, k1)
            word = () if isinstance(proj, GroupElement) else tuple(v for v, _ in proj)
            skey = (word, k2)
            s = out.get(skey)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(skey, None)
            else:
                out[skey] = s
    return SmashElement(spec, out)


def from_smash(s: SmashElement) -> CotensorElement:
    """Chain-lift the word leg and multiply the group tag back in."""
    spec = s.spec
    out = CotensorElement.zero(spec)
    for (word, g), c in s._terms.items():
        lifted = chain_lift_word(spec, word)
        out = out + _star_key(spec, lifted, g).scale(c)
    return out


# -- rendering ------------------------------------------------------------------


def render_key(spec: YDSpec, key: Key) -> str:
    if isinstance(key, GroupElement):
        return key.render()
    return "[]".join(f"{spec.names[v]}.{g.render()}" for v, g in key)


def render_cotensor(x: CotensorElement) -> str:
    if x.is_zero():
        return "0"
    from .elements import MINUS
    chunks: list[str] = []
    for key, coeff in x.terms():
        neg, atom = split_sign(coeff)
        body = render_key(x.spec, key)
        if atom != "1":
            body = atom + " " + body
        if not chunks:
            chunks.append((MINUS if neg else "") + body)
        else:
            chunks.append((f" {MINUS} " if neg else " + ") + body)
    return "".join(chunks)


def render_smash(x: SmashElement) -> str:
    if x.is_zero():
        return "0"
    from .elements import MINUS
    chunks: list[str] = []
    for (word, g), coeff in x.terms():
        neg, atom = split_sign(coeff)
        wtext = "@".join(x.spec.names[v] for v in word) if word else "1"
        body = f"{wtext}#{g.render()}"
        if atom != "1":
            body = atom + " " + body
        if not chunks:
            chunks.append((MINUS if neg else "") + body)
        else:
            chunks.append((f" {MINUS} " if neg else " + ") + body)
    return "".join(chunks)


def render_pairs(spec: YDSpec, x: Element, sep: str = " (x) ") -> str:
    """Canonical text for an Element over pairs of basis keys."""
    if x.is_zero():
        return "0"
    from .elements import MINUS
    chunks: list[str] = []
    for (a, b), coeff in x.terms():
        neg, atom = split_sign(coeff)
        body = render_key(spec, a) + sep + render_key(spec, b)
        if atom != "1":
            body = atom + " " + body
        if not chunks:
            chunks.append((MINUS if neg else "") + body)
        else:
            chunks.append((f" {MINUS} " if neg else " + ") + body)
    return "".join(chunks)
