"""Abelian group algebras as Hopf algebras and Yetter-Drinfeld data over them.

The base Hopf algebra is a group algebra K[G] for G finitely generated
abelian: ``rank`` free generators followed by torsion generators of the
given orders.  Group elements are exponent vectors, torsion exponents
normalized into [0, order).  Group-likes make the Hopf structure
classical: the coproduct is diagonal, the counit is 1 and the antipode
inverts.

A Yetter-Drinfeld module over K[G] is a based vector space carrying a
G-grading (the coaction sends a letter v to degree(v) tensor v) and a
G-action given per generator by an exact matrix in the letter basis.
The compatibility condition between action and coaction is evaluated
literally by :func:`check_yetter_drinfeld`; for group algebras it pins
the action matrices to the degree grading.  The induced braiding
``v tensor w -> degree(v).w tensor v`` turns any module algebra here
into a braided algebra suitable for the quasi-shuffle machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import linalg
from .braid import BraidingTable, check_yang_baxter
from .checks import PASS, CheckResult, fail
from .elements import Element
from .errors import StructuralError
from .scalars import Scalar


@dataclass(frozen=True)
class GroupElement:
    """Exponent vector of a group element: free part, then torsion part."""

    free: tuple[int, ...]
    torsion: tuple[int, ...]

    def sort_key(self):
        return (self.free, self.torsion)

    def exponents(self) -> tuple[int, ...]:
        return self.free + self.torsion

    def is_identity(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def render(self) -> str:
        return "K{" + ",".join(str(e) for e in self.exponents()) + "}"


@dataclass(frozen=True)
class AbelianGroup:
    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0 or any(m < 2 for m in self.torsion):
            raise StructuralError("group needs rank >= 0 and torsion orders >= 2")

    @property
    def n_generators(self) -> int:
        return self.rank + len(self.torsion)

    def element(self, exponents: Sequence[int]) -> GroupElement:
        if len(exponents) != self.n_generators:
            raise StructuralError(
                f"expected {self.n_generators} exponents, got {len(exponents)}")
        free = tuple(int(e) for e in exponents[:self.rank])
        tors = tuple(int(e) % m for e, m in zip(exponents[self.rank:], self.torsion))
        return GroupElement(free, tors)

    def identity(self) -> GroupElement:
        return GroupElement((0,) * self.rank, (0,) * len(self.torsion))

    def generator(self, k: int) -> GroupElement:
        exps = [0] * self.n_generators
        exps[k] = 1
        return self.element(exps)

    def generators(self) -> list[GroupElement]:
        return [self.generator(k) for k in range(self.n_generators)]

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return self.element([a + b for a, b in zip(g.exponents(), h.exponents())])

    def inverse(self, g: GroupElement) -> GroupElement:
        return self.element([-a for a in g.exponents()])

    def product(self, elems) -> GroupElement:
        out = self.identity()
        for g in elems:
            out = self.multiply(out, g)
        return out


class HElement:
    """An element of the group algebra K[G]."""

    __slots__ = ("group", "_terms")

    def __init__(self, group: AbelianGroup, terms: Mapping[GroupElement, Scalar] | None = None):
        self.group = group
        canon: dict[GroupElement, Scalar] = {}
        if terms:
            for g, c in terms.items():
                c = Scalar.coerce(c)
                if not c.is_zero():
                    canon[g] = c
        self._terms = canon

    @classmethod
    def of(cls, group: AbelianGroup, g: GroupElement, coeff=1) -> HElement:
        return cls(group, {g: Scalar.coerce(coeff)})

    @classmethod
    def unit(cls, group: AbelianGroup) -> HElement:
        return cls.of(group, group.identity())

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        for g in sorted(self._terms, key=GroupElement.sort_key):
            yield g, self._terms[g]

    def __eq__(self, other) -> bool:
        return isinstance(other, HElement) and self.group == other.group \
            and self._terms == other._terms

    def __add__(self, other: HElement) -> HElement:
        if self.group != other.group:
            raise StructuralError("group mismatch")
        out = dict(self._terms)
        for g, c in other._terms.items():
            s = out.get(g)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(g, None)
            else:
                out[g] = s
        return HElement(self.group, out)

    def __neg__(self) -> HElement:
        return HElement(self.group, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other: HElement) -> HElement:
        return self + (-other)

    def scale(self, factor) -> HElement:
        factor = Scalar.coerce(factor)
        return HElement(self.group, {g: c * factor for g, c in self._terms.items()})

    def __mul__(self, other: HElement) -> HElement:
        """Group algebra product (convolution of supports)."""
        if self.group != other.group:
            raise StructuralError("group mismatch")
        out: dict[GroupElement, Scalar] = {}
        for g, c in self._terms.items():
            for h, d in other._terms.items():
                gh = self.group.multiply(g, h)
                s = out.get(gh)
                p = c * d
                s = p if s is None else s + p
                out[gh] = s
        return HElement(self.group, out)

    def __repr__(self) -> str:
        return f"HElement({dict(self._terms)!r})"


def coproduct(h: HElement) -> Element:
    """Diagonal coproduct: every group element is group-like.

    Returned as an Element over two-letter words whose letters are group
    elements.
    """
    return Element({(g, g): c for g, c in h._terms.items()}, alphabet=h.group)


def counit(h: HElement) -> Scalar:
    out = Scalar.zero()
    for _, c in h._terms.items():
        out = out + c
    return out


def antipode(h: HElement) -> HElement:
    return HElement(h.group, {h.group.inverse(g): c for g, c in h._terms.items()})


Matrix = tuple[tuple[Scalar, ...], ...]


def _coerce_matrix(rows, dim: int) -> Matrix:
    matrix = tuple(tuple(Scalar.coerce(entry) for entry in row) for row in rows)
    if len(matrix) != dim or any(len(row) != dim for row in matrix):
        raise StructuralError("action matrix has the wrong shape")
    return matrix


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(n)), Scalar.zero())
            for j in range(n)
        )
        for i in range(n)
    )


def _mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def _identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(Scalar.one() if i == j else Scalar.zero() for j in range(n))
        for i in range(n)
    )


def diagonal_matrix(entries) -> Matrix:
    n = len(entries)
    return tuple(
        tuple(Scalar.coerce(entries[i]) if i == j else Scalar.zero() for j in range(n))
        for i in range(n)
    )


@dataclass(eq=False)
class YDSpec:
    """A based Yetter-Drinfeld module over an abelian group algebra.

    ``degrees[j]`` is the coaction degree of letter j; ``action[k]`` is
    the matrix of the k-th group generator, column j holding the image
    of letter j.  ``mult`` optionally carries structure constants making
    the module an algebra in the category (values are Elements over
    one-letter words; missing pairs mean zero).  ``unit`` optionally
    names a two-sided unit letter.
    """

    group: AbelianGroup
    names: tuple[str, ...]
    degrees: tuple[GroupElement, ...]
    action: tuple[Matrix, ...]
    mult: dict[tuple[int, int], Element] | None = None
    unit: int | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        dim = len(self.names)
        if len(self.degrees) != dim:
            raise StructuralError("one degree per letter is required")
        if len(self.action) != self.group.n_generators:
            raise StructuralError("one action matrix per group generator is required")
        self.action = tuple(_coerce_matrix(m, dim) for m in self.action)
        if self.mult is not None:
            for (a, b), value in self.mult.items():
                for word in value.support():
                    if len(word) != 1 or not (0 <= word[0] < dim):
                        raise StructuralError(
                            f"mult entry for {(a, b)} must be a combination of letters")

    @property
    def dim(self) -> int:
        return len(self.names)

    def letter(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructuralError(f"unknown letter {name!r}") from None

    def mult_entry(self, a: int, b: int) -> Element:
        if self.mult is None:
            raise StructuralError("spec declares no multiplication")
        return self.mult.get((a, b), Element.zero(self))

    # -- action -------------------------------------------------------------

    def _generator_power(self, k: int, e: int) -> Matrix:
        key = ("genpow", k, e)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        if e == 0:
            out = _identity_matrix(self.dim)
        elif e > 0:
            out = _matmul(self._generator_power(k, e - 1), self.action[k])
        else:
            inv = self._cache.get(("geninv", k))
            if inv is None:
                inv = tuple(tuple(row) for row in linalg.inverse(
                    [list(row) for row in self.action[k]]))
                self._cache[("geninv", k)] = inv
            out = _matmul(self._generator_power(k, e + 1), inv)
        self._cache[key] = out
        return out

    def action_matrix(self, g: GroupElement) -> Matrix:
        key = ("act", g)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        exps = g.exponents() if len(g.exponents()) == self.group.n_generators \
            else None
        if exps is None:
            raise StructuralError("group element has the wrong number of exponents")
        out = _identity_matrix(self.dim)
        for k, e in enumerate(exps):
            out = _matmul(out, self._generator_power(k, e))
        self._cache[key] = out
        return out

    def act_letter(self, g: GroupElement, j: int) -> Element:
        matrix = self.action_matrix(g)
        return Element(
            {(i,): matrix[i][j] for i in range(self.dim)}, alphabet=self)

    def act_word(self, g: GroupElement, word: tuple[int, ...]) -> Element:
        """Diagonal action of a group-like on a tensor word, letterwise."""
        out = Element.unit(self)
        for letter in word:
            out = out.tensor(self.act_letter(g, letter))
        return out

    def word_degree(self, word: tuple[int, ...]) -> GroupElement:
        return self.group.product(self.degrees[letter] for letter in word)

    # -- derived structures --------------------------------------------------

    def induced_braiding(self) -> BraidingTable:
        """sigma(v tensor w) = degree(v).w tensor v, extended bilinearly."""
        cached = self._cache.get("braiding")
        if cached is None:
            entries = {}
            for a in range(self.dim):
                deg = self.degrees[a]
                for b in range(self.dim):
                    moved = self.act_letter(deg, b)
                    entries[(a, b)] = Element(
                        {(i, a): c for (i,), c in moved._terms.items()}, alphabet=self)
            cached = BraidingTable(self.dim, entries, alphabet=self)
            self._cache["braiding"] = cached
        return cached

    def with_unit(self, name: str = "one") -> YDSpec:
        """Adjoin a unit letter with neutral degree and trivial action."""
        if self.unit is not None:
            raise StructuralError("spec already has a unit letter")
        if self.mult is None:
            raise StructuralError("cannot adjoin a unit without a multiplication")
        while name in self.names:
            name += "_"
        dim = self.dim
        names = self.names + (name,)
        degrees = self.degrees + (self.group.identity(),)
        action = tuple(
            tuple(
                tuple(list(row) + [Scalar.zero()]) for row in matrix
            ) + ((Scalar.zero(),) * dim + (Scalar.one(),),)
            for matrix in self.action
        )
        mult: dict[tuple[int, int], Element] = {}
        unit = dim
        extended = YDSpec(self.group, names, degrees, action, mult, unit)
        for (a, b), value in (self.mult or {}).items():
            mult[(a, b)] = Element(dict(value._terms), alphabet=extended)
        for a in range(dim + 1):
            mult[(unit, a)] = Element.from_word((a,), alphabet=extended)
            if a != unit:
                mult[(a, unit)] = Element.from_word((a,), alphabet=extended)
        return extended


def check_yetter_drinfeld(spec: YDSpec) -> CheckResult:
    """Structural module axioms plus the action/coaction compatibility.

    The compatibility identity is evaluated as written, for every group
    generator h and basis letter v, on both sides of
    ``h v_(-1) tensor h.v_(0) = (h.v)_(-1) h tensor (h.v)_(0)``.
    """
    group = spec.group
    for k, matrix in enumerate(spec.action):
        for l in range(k + 1, len(spec.action)):
            if not _mat_eq(_matmul(matrix, spec.action[l]),
                           _matmul(spec.action[l], matrix)):
                return fail("action-matrices-commute", (k, l))
    for t, order in enumerate(group.torsion):
        k = group.rank + t
        power = _identity_matrix(spec.dim)
        for _ in range(order):
            power = _matmul(power, spec.action[k])
        if not _mat_eq(power, _identity_matrix(spec.dim)):
            return fail("torsion-order", k)
    for k in range(group.n_generators):
        h = group.generator(k)
        for j in range(spec.dim):
            image = spec.act_letter(h, j)
            lhs = {}
            hd = group.multiply(h, spec.degrees[j])
            for (i,), c in image._terms.items():
                lhs[(hd, i)] = lhs.get((hd, i), Scalar.zero()) + c
            rhs = {}
            for (i,), c in image._terms.items():
                key = (group.multiply(spec.degrees[i], h), i)
                rhs[key] = rhs.get(key, Scalar.zero()) + c
            lhs = {key: c for key, c in lhs.items() if not c.is_zero()}
            rhs = {key: c for key, c in rhs.items() if not c.is_zero()}
            if lhs != rhs:
                return fail("yetter-drinfeld", (spec.names[j], k),
                            Element(lhs), Element(rhs))
    return PASS


def check_yd_module_algebra(spec: YDSpec) -> CheckResult:
    """The multiplication must be a morphism in the category.

    Checks degree preservation (comodule morphism), generator
    equivariance (module morphism), and the braided-algebra axioms for
    the induced braiding; the unit clauses apply when a unit is declared.
    """
    from .qalg import check_braided_algebra  # local import to avoid a cycle

    if spec.mult is None:
        raise StructuralError("spec declares no multiplication")
    group = spec.group
    for a in range(spec.dim):
        for b in range(spec.dim):
            target = group.multiply(spec.degrees[a], spec.degrees[b])
            for (i,), _ in spec.mult_entry(a, b)._terms.items():
                if spec.degrees[i] != target:
                    return fail("mult-degree", (spec.names[a], spec.names[b]),
                                spec.degrees[i], target)
    for k in range(group.n_generators):
        g = group.generator(k)
        for a in range(spec.dim):
            for b in range(spec.dim):
                lhs = spec.mult_entry(a, b).map_words(
                    lambda w: spec.act_letter(g, w[0]), alphabet=spec)
                rhs = Element.zero(spec)
                ga = spec.act_letter(g, a)
                gb = spec.act_letter(g, b)
                for (i,), c in ga._terms.items():
                    for (j,), d in gb._terms.items():
                        rhs = rhs + spec.mult_entry(i, j).scale(c * d)
                if lhs != rhs:
                    return fail("mult-equivariance",
                                (spec.names[a], spec.names[b], k), lhs, rhs)
    if spec.unit is not None:
        if not spec.degrees[spec.unit].is_identity():
            return fail("unit-degree", spec.names[spec.unit])
    return check_braided_algebra(braided_spec(spec))


def braided_spec(spec: YDSpec):
    """The braided algebra on the letters of a YD module algebra."""
    from .qalg import BraidedAlgebraSpec  # local import to avoid a cycle

    cached = spec._cache.get("braided_spec")
    if cached is None:
        if spec.mult is None:
            raise StructuralError("spec declares no multiplication")
        cached = BraidedAlgebraSpec(
            dim=spec.dim,
            braiding=spec.induced_braiding(),
            mult={pair: Element(dict(v._terms), alphabet=spec)
                  for pair, v in spec.mult.items()},
            unit=spec.unit,
            names=spec.names,
            alphabet=spec,
        )
        spec._cache["braided_spec"] = cached
    return cached


def check_induced_braiding(spec: YDSpec) -> CheckResult:
    result = check_yetter_drinfeld(spec)
    if not result:
        return result
    return check_yang_baxter(spec.induced_braiding())
