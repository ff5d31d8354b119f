"""Turn-key module algebras: universal Clifford data and the universal
quantum-group data for an integral matrix.

The Clifford family lives over Z/2: each generator letter has odd
degree and is negated by the group generator, the bracket letters
xi_ij (declared for i <= j only) are even and fixed, and the product of
two generator letters in increasing order is the matching bracket
letter; reversed-order products are zero and the diagonal products
carry the polarization factor 1/2.  Those coefficients are exactly the
ones that make the anticommutator of two generators close on a single
bracket letter for every pair, the diagonal included.

The quantum-group family lives over Z^n with one invertible group
generator K_i per row of the integral matrix: E_j scales by q^{c_ij},
F_j by q^{-c_ij}, the bracket letter xi_i is fixed, degrees are K_i,
K_i and K_i^2, and the only nonzero products are E_i F_i = xi_i.

Builders run every structural validator once and cache the result, so
downstream checks can assume well-formed data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .braid import check_yang_baxter
from .checks import PASS, CheckResult, fail
from .cotensor import (
    CotensorElement,
    SmashElement,
    chain_lift_word,
    smash_product,
    star,
)
from .elements import Element
from .errors import StructuralError
from .grouphopf import (
    AbelianGroup,
    YDSpec,
    check_yd_module_algebra,
    check_yetter_drinfeld,
    diagonal_matrix,
)
from .scalars import Scalar


@dataclass(eq=False)
class CliffordPreset:
    n: int
    spec: YDSpec

    def v(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise StructuralError(f"generator index out of range: {i}")
        return i - 1

    def xi(self, i: int, j: int) -> int:
        if not 1 <= i <= j <= self.n:
            raise StructuralError(f"bracket index out of range: {(i, j)}")
        offset = sum(self.n - k for k in range(i - 1))
        return self.n + offset + (j - i)


@dataclass(eq=False)
class UqgPreset:
    cartan: tuple[tuple[int, ...], ...]
    spec: YDSpec

    @property
    def n(self) -> int:
        return len(self.cartan)

    def e(self, i: int) -> int:
        return i - 1

    def f(self, i: int) -> int:
        return self.n + i - 1

    def xi(self, i: int) -> int:
        return 2 * self.n + i - 1


def _validate(spec: YDSpec) -> None:
    for result in (
        check_yetter_drinfeld(spec),
        check_yd_module_algebra(spec),
        check_yang_baxter(spec.induced_braiding()),
    ):
        if not result:
            raise StructuralError(f"preset failed validation: {result.describe()}")


@lru_cache(maxsize=None)
def build_clifford(n: int) -> CliffordPreset:
    if n < 1:
        raise StructuralError("at least one generator is required")
    group = AbelianGroup(rank=0, torsion=(2,))
    eps = group.element([1])
    neutral = group.identity()
    names = [f"v{i}" for i in range(1, n + 1)]
    degrees = [eps] * n
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            names.append(f"xi{i}{j}")
            degrees.append(neutral)
    dim = len(names)
    action = (diagonal_matrix(
        [Scalar.rational(-1)] * n + [Scalar.one()] * (dim - n)),)
    spec = YDSpec(group, tuple(names), tuple(degrees), action, mult={})
    preset = CliffordPreset(n, spec)
    mult: dict[tuple[int, int], Element] = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            # The diagonal carries the polarization factor 1/2: only then
            # does the anticommutator of a generator with itself close on a
            # single bracket letter, since both ordered products coincide.
            coeff = Fraction(1, 2) if i == j else 1
            mult[(preset.v(i), preset.v(j))] = Element.from_word(
                (preset.xi(i, j),), coeff, alphabet=spec)
    spec.mult = mult
    _validate(spec)
    return preset


def check_clifford_relations(preset: CliffordPreset) -> CheckResult:
    """Anticommutators of generator letters equal the bracket letters,
    along both product routes, plus the group-conjugation sign rule."""
    spec = preset.spec
    eps = spec.group.element([1])
    for i in range(1, preset.n + 1):
        for j in range(i, preset.n + 1):
            vi = CotensorElement.from_word(spec, chain_lift_word(spec, (preset.v(i),)))
            vj = CotensorElement.from_word(spec, chain_lift_word(spec, (preset.v(j),)))
            expected = CotensorElement.from_word(
                spec, chain_lift_word(spec, (preset.xi(i, j),)))
            got = star(vi, vj) + star(vj, vi)
            if got != expected:
                return fail("clifford-anticommutator", (i, j), got, expected)
            si = SmashElement.of(spec, (preset.v(i),))
            sj = SmashElement.of(spec, (preset.v(j),))
            sxi = SmashElement.of(spec, (preset.xi(i, j),))
            got_smash = smash_product(si, sj) + smash_product(sj, si)
            if got_smash != sxi:
                return fail("clifford-anticommutator-smash", (i, j), got_smash, sxi)
    for i in range(1, preset.n + 1):
        lhs = smash_product(
            SmashElement.of(spec, (), eps), SmashElement.of(spec, (preset.v(i),)))
        rhs = SmashElement.of(spec, (preset.v(i),), eps, coeff=-1)
        if lhs != rhs:
            return fail("clifford-conjugation", i, lhs, rhs)
        fixed = smash_product(
            SmashElement.of(spec, (), eps),
            SmashElement.of(spec, (preset.xi(i, i),)))
        if fixed != SmashElement.of(spec, (preset.xi(i, i),), eps):
            return fail("clifford-conjugation", (i, i), fixed, None)
    return PASS


@lru_cache(maxsize=None)
def _build_uqg_cached(cartan: tuple[tuple[int, ...], ...]) -> UqgPreset:
    n = len(cartan)
    if n < 1 or any(len(row) != n for row in cartan):
        raise StructuralError("a square integral matrix is required")
    group = AbelianGroup(rank=n)
    names = [f"E{i}" for i in range(1, n + 1)] \
        + [f"F{i}" for i in range(1, n + 1)] \
        + [f"xi{i}" for i in range(1, n + 1)]
    degrees = []
    for i in range(n):
        exps = [0] * n
        exps[i] = 1
        degrees.append(group.element(exps))
    degrees = degrees + degrees[:] + [
        group.element([2 if k == i else 0 for k in range(n)]) for i in range(n)]
    action = []
    for k in range(n):
        diag = [Scalar.q_power(cartan[k][j]) for j in range(n)] \
            + [Scalar.q_power(-cartan[k][j]) for j in range(n)] \
            + [Scalar.one()] * n
        action.append(diagonal_matrix(diag))
    spec = YDSpec(group, tuple(names), tuple(degrees), tuple(action), mult={})
    preset = UqgPreset(cartan, spec)
    mult: dict[tuple[int, int], Element] = {}
    for i in range(1, n + 1):
        mult[(preset.e(i), preset.f(i))] = Element.from_word(
            (preset.xi(i),), alphabet=spec)
    spec.mult = mult
    _validate(spec)
    return preset


def build_uqg(cartan) -> UqgPreset:
    return _build_uqg_cached(tuple(tuple(int(e) for e in row) for row in cartan))


def check_uqg_relations(preset: UqgPreset) -> CheckResult:
    """E_i * F_j - q^{-c_ij} F_j * E_i = delta_ij xi_i along both routes,
    and conjugation by the group generators scales E_j by q^{c_ij}."""
    spec = preset.spec
    group = spec.group
    n = preset.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c_ij = preset.cartan[i - 1][j - 1]
            ei = CotensorElement.from_word(spec, chain_lift_word(spec, (preset.e(i),)))
            fj = CotensorElement.from_word(spec, chain_lift_word(spec, (preset.f(j),)))
            got = star(ei, fj) - star(fj, ei).scale(Scalar.q_power(-c_ij))
            expected = CotensorElement.zero(spec)
            if i == j:
                expected = CotensorElement.from_word(
                    spec, chain_lift_word(spec, (preset.xi(i),)))
            if got != expected:
                return fail("uqg-commutator", (i, j), got, expected)
            se = SmashElement.of(spec, (preset.e(i),))
            sf = SmashElement.of(spec, (preset.f(j),))
            got_smash = smash_product(se, sf) \
                - smash_product(sf, se).scale(Scalar.q_power(-c_ij))
            expected_smash = SmashElement.zero(spec)
            if i == j:
                expected_smash = SmashElement.of(spec, (preset.xi(i),))
            if got_smash != expected_smash:
                return fail("uqg-commutator-smash", (i, j), got_smash, expected_smash)
    for i in range(1, n + 1):
        k_i = group.generator(i - 1)
        k_inv = group.inverse(k_i)
        for j in range(1, n + 1):
            conj = smash_product(
                smash_product(SmashElement.of(spec, (), k_i),
                              SmashElement.of(spec, (preset.e(j),))),
                SmashElement.of(spec, (), k_inv))
            expected = SmashElement.of(
                spec, (preset.e(j),), coeff=Scalar.q_power(preset.cartan[i - 1][j - 1]))
            if conj != expected:
                return fail("uqg-conjugation", (i, j), conj, expected)
    return PASS
