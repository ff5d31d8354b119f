from __future__ import annotations

import itertools

import pytest

from cofreehopf.cotensor import CotensorElement, SmashElement, chain_lift_word
from cofreehopf.elements import Element
from cofreehopf.errors import StructuralError
from cofreehopf.grouphopf import braided_spec
from cofreehopf.qalg import adjoin_unit, quasi_shuffle
from cofreehopf.rotabaxter import (
    RBInstance,
    check_double_product_isomorphism,
    check_rota_baxter,
    cotensor_rb_operator,
    diamond_product,
    diamond_rb_instance,
    head_shift,
    qsh_rb_instance,
    rb_double_product,
    smash_rb_instance,
    smash_rb_operator,
    star_rb_instance,
    unit_prepend,
)
from cofreehopf.scalars import Scalar


@pytest.fixture(scope="module")
def unital_clifford(clifford2):
    return adjoin_unit(braided_spec(clifford2.spec))


@pytest.fixture(scope="module")
def unital_yd(clifford2):
    return clifford2.spec.with_unit()


def _words(spec, total):
    out = []
    for length in range(total + 1):
        out.extend(itertools.product(range(spec.dim), repeat=length))
    return out


def _elem(spec, word, coeff=1):
    return Element.from_word(word, coeff, spec.alphabet)


# -- the basic operator -------------------------------------------------------


def test_operator_on_scalars_and_words(unital_clifford):
    spec = unital_clifford
    unit = spec.unit
    lam = Element.from_word((), Scalar.q_power(2), spec.alphabet)
    assert unit_prepend(spec, lam) == _elem(spec, (unit,), Scalar.q_power(2))
    assert unit_prepend(spec, _elem(spec, (0, 1))) == _elem(spec, (unit, 0, 1))
    twice = unit_prepend(spec, unit_prepend(spec, _elem(spec, (0,))))
    assert twice == _elem(spec, (unit, unit, 0))


def test_operator_requires_a_unit(clifford2):
    spec = braided_spec(clifford2.spec)
    with pytest.raises(StructuralError):
        unit_prepend(spec, _elem(spec, (0,)))


def test_rb_identity_on_scalar_pairs(unital_clifford):
    spec = unital_clifford
    inst = qsh_rb_instance(spec)
    pairs = [(Element.from_word((), 2, spec.alphabet),
              Element.from_word((), Scalar.q_power(-1), spec.alphabet))]
    assert check_rota_baxter(inst, pairs)


def test_rb_identity_on_basis_words(unital_clifford):
    spec = unital_clifford
    inst = qsh_rb_instance(spec)
    words = _words(spec, 2)
    pairs = [(_elem(spec, u), _elem(spec, v))
             for u in words for v in words if len(u) + len(v) <= 3]
    assert check_rota_baxter(inst, pairs)


def test_rb_identity_fails_with_corrupted_weight(unital_clifford):
    spec = unital_clifford
    inst = RBInstance(lambda x, y: quasi_shuffle(spec, x, y),
                      lambda x: unit_prepend(spec, x),
                      Scalar.rational(2))
    pairs = [(_elem(spec, (0,)), _elem(spec, (1,)))]
    result = check_rota_baxter(inst, pairs)
    assert not result
    assert result.law == "rota-baxter"


def test_scaled_operator_has_scaled_weight(unital_clifford):
    spec = unital_clifford
    inst = qsh_rb_instance(spec)
    pairs = [(_elem(spec, u), _elem(spec, v))
             for u in _words(spec, 1) for v in _words(spec, 1)]
    for factor in (Scalar.q_power(1), Scalar.rational(-1)):
        assert check_rota_baxter(inst.scaled(factor), pairs)


# -- the double product ----------------------------------------------------------


def test_double_product_with_zero_operator_is_weighted_product(unital_clifford):
    spec = unital_clifford
    lam = Scalar.q_power(3)
    inst = RBInstance(lambda x, y: quasi_shuffle(spec, x, y),
                      lambda x: Element.zero(spec.alphabet), lam)
    x, y = _elem(spec, (0,)), _elem(spec, (1,))
    assert rb_double_product(inst, x, y) == quasi_shuffle(spec, x, y).scale(lam)


def test_diamond_product_base_case(unital_clifford):
    spec = unital_clifford
    out = diamond_product(spec, _elem(spec, (0,)), _elem(spec, (1,)))
    assert out == _elem(spec, (3,))  # the heads multiply to xi12


def test_head_shift_formula(unital_clifford):
    spec = unital_clifford
    assert head_shift(spec, _elem(spec, (0, 1))) \
        == _elem(spec, (spec.unit, 0, 1))
    with pytest.raises(StructuralError):
        head_shift(spec, Element.unit(spec.alphabet))


def test_diamond_product_associativity(unital_clifford):
    spec = unital_clifford
    heads = [(0,), (1,), (5,), (0, 1)]
    for u, v, w in itertools.islice(itertools.product(heads, repeat=3), 30):
        x, y, z = (_elem(spec, t) for t in (u, v, w))
        assert diamond_product(spec, diamond_product(spec, x, y), z) \
            == diamond_product(spec, x, diamond_product(spec, y, z))


def test_diamond_instance_is_rota_baxter(unital_clifford):
    spec = unital_clifford
    inst = diamond_rb_instance(spec)
    heads = [(0,), (1,), (0, 1)]
    pairs = [(_elem(spec, u), _elem(spec, v)) for u in heads for v in heads]
    assert check_rota_baxter(inst, pairs)


def test_double_product_transports_to_quasi_shuffle(unital_clifford):
    spec = unital_clifford
    pairs = []
    for u in [(0,), (1,), (0, 1)]:
        for v in [(0,), (1,), (1, 0)]:
            pairs.append((_elem(spec, u), _elem(spec, v)))
    assert check_double_product_isomorphism(spec, pairs)


def test_double_product_detects_corrupted_operator(unital_clifford):
    spec = unital_clifford
    bad = RBInstance(lambda x, y: diamond_product(spec, x, y),
                     lambda x: Element(
                         {(0,) + w: c for w, c in x._terms.items()}, x.alphabet),
                     Scalar.one())
    x, y = _elem(spec, (1,)), _elem(spec, (1,))
    assert rb_double_product(bad, x, y) != quasi_shuffle(spec, x, y)


# -- smash and cotensor operators -------------------------------------------------


def test_smash_operator_formulas(unital_yd):
    spec = unital_yd
    eps = spec.group.element([1])
    s = SmashElement.of(spec, (0,), eps)
    assert smash_rb_operator(s) == SmashElement.of(spec, (spec.unit, 0), eps)
    lam = SmashElement.of(spec, (), eps, Scalar.q_power(1))
    assert smash_rb_operator(lam) \
        == SmashElement.of(spec, (spec.unit,), eps, Scalar.q_power(1))


def test_smash_operator_needs_unit(clifford2):
    s = SmashElement.of(clifford2.spec, (0,))
    with pytest.raises(StructuralError):
        smash_rb_operator(s)


def test_smash_instance_is_rota_baxter(unital_yd):
    spec = unital_yd
    inst = smash_rb_instance(spec)
    tags = [spec.group.identity(), spec.group.element([1])]
    elems = [SmashElement.of(spec, w, t)
             for w in [(), (0,), (1,), (0, 1)] for t in tags]
    pairs = [(a, b) for a in elems for b in elems[:4]]
    assert check_rota_baxter(inst, pairs)


def test_cotensor_operator_conjugates_the_smash_one(unital_yd):
    spec = unital_yd
    e = spec.group.identity()
    eps = spec.group.element([1])
    x = CotensorElement.from_word(spec, ((0, eps),))
    out = cotensor_rb_operator(x)
    # P(v1 # eps) = (one (x) v1) # eps; the chain word carries degree(v1)*eps
    # = 1 on the unit letter and eps on the trailing letter
    expected = CotensorElement.from_word(spec, ((spec.unit, e), (0, eps)))
    assert out == expected


def test_star_instance_is_rota_baxter(unital_yd):
    spec = unital_yd
    inst = star_rb_instance(spec)
    e = spec.group.identity()
    eps = spec.group.element([1])
    elems = [
        CotensorElement.from_group(spec, eps),
        CotensorElement.from_word(spec, ((0, e),)),
        CotensorElement.from_word(spec, ((1, eps),)),
        CotensorElement.from_word(spec, chain_lift_word(spec, (0, 1))),
    ]
    pairs = [(a, b) for a in elems for b in elems]
    assert check_rota_baxter(inst, pairs)
