from __future__ import annotations

import itertools

import pytest

from cofreehopf.cotensor import (
    CotensorElement,
    SmashElement,
    chain_lift,
    chain_lift_word,
    chain_violation,
    check_chain_condition,
    coinvariant_coproduct,
    coinvariant_projection,
    coinvariant_projection_direct,
    coproduct,
    coproduct_pairs,
    counit,
    flatten_coinvariant,
    from_smash,
    key_degree,
    left_degree,
    right_degree,
    right_translate,
    smash_product,
    star,
    to_smash,
)
from cofreehopf.elements import Element
from cofreehopf.errors import StructuralError
from cofreehopf.grouphopf import GroupElement
from cofreehopf.scalars import Scalar


def _keys_up_to(preset, max_degree, tags=None):
    spec = preset.spec
    g = spec.group
    tags = tags or [g.identity(), g.generator(0)]
    keys = list(tags)
    for length in range(1, max_degree + 1):
        for word in itertools.product(range(spec.dim), repeat=length):
            for tag in tags:
                keys.append(right_translate(spec, chain_lift_word(spec, word), tag))
    return keys


# -- chain condition -----------------------------------------------------------


def test_chain_lift_images_satisfy_chain_condition(clifford2, uqg_a2):
    for preset in (clifford2, uqg_a2):
        spec = preset.spec
        for word in itertools.product(range(spec.dim), repeat=3):
            key = chain_lift_word(spec, word)
            assert chain_violation(spec, key) is None
            assert right_degree(spec, key).is_identity()


def test_chain_condition_failure_at_first_cut(clifford2):
    spec = clifford2.spec
    e = spec.group.identity()
    # (v1, 1) then (v2, 1): the cut requires 1 = degree(v2) * 1 = eps
    word = ((0, e), (1, e))
    assert chain_violation(spec, word) == 1
    result = check_chain_condition(spec, {word: Scalar.one()})
    assert not result
    assert result.witness == (word, 1)
    with pytest.raises(StructuralError):
        CotensorElement.from_word(spec, word)


def test_single_letter_always_passes(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    for v in range(spec.dim):
        assert chain_violation(spec, ((v, eps),)) is None


def test_chain_condition_matches_kernel_condition(clifford2, uqg_a2):
    # independent oracle: evaluate id (x) delta_L - delta_R (x) id on m (x) n
    for preset in (clifford2, uqg_a2):
        spec = preset.spec
        g = spec.group
        tags = [g.identity(), g.generator(0)]
        letters = [(v, t) for v in range(spec.dim) for t in tags]
        for m in letters[: spec.dim + 2]:
            for n in letters[: spec.dim + 2]:
                middle_left = g.multiply(spec.degrees[n[0]], n[1])
                middle_right = m[1]
                kernel_zero = middle_left == middle_right
                assert kernel_zero == (chain_violation(spec, (m, n)) is None)


# -- coproduct and counit ---------------------------------------------------------


def test_coproduct_of_group_element_is_grouplike(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    assert coproduct_pairs(spec, eps) == [(eps, eps)]


def test_coproduct_of_degree_one_letter(clifford2):
    spec = clifford2.spec
    e = spec.group.identity()
    eps = spec.group.element([1])
    key = ((0, e),)  # v1 with trivial tag; left degree is eps
    pairs = coproduct_pairs(spec, key)
    assert pairs == [(eps, key), (key, e)]


def test_coproduct_of_degree_two_word_has_three_terms(clifford2):
    spec = clifford2.spec
    key = chain_lift_word(spec, (0, 1))
    pairs = coproduct_pairs(spec, key)
    assert len(pairs) == 3
    assert pairs[0][0] == left_degree(spec, key)
    assert pairs[1] == (key[:1], key[1:])
    assert pairs[2][1] == right_degree(spec, key)


def test_counit_kills_positive_degrees(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    x = CotensorElement.from_group(spec, eps, 2) \
        + CotensorElement.from_word(spec, chain_lift_word(spec, (0,)), 5)
    assert counit(x) == Scalar.rational(2)


def test_component_accessors(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    word1 = chain_lift_word(spec, (0,))
    word2 = chain_lift_word(spec, (0, 1))
    x = CotensorElement.from_group(spec, eps, 2) \
        + CotensorElement.from_word(spec, word1, 3) \
        + CotensorElement.from_word(spec, word2)
    assert x.h_part()._terms == {eps: Scalar.rational(2)}
    assert x.degree_component(1) == CotensorElement.from_word(spec, word1, 3)
    assert x.degree_component(2) == CotensorElement.from_word(spec, word2)
    assert x.max_degree() == 2
    assert key_degree(eps) == 0 and key_degree(word2) == 2


def test_coassociativity_and_counit_laws(clifford2, uqg_a2):
    for preset in (clifford2, uqg_a2):
        spec = preset.spec
        for key in _keys_up_to(preset, 2)[:30]:
            pairs = coproduct_pairs(spec, key)
            lhs: dict[tuple, int] = {}
            rhs: dict[tuple, int] = {}
            left_counit: dict[object, int] = {}
            right_counit: dict[object, int] = {}
            for a, b in pairs:
                for a1, a2 in coproduct_pairs(spec, a):
                    lhs[(a1, a2, b)] = lhs.get((a1, a2, b), 0) + 1
                for b1, b2 in coproduct_pairs(spec, b):
                    rhs[(a, b1, b2)] = rhs.get((a, b1, b2), 0) + 1
                if key_degree(a) == 0:
                    left_counit[b] = left_counit.get(b, 0) + 1
                if key_degree(b) == 0:
                    right_counit[a] = right_counit.get(a, 0) + 1
            assert lhs == rhs
            assert left_counit == {key: 1}
            assert right_counit == {key: 1}


# -- the star product ------------------------------------------------------------


def test_star_of_group_elements_is_group_product(uqg_a2):
    spec = uqg_a2.spec
    g = spec.group
    k1, k2 = g.generator(0), g.generator(1)
    out = star(CotensorElement.from_group(spec, k1),
               CotensorElement.from_group(spec, g.multiply(k2, k2)))
    assert out == CotensorElement.from_group(spec, g.element([1, 2]))


def test_star_with_group_on_the_left_is_the_left_action(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    e = spec.group.identity()
    m = CotensorElement.from_word(spec, ((0, e),))
    out = star(CotensorElement.from_group(spec, eps), m)
    assert out == CotensorElement.from_word(spec, ((0, eps),), -1)


def test_star_with_group_on_the_right_is_the_right_action(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    word = chain_lift_word(spec, (0, 1))
    out = star(CotensorElement.from_word(spec, word),
               CotensorElement.from_group(spec, eps))
    assert out == CotensorElement.from_word(
        spec, right_translate(spec, word, eps))


def test_star_clifford_anticommutator(clifford2):
    spec = clifford2.spec
    v1 = CotensorElement.from_word(spec, chain_lift_word(spec, (0,)))
    v2 = CotensorElement.from_word(spec, chain_lift_word(spec, (1,)))
    xi12 = CotensorElement.from_word(spec, chain_lift_word(spec, (3,)))
    assert star(v1, v2) + star(v2, v1) == xi12


def test_star_outputs_satisfy_chain_condition(clifford2, uqg_a2):
    for preset in (clifford2, uqg_a2):
        spec = preset.spec
        keys = _keys_up_to(preset, 2)[:14]
        for kx in keys:
            for ky in keys[:7]:
                out = star(CotensorElement(spec, {kx: Scalar.one()}),
                           CotensorElement(spec, {ky: Scalar.one()}))
                assert check_chain_condition(spec, out)


def test_star_associativity_small_degrees(clifford2, uqg_a2):
    for preset in (clifford2, uqg_a2):
        spec = preset.spec
        keys = _keys_up_to(preset, 2)
        sample = keys[1:4] + keys[-3:]
        for ka, kb, kc in itertools.islice(itertools.product(sample, repeat=3), 40):
            a = CotensorElement(spec, {ka: Scalar.one()})
            b = CotensorElement(spec, {kb: Scalar.one()})
            c = CotensorElement(spec, {kc: Scalar.one()})
            assert star(star(a, b), c) == star(a, star(b, c))


def test_star_bialgebra_compatibility(clifford2):
    spec = clifford2.spec
    keys = _keys_up_to(clifford2, 1) + [chain_lift_word(spec, (0, 1))]
    for ka, kb in itertools.islice(itertools.product(keys, repeat=2), 30):
        a = CotensorElement(spec, {ka: Scalar.one()})
        b = CotensorElement(spec, {kb: Scalar.one()})
        lhs = coproduct(star(a, b))
        rhs: dict[tuple, Scalar] = {}
        for a1, a2 in coproduct_pairs(spec, ka):
            for b1, b2 in coproduct_pairs(spec, kb):
                left = star(CotensorElement(spec, {a1: Scalar.one()}),
                            CotensorElement(spec, {b1: Scalar.one()}))
                right = star(CotensorElement(spec, {a2: Scalar.one()}),
                             CotensorElement(spec, {b2: Scalar.one()}))
                for kl, cl in left._terms.items():
                    for kr, cr in right._terms.items():
                        key = (kl, kr)
                        s = rhs.get(key, Scalar.zero()) + cl * cr
                        if s.is_zero():
                            rhs.pop(key, None)
                        else:
                            rhs[key] = s
        assert lhs == Element(rhs, lhs.alphabet)


def test_star_with_group_acts_diagonally_on_higher_degrees(clifford2, uqg_a2):
    # the left action of a group-like on a degree-2 chain word multiplies
    # through both pairs; the product recovers this without a dedicated
    # left-action code path
    for preset in (clifford2, uqg_a2):
        spec = preset.spec
        g = spec.group
        h = g.generator(0)
        for word in itertools.islice(itertools.product(range(spec.dim), repeat=2), 8):
            key = chain_lift_word(spec, word)
            got = star(CotensorElement.from_group(spec, h),
                       CotensorElement.from_word(spec, key))
            combos = [((), Scalar.one())]
            for v, t in key:
                img = spec.act_letter(h, v)
                combos = [
                    (w + ((i, g.multiply(h, t)),), c * c2)
                    for w, c in combos
                    for (i,), c2 in img._terms.items()
                ]
            expected: dict = {}
            for w, c in combos:
                expected[w] = expected.get(w, Scalar.zero()) + c
            assert got == CotensorElement(spec, expected)


# -- coinvariant projection --------------------------------------------------------


def test_projection_of_group_element_is_unit(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    out = coinvariant_projection(CotensorElement.from_group(spec, eps))
    assert out == CotensorElement.unit(spec)


def test_projection_strips_the_trailing_group_part(uqg_a2):
    spec = uqg_a2.spec
    k1 = spec.group.generator(0)
    key = right_translate(spec, chain_lift_word(spec, (0,)), k1)
    out = coinvariant_projection(CotensorElement.from_word(spec, key))
    assert out == CotensorElement.from_word(spec, chain_lift_word(spec, (0,)))


def test_projection_idempotent_and_matches_direct_form(clifford2, uqg_a2):
    for preset in (clifford2, uqg_a2):
        spec = preset.spec
        for key in _keys_up_to(preset, 2)[:20]:
            x = CotensorElement(spec, {key: Scalar.q_power(1)})
            once = coinvariant_projection(x)
            assert once == coinvariant_projection_direct(x)
            assert coinvariant_projection(once) == once


# -- flatten / chain lift -----------------------------------------------------------


def test_flatten_single_letter(clifford2):
    spec = clifford2.spec
    e = spec.group.identity()
    x = CotensorElement.from_word(spec, ((0, e),))
    assert flatten_coinvariant(x) == Element.from_word((0,), alphabet=spec)


def test_flatten_requires_coinvariance(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    x = CotensorElement.from_word(spec, ((0, eps),))
    with pytest.raises(StructuralError):
        flatten_coinvariant(x)
    with pytest.raises(StructuralError):
        flatten_coinvariant(CotensorElement.from_group(spec, eps))


def test_round_trips_on_words_up_to_degree_three(clifford2, uqg_a2):
    for preset in (clifford2, uqg_a2):
        spec = preset.spec
        for length in range(4):
            for word in itertools.islice(
                    itertools.product(range(spec.dim), repeat=length), 30):
                x = Element.from_word(word, alphabet=spec)
                assert flatten_coinvariant(chain_lift(spec, x)) == x
        for key in _keys_up_to(preset, 3, tags=[spec.group.identity()])[:40]:
            x = CotensorElement(spec, {key: Scalar.one()})
            assert chain_lift(spec, flatten_coinvariant(x)) == x


def test_chain_lift_two_letters(clifford2):
    spec = clifford2.spec
    e = spec.group.identity()
    eps = spec.group.element([1])
    # second letter has degree eps, so the first group part is eps
    assert chain_lift_word(spec, (0, 1)) == ((0, eps), (1, e))


# -- smash product -----------------------------------------------------------------


def test_smash_with_unit_word_legs(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    y = SmashElement.of(spec, (1,))
    left = smash_product(SmashElement.of(spec, (), eps), y)
    assert left == SmashElement.of(spec, (1,), eps, -1)
    x = SmashElement.of(spec, (0, 1))
    right = smash_product(x, SmashElement.of(spec, (), eps))
    assert right == SmashElement.of(spec, (0, 1), eps)


def test_smash_clifford_expansion(clifford2):
    spec = clifford2.spec
    out = smash_product(SmashElement.of(spec, (0,)), SmashElement.of(spec, (1,)))
    e = spec.group.identity()
    expected = SmashElement.of(spec, (0, 1)) - SmashElement.of(spec, (1, 0)) \
        + SmashElement.of(spec, (3,))
    assert out == expected
    assert expected._terms[((0, 1), e)] == Scalar.one()


def test_to_smash_values(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    assert to_smash(CotensorElement.from_group(spec, eps)) \
        == SmashElement.of(spec, (), eps)
    key = right_translate(spec, chain_lift_word(spec, (0, 1)), eps)
    assert to_smash(CotensorElement.from_word(spec, key)) \
        == SmashElement.of(spec, (0, 1), eps)


def test_from_smash_values(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    assert from_smash(SmashElement.of(spec, (), eps)) \
        == CotensorElement.from_group(spec, eps)
    assert from_smash(SmashElement.of(spec, (0,))) \
        == CotensorElement.from_word(spec, chain_lift_word(spec, (0,)))


def test_smash_round_trips(clifford2, uqg_a2):
    for preset in (clifford2, uqg_a2):
        spec = preset.spec
        g = spec.group
        tags = [g.identity(), g.generator(0)]
        for length in range(3):
            for word in itertools.islice(
                    itertools.product(range(spec.dim), repeat=length), 12):
                for tag in tags:
                    s = SmashElement.of(spec, word, tag, Scalar.q_power(1))
                    assert to_smash(from_smash(s)) == s
        for key in _keys_up_to(preset, 2)[:20]:
            x = CotensorElement(spec, {key: Scalar.one()})
            assert from_smash(to_smash(x)) == x


def test_cross_path_product_equality(clifford2, uqg_a2):
    # multiplying then splitting equals splitting then smash-multiplying
    for preset in (clifford2, uqg_a2):
        spec = preset.spec
        keys = _keys_up_to(preset, 2)[:12]
        for kx in keys:
            for ky in keys[:6]:
                x = CotensorElement(spec, {kx: Scalar.one()})
                y = CotensorElement(spec, {ky: Scalar.one()})
                assert to_smash(star(x, y)) == smash_product(to_smash(x), to_smash(y))


# -- coinvariant coproduct -----------------------------------------------------------


def test_coinvariant_coproduct_of_letter(clifford2):
    spec = clifford2.spec
    e = spec.group.identity()
    key = ((0, e),)
    out = coinvariant_coproduct(CotensorElement.from_word(spec, key))
    assert out == Element({(e, key): 1, (key, e): 1}, out.alphabet)


def test_coinvariant_coproduct_of_scalar(clifford2):
    spec = clifford2.spec
    eps = spec.group.element([1])
    out = coinvariant_coproduct(CotensorElement.from_group(spec, eps))
    e = spec.group.identity()
    assert out == Element({(e, e): 1}, out.alphabet)


def test_coinvariant_coproduct_flattens_to_deconcatenation(clifford2, uqg_a2):
    from cofreehopf.qalg import deconcat
    for preset in (clifford2, uqg_a2):
        spec = preset.spec
        for word in itertools.islice(
                itertools.product(range(spec.dim), repeat=2), 12):
            x = CotensorElement.from_word(spec, chain_lift_word(spec, word))
            pairs = coinvariant_coproduct(x)
            flattened: dict[tuple, Scalar] = {}
            for (k1, k2), c in pairs._terms.items():
                w1 = () if isinstance(k1, GroupElement) else tuple(v for v, _ in k1)
                w2 = () if isinstance(k2, GroupElement) else tuple(v for v, _ in k2)
                s = flattened.get((w1, w2), Scalar.zero()) + c
                flattened[(w1, w2)] = s
            flattened = {k: v for k, v in flattened.items() if not v.is_zero()}
            assert flattened == deconcat(Element.from_word(word, alphabet=spec))._terms
