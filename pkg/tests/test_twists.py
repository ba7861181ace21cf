import random
from itertools import product

import pytest

from orbispin import (
    OddOrder,
    RootTuple,
    StandardForm,
    TwistGenerator,
    TwistWord,
    a_invariant,
    apply_generator,
    apply_word,
    canonical_form,
    reduce_with_witness,
    standard_generators,
    w_value,
)


def _all_unit_generators(genus):
    gens = list(standard_generators(genus))
    return gens + [g.inverse() for g in gens]


@pytest.mark.parametrize(
    "r,coords,gen,expected",
    [
        (5, (2, 3), TwistGenerator("U", 1), (2, 1)),
        (5, (2, 3), TwistGenerator("V", 1), (0, 3)),
        (4, (0, 0, 0, 0), TwistGenerator("W", 1), (0, 3, 0, 1)),
        (5, (1, 0, 2, 0), TwistGenerator("W", 1), (1, 0, 2, 0)),  # shift vanishes
        (5, (2, 3), TwistGenerator("U", 1, -1), (2, 0)),
        (5, (2, 3), TwistGenerator("V", 1, 2), (3, 3)),
    ],
)
def test_apply_generator_formulas(r, coords, gen, expected):
    assert apply_generator(RootTuple(r, coords), gen).coords == expected


def test_powers_iterate_the_unit_twist():
    for r, genus in [(5, 1), (4, 2), (3, 2)]:
        for coords in product(range(r), repeat=2 * genus):
            root = RootTuple(r, coords)
            for gen in standard_generators(genus):
                for m in (2, 3, -2):
                    stepped = root
                    unit = TwistGenerator(gen.family, gen.index, 1 if m > 0 else -1)
                    for _ in range(abs(m)):
                        stepped = apply_generator(stepped, unit)
                    assert stepped == apply_generator(
                        root, TwistGenerator(gen.family, gen.index, m)
                    )


def test_generator_inverse_cancels_exhaustively():
    for r, genus in [(2, 1), (5, 1), (2, 2), (4, 2), (3, 3)]:
        for coords in product(range(r), repeat=2 * genus):
            root = RootTuple(r, coords)
            for gen in _all_unit_generators(genus):
                assert apply_generator(apply_generator(root, gen), gen.inverse()) == root


def test_apply_word_identity_and_inverse():
    root = RootTuple(4, (0, 0, 0, 0))
    assert apply_word(root, TwistWord()) == root
    w12 = TwistGenerator("W", 1)
    assert apply_word(root, TwistWord((w12, w12.inverse()))) == root

    rng = random.Random(7)
    gens = _all_unit_generators(2)
    for _ in range(50):
        root = RootTuple(6, tuple(rng.randrange(6) for _ in range(4)))
        word = TwistWord(tuple(rng.choices(gens, k=12)))
        assert apply_word(apply_word(root, word), word.inverse()) == root


def test_index_range_errors():
    with pytest.raises(ValueError):
        apply_generator(RootTuple(3, (0, 0)), TwistGenerator("U", 2))
    with pytest.raises(ValueError):
        apply_generator(RootTuple(3, (0, 0)), TwistGenerator("W", 1))  # needs genus >= 2
    with pytest.raises(ValueError):
        TwistGenerator("X", 1)
    with pytest.raises(ValueError):
        TwistGenerator("U", 1, 0)


def test_w_value():
    for r in (2, 3, 5, 8):
        for d1 in range(r):
            for d2 in range(r):
                assert w_value(RootTuple(r, (0, d1, 0, d2)), 1) == 1 % r
    assert w_value(RootTuple(5, (1, 0, 2, 0)), 1) == 0
    assert w_value(RootTuple(2, (1, 1, 0, 0)), 1) == 0
    with pytest.raises(ValueError):
        w_value(RootTuple(5, (1, 0)), 1)


def test_a_invariant_values():
    assert a_invariant(RootTuple(2, (0, 0, 0, 0))) == 0
    assert a_invariant(RootTuple(2, (0, 0, 0, 1))) == 1
    assert a_invariant(RootTuple(2, (0, 0, 0, 0, 0, 0))) == 1
    assert a_invariant(RootTuple(4, (1, 1, 1, 1))) == 0
    with pytest.raises(OddOrder):
        a_invariant(RootTuple(3, (0, 0)))


def test_a_invariance_under_twists_exhaustive_g2():
    for r in (2, 4):
        gens = _all_unit_generators(2)
        for coords in product(range(r), repeat=4):
            root = RootTuple(r, coords)
            parity = a_invariant(root)
            for gen in gens:
                assert a_invariant(apply_generator(root, gen)) == parity


@pytest.mark.parametrize(
    "r,coords,kind,d",
    [
        (6, (4, 2), "genus1", 2),
        (6, (0, 0), "genus1", 6),
        (5, (0, 0), "genus1", 5),
        (6, (1, 4), "genus1", 1),
        (3, (1, 2, 2, 1), "all_zero", None),
        (4, (1, 1, 1, 1), "all_zero", None),
        (2, (0, 0, 0, 1), "last_one", None),
        (2, (0, 0, 0, 0, 0, 0), "all_zero", None),
        (7, (), "genus0", None),
    ],
)
def test_canonical_form_cases(r, coords, kind, d):
    form = canonical_form(RootTuple(r, coords))
    assert form.kind == kind
    assert form.d == d


def test_canonical_form_is_idempotent():
    for r, genus in [(6, 1), (4, 2), (3, 2), (2, 3)]:
        for coords in product(range(r), repeat=2 * genus):
            form = canonical_form(RootTuple(r, coords))
            assert canonical_form(form.canonical_root()) == form


def test_reduce_with_witness_examples():
    root = RootTuple(6, (4, 2))
    form, witness = reduce_with_witness(root)
    assert (form.kind, form.d) == ("genus1", 2)
    assert apply_word(root, witness).coords == (0, 2)

    root = RootTuple(3, (0, 1, 0, 1))
    form, witness = reduce_with_witness(root)
    assert form.kind == "all_zero"
    assert apply_word(root, witness).coords == (0, 0, 0, 0)


def test_reduce_already_canonical_gives_identity_witness():
    for root in [
        RootTuple(6, (0, 2)),
        RootTuple(4, (0, 0, 0, 0)),
        RootTuple(4, (0, 0, 0, 1)),
        RootTuple(5, ()),
    ]:
        form, witness = reduce_with_witness(root)
        assert len(witness) == 0
        assert form.canonical_root() == root


def test_reduce_with_witness_exhaustive_small():
    for r, genus in [(1, 2), (2, 1), (3, 1), (6, 1), (2, 2), (3, 2), (4, 2)]:
        for coords in product(range(r), repeat=2 * genus):
            root = RootTuple(r, coords)
            form, witness = reduce_with_witness(root)
            assert apply_word(root, witness) == form.canonical_root()
            assert canonical_form(root) == form


def test_canonical_form_is_orbit_invariant_under_random_words():
    rng = random.Random(2024)
    for r, genus in [(4, 2), (5, 2), (6, 3)]:
        gens = _all_unit_generators(genus)
        for _ in range(300):
            root = RootTuple(r, tuple(rng.randrange(r) for _ in range(2 * genus)))
            word = TwistWord(tuple(rng.choices(gens, k=32)))
            assert canonical_form(apply_word(root, word)) == canonical_form(root)


def test_standard_form_validation_and_json():
    form = StandardForm("genus1", 6, 1, 3)
    assert form.to_json() == {"kind": "genus1", "d": 3}
    assert StandardForm.from_json(form.to_json(), 6, 1) == form
    assert StandardForm("all_zero", 3, 2).to_json() == {"kind": "all_zero"}
    assert StandardForm("last_one", 4, 2).canonical_coords() == (0, 0, 0, 1)
    with pytest.raises(ValueError):
        StandardForm("genus1", 6, 1, 4)  # 4 does not divide 6
    with pytest.raises(ValueError):
        StandardForm("genus1", 6, 2, 2)
    with pytest.raises(ValueError):
        StandardForm("last_one", 3, 2)  # odd order has a single class
    with pytest.raises(ValueError):
        StandardForm("all_zero", 4, 1)


def test_twist_word_json_round_trip():
    word = TwistWord((TwistGenerator("U", 1, -2), TwistGenerator("W", 1, 3)))
    assert TwistWord.from_json(word.to_json()) == word
    assert word.to_json()[0] == {"family": "U", "index": 1, "power": -2}
    with pytest.raises(ValueError):
        TwistWord.from_json({"family": "U"})
