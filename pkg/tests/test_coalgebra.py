import json
import random
from fractions import Fraction

import pytest

from walkgrammar import coalgebra
from walkgrammar.coalgebra import (
    CoproductTable,
    CounitTable,
    FormalSum,
    apply_at,
    apply_counit_at,
    iterate_rightmost,
    markov_pair,
    verify_axiom,
)

from helpers import path_words

lift = FormalSum.lift


def sum_of(*words):
    return FormalSum([(tuple(w), 1) for w in words])


def test_formal_sum_drops_zero_coefficients():
    s = lift("a") - lift("a")
    assert not s
    assert len(s) == 0
    assert s == FormalSum()


def test_formal_sum_arithmetic():
    s = lift("a") + lift("a") + lift("b")
    assert dict(s.terms) == {("a",): 2, ("b",): 1}
    assert s - lift("b") == lift("a").scaled(2)
    assert s.scaled(Fraction(1, 2)) == FormalSum({("a",): 1, ("b",): Fraction(1, 2)})


def test_formal_sum_rejects_empty_words():
    with pytest.raises(ValueError):
        FormalSum([((), 1)])


def test_apply_at_single_letter():
    delta = coalgebra.coproduct_e()
    assert apply_at(delta, lift("b"), 1) == sum_of("ab", "bd")


def test_apply_at_empty_sum():
    delta = coalgebra.coproduct_e()
    assert apply_at(delta, FormalSum(), 1) == FormalSum()


def test_apply_at_second_slot_markov():
    dm, _ = coalgebra.markov_pair_e()
    assert apply_at(dm, sum_of("ac"), 2) == sum_of("aca", "acb")


def test_apply_at_slot_out_of_range_names_word():
    delta = coalgebra.coproduct_e()
    with pytest.raises(ValueError, match="a⊗b"):
        apply_at(delta, sum_of("ab"), 3)


def test_iterate_rightmost_identity():
    dm, _ = coalgebra.markov_pair_e()
    seed = FormalSum.basis("abcd")
    assert iterate_rightmost(dm, seed, 0) == seed


def test_iterate_rightmost_once():
    delta = coalgebra.coproduct_e()
    assert iterate_rightmost(delta, lift("a"), 1) == sum_of("aa", "bc")


def test_iterate_rightmost_reaches_all_paths():
    # Oracle: all length-3 composable words, each exactly once.
    dm, _ = coalgebra.markov_pair_e()
    result = iterate_rightmost(dm, FormalSum.basis("abcd"), 2)
    expected = FormalSum([(tuple(w), 1) for w in path_words(3)])
    assert len(expected) == 16
    assert result == expected


def test_apply_at_linearity_on_random_sums():
    dm, _ = coalgebra.markov_pair_e()
    words = sorted(path_words(1) | path_words(3) | path_words(6))
    rng = random.Random(3)
    for _ in range(25):
        s1 = FormalSum([(tuple(rng.choice(words)), rng.randint(-3, 3)) for _ in range(5)])
        s2 = FormalSum([(tuple(rng.choice(words)), rng.randint(-3, 3)) for _ in range(5)])
        assert apply_at(dm, s1 + s2, 1) == apply_at(dm, s1, 1) + apply_at(dm, s2, 1)


def test_coassociativity_of_four_letter_coproduct():
    assert verify_axiom("coassociativity", coalgebra.coproduct_e())


def test_markov_coproduct_not_coassociative():
    # Expanding both sides on the letter a by hand:
    # (d (x) id) d a = aaa + aba + aab + abb, (id (x) d) d a = aaa + aab + abc + abd.
    dm, _ = coalgebra.markov_pair_e()
    report = verify_axiom("coassociativity", dm)
    assert not report.ok
    assert report.witness == "a"
    assert report.lhs == sum_of("aaa", "aba", "aab", "abb")
    assert report.rhs == sum_of("aaa", "aab", "abc", "abd")


def test_breaking_equation_for_all_markov_fixtures():
    for name, (delta, delta_tilde) in coalgebra.markov_fixtures().items():
        assert verify_axiom("breaking-equation", delta, delta_tilde), name


def test_degenerate_pair_satisfies_breaking_equation():
    delta = coalgebra.coproduct_e()
    assert verify_axiom("breaking-equation", delta, delta)


def test_codialgebra_axioms_for_de_bruijn_pairs():
    for n in range(2, 6):
        delta, delta_tilde = coalgebra.de_bruijn_markov_pair(n)
        for axiom in ("codialgebra-1", "codialgebra-2", "codialgebra-3", "breaking-equation"):
            assert verify_axiom(axiom, delta, delta_tilde), (n, axiom)


def test_counit_laws_of_four_letter_coproduct():
    delta = coalgebra.coproduct_e()
    eps = coalgebra.counit_e()
    assert verify_axiom("right-counit", delta, counit=eps)
    assert verify_axiom("left-counit", delta, delta, left_counit=eps)


def test_de_bruijn_counit_is_exactly_one_over_n():
    for n in range(2, 6):
        delta, delta_tilde = coalgebra.de_bruijn_markov_pair(n)
        eps = coalgebra.de_bruijn_counit(n)
        assert eps(coalgebra.de_bruijn_labels(n)[0]) == Fraction(1, n)
        assert verify_axiom("right-counit", delta, counit=eps)
        assert verify_axiom("left-counit", delta, delta_tilde, left_counit=eps)


def test_extension_counit_is_kronecker_delta():
    for n in range(2, 6):
        ext = coalgebra.extension_coproduct(n)
        assert verify_axiom("coassociativity", ext)
        assert verify_axiom("right-counit", ext, counit=coalgebra.extension_counit(n))


def test_counit_axiom_without_counit_errors():
    with pytest.raises(ValueError):
        verify_axiom("right-counit", coalgebra.coproduct_e())


def test_unknown_axiom_errors():
    with pytest.raises(ValueError):
        verify_axiom("bialgebra", coalgebra.coproduct_e())


def test_apply_counit_at_contracts_one_slot():
    eps = coalgebra.counit_e()
    s = sum_of("aa", "bc", "ab")
    assert apply_counit_at(eps, s, 2) == lift("a")
    assert apply_counit_at(eps, s, 1) == lift("a") + lift("b")


def test_markov_pair_rejects_sources_and_sinks():
    with pytest.raises(ValueError, match="sink"):
        markov_pair("ab", [("a", "b"), ("a", "a")])
    with pytest.raises(ValueError, match="source"):
        markov_pair("ab", [("a", "a"), ("b", "a"), ("b", "b")])


def test_table_validation():
    with pytest.raises(ValueError, match="not total"):
        CoproductTable(("a", "b"), {"a": lift("a", "b")})
    with pytest.raises(ValueError, match="length-2"):
        CoproductTable(("a",), {"a": lift("a", "a", "a")})
    with pytest.raises(ValueError, match="leaves the alphabet"):
        CoproductTable(("a",), {"a": lift("a", "z")})


def test_json_round_trip():
    for table in (
        coalgebra.coproduct_e(),
        coalgebra.markov_pair_e()[0],
        coalgebra.extension_coproduct(3),
    ):
        blob = json.dumps(table.to_json())
        assert CoproductTable.from_json(json.loads(blob)) == table
    eps = coalgebra.de_bruijn_counit(3)
    blob = json.dumps(eps.to_json())
    assert CounitTable.from_json(json.loads(blob)) == eps
    assert "1/3" in blob


def test_json_rejects_float_scalars():
    with pytest.raises(ValueError):
        CounitTable.from_json({"values": {"a": 0.5}})
