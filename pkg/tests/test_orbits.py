from collections import Counter

import numpy as np
import pytest

from walkgrammar import orbits
from walkgrammar.language import contract, generate, word_index, words_at_vertex
from walkgrammar.orbits import (
    Pattern,
    canonicalize,
    complete,
    decompose,
    fundamental_orbits,
    glue,
    grow,
    orbit_count_lower_bound,
    orbit_index,
    orbits_at_time,
    primitive_root,
    read,
)

from helpers import closed_cycles, simple_cycles_networkx


def pat(s):
    return canonicalize(s)


def test_canonicalize_rotations():
    assert pat("bca").letters == "abc"
    assert pat("aaa").letters == "aaa"
    assert pat("cbd").letters == "bdc"
    assert pat("cbd") == pat("bdc") == pat("dcb")


def test_canonicalize_rejects_open_paths():
    with pytest.raises(ValueError, match="open path"):
        canonicalize("ab")
    with pytest.raises(ValueError, match="position"):
        canonicalize("ba")


def test_pattern_constructor_requires_canonical_form():
    with pytest.raises(ValueError, match="least rotation"):
        Pattern("bca")


def test_orbit_index_examples():
    assert orbit_index(pat("a")) == -1
    assert orbit_index(pat("abc")) == -1
    assert orbit_index(pat("abdc")) == 0
    assert orbit_index(pat("d")) == 1
    assert orbit_index(pat("bc")) == 0


def test_orbit_index_rotation_invariant():
    for s in ("abc", "bca", "cab"):
        assert orbit_index(canonicalize(s)) == -1


def test_read_examples():
    assert read(pat("abc")) == frozenset({"ab", "bc", "ca"})
    assert read(pat("bcbc")) == frozenset({"bcb", "cbc"})
    windows = read(pat("abdc"))
    assert {contract(w) for w in windows} == {"PPQQ", "PQQP", "QQPP", "QPPQ"}
    with pytest.raises(ValueError):
        read(pat("a"))


def test_read_words_share_the_orbit_index():
    for t in range(2, 9):
        for p in orbits_at_time(t):
            for w in read(p):
                assert orbits.orbit_index(p) == word_index(w)


def test_complete_examples():
    assert complete("ab") == pat("abc")
    assert complete("aa") == pat("aaa")
    assert complete("bd") == pat("bdc")


def test_completion_preserves_index():
    for t in range(2, 10):
        for w in generate(t):
            assert orbit_index(complete(w)) == word_index(w)


def test_completion_reading_duality():
    for t in range(2, 10):
        for w in generate(t):
            assert w in read(complete(w))


def test_grow_examples():
    assert grow(pat("aa")) == {pat("aaa"), pat("abc")}
    assert grow(pat("dd")) == {pat("ddd"), pat("bdc")}
    assert grow(pat("abc")) == {pat("aabc"), pat("bcbc"), pat("abdc")}


def test_grow_shifts_index_by_one():
    # The coproduct splits one letter of index i into neighbours of index
    # i -+ 1, so each grown pattern sits one vertex away from its parent.
    for t in range(2, 9):
        for p in orbits_at_time(t):
            for q in grow(p):
                assert len(q) == len(p) + 1
                assert abs(orbit_index(q) - orbit_index(p)) == 1
            spread = {orbit_index(q) - orbit_index(p) for q in grow(p)}
            assert spread == {-1, 1}


def test_orbits_at_small_times():
    assert orbits_at_time(2) == {pat("aa"), pat("bc"), pat("dd")}
    assert orbits_at_time(3) == {pat("aaa"), pat("abc"), pat("ddd"), pat("bdc")}
    at_zero = {p for p in orbits_at_time(4) if orbit_index(p) == 0}
    assert at_zero == {pat("bcbc"), pat("abdc")}
    with pytest.raises(ValueError):
        orbits_at_time(1)


def test_growth_matches_closed_walk_enumeration():
    for t in range(2, 10):
        assert {p.letters for p in orbits_at_time(t)} == closed_cycles(t)


def test_orbit_readings_recover_words_at_vertex():
    for t in range(3, 10):
        pats = orbits_at_time(t)
        for k in range(-t, t + 1, 2):
            union = set()
            for p in pats:
                if orbit_index(p) == k:
                    union |= read(p)
            assert union == words_at_vertex(t, k)


def test_orbit_count_lower_bound_examples():
    assert orbit_count_lower_bound(3, -1) == 1
    assert orbit_count_lower_bound(4, 0) == 2
    assert orbit_count_lower_bound(4, 4) == 1
    with pytest.raises(ValueError):
        orbit_count_lower_bound(4, 1)


def test_orbit_count_bound_holds():
    for t in range(2, 10):
        counts = Counter(orbit_index(p) for p in orbits_at_time(t))
        for k, count in counts.items():
            assert count >= orbit_count_lower_bound(t, k)
    # Equality at the two vertices the bound pins down exactly.
    assert Counter(orbit_index(p) for p in orbits_at_time(3))[-1] == 1
    assert Counter(orbit_index(p) for p in orbits_at_time(4))[0] == 2


def test_fundamental_orbits():
    fundamentals = fundamental_orbits()
    assert len(fundamentals) == 6
    assert pat("abdc") in fundamentals
    assert fundamentals == {pat(s) for s in ("a", "d", "bc", "abc", "bdc", "abdc")}


def test_fundamental_orbits_against_johnson_enumeration():
    assert {p.letters for p in fundamental_orbits()} == simple_cycles_networkx()


def test_glue_examples():
    assert glue(pat("abdc"), pat("d")) == pat("abddc")
    assert glue(pat("abc"), pat("bc")) == pat("abcbc")
    assert glue(pat("a"), pat("a")) == pat("aa")


def test_glue_properties_and_errors():
    glued = glue(pat("abc"), pat("bdc"))
    assert len(glued) == 6
    assert Counter(glued.letters) == Counter("abc") + Counter("bdc")
    with pytest.raises(ValueError, match="no graphic intersection"):
        glue(pat("a"), pat("d"))
    with pytest.raises(ValueError):
        glue(pat("abc"), pat("bc"), at=0)  # a does not occur in bc
    with pytest.raises(ValueError):
        glue(pat("abc"), pat("bc"), at=7)


def test_decompose_examples():
    dec = decompose(pat("abddc"))
    assert Counter(dec.fundamentals()) == Counter({pat("abdc"): 1, pat("d"): 1})
    assert decompose(pat("aaa")).fundamentals() == (pat("a"), pat("a"), pat("a"))


def test_decompose_every_orbit_up_to_length_nine():
    fundamentals = fundamental_orbits()
    for t in range(2, 10):
        for p in orbits_at_time(t):
            dec = decompose(p)
            pieces = dec.fundamentals()
            assert set(pieces) <= fundamentals
            assert sum((Counter(q.letters) for q in pieces), Counter()) == Counter(p.letters)
            assert dec.reglue() == p


def test_decompose_random_length_ten_orbits():
    rng = np.random.default_rng(12)
    pool = sorted(p.letters for p in orbits_at_time(10))
    for i in rng.choice(len(pool), size=12, replace=False):
        p = pat(pool[i])
        dec = decompose(p)
        assert sum(
            (Counter(q.letters) for q in dec.fundamentals()), Counter()
        ) == Counter(p.letters)
        assert dec.reglue() == p


def test_primitive_root():
    assert primitive_root(pat("aa")) == (pat("a"), 2)
    assert primitive_root(pat("bcbc")) == (pat("bc"), 2)
    assert primitive_root(pat("abdc")) == (pat("abdc"), 1)
