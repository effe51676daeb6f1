"""Weyl group elements, words, inversion sets, and Bruhat order."""

import itertools
import random

import pytest

from vermatwist import (
    GroupTooLarge,
    IndexOutOfRange,
    MixedRootSystems,
    Root,
    all_elements,
    bruhat_leq,
    build_root_system,
    element_from_word,
    identity_element,
    inversion_set,
    longest_element,
    parse_word_text,
    reflection_through,
    root_sequence_through,
    simple_reflection,
    word_text,
)


def subword_leq(rs, x, y):
    """Bruhat order oracle: x <= y iff some subsequence of a reduced word
    of y multiplies out to x and has length equal to the length of x.

    Independent of the lifting recursion used by the library.
    """
    wy = y.word
    lx = x.length
    if lx > len(wy):
        return False
    for positions in itertools.combinations(range(len(wy)), lx):
        cand = element_from_word(rs, tuple(wy[p] for p in positions))
        if cand == x and cand.length == lx:
            return True
    return lx == 0


def test_element_counts():
    sizes = {"A1": 2, "A2": 6, "B2": 8, "G2": 12, "A3": 24, "B3": 48}
    for label, n in sizes.items():
        rs = build_root_system(label)
        assert len(all_elements(rs)) == n


def test_b2_enumeration_order_and_words():
    rs = build_root_system("B2")
    words = [w.word for w in all_elements(rs)]
    assert words == [
        (),
        (1,),
        (2,),
        (1, 2),
        (2, 1),
        (1, 2, 1),
        (2, 1, 2),
        (1, 2, 1, 2),
    ]


def test_simple_reflection_matrices_b2():
    rs = build_root_system("B2")
    s = simple_reflection(rs, 1)
    t = simple_reflection(rs, 2)
    assert s.mat == ((-1, 2), (0, 1))
    assert t.mat == ((1, 0), (1, -1))
    assert (s * s).is_identity
    assert (t * t).is_identity


def test_simple_reflection_bounds():
    rs = build_root_system("B2")
    with pytest.raises(IndexOutOfRange):
        simple_reflection(rs, 0)
    with pytest.raises(IndexOutOfRange):
        simple_reflection(rs, 3)


def test_mixed_systems_rejected():
    a = simple_reflection(build_root_system("A2"), 1)
    b = simple_reflection(build_root_system("B2"), 1)
    with pytest.raises(MixedRootSystems):
        a * b


def test_non_reduced_word_collapses():
    rs = build_root_system("B2")
    w = element_from_word(rs, (1, 1, 2, 2, 1))
    assert w == simple_reflection(rs, 1)
    assert w.word == (1,)
    assert w.length == 1


def test_length_equals_inversion_count():
    for label in ("A2", "B2", "G2", "B3"):
        rs = build_root_system(label)
        for w in all_elements(rs):
            assert w.length == len(w.inversions)
            assert len(w.word) == w.length


def test_word_round_trip():
    for label in ("B2", "A3"):
        rs = build_root_system(label)
        for w in all_elements(rs):
            assert element_from_word(rs, w.word) == w
            assert w.inverse().inverse() == w
            assert (w * w.inverse()).is_identity


def test_longest_element():
    rs = build_root_system("B2")
    w0 = longest_element(rs)
    assert w0.word == (1, 2, 1, 2)
    assert w0.length == 4
    assert set(w0.inversions) == set(rs.positive_roots)
    # B2 longest element is central
    for w in all_elements(rs):
        assert w * w0 == w0 * w

    rs3 = build_root_system("A3")
    w0 = longest_element(rs3)
    assert w0.length == 6


def test_inversion_sets_b2_frozen():
    rs = build_root_system("B2")
    by_word = {w.word: set(r.coords for r in w.inversions) for w in all_elements(rs)}
    assert by_word[()] == set()
    assert by_word[(1,)] == {(1, 0)}
    assert by_word[(2,)] == {(0, 1)}
    assert by_word[(1, 2)] == {(1, 0), (2, 1)}
    assert by_word[(2, 1)] == {(0, 1), (1, 1)}
    assert by_word[(1, 2, 1)] == {(1, 0), (1, 1), (2, 1)}
    assert by_word[(2, 1, 2)] == {(0, 1), (1, 1), (2, 1)}
    assert by_word[(1, 2, 1, 2)] == {(0, 1), (1, 0), (1, 1), (2, 1)}


def test_inversions_complement_under_w0():
    for label in ("B2", "B3"):
        rs = build_root_system(label)
        w0 = longest_element(rs)
        allpos = set(r.coords for r in rs.positive_roots)
        for w in all_elements(rs):
            mine = set(r.coords for r in w.inversions)
            other = set(r.coords for r in (w * w0).inversions)
            assert mine | other == allpos
            assert mine & other == set()


def test_inversion_set_wrapper():
    rs = build_root_system("A2")
    w = element_from_word(rs, (1, 2))
    assert inversion_set(w) == w.inversions


def test_reflection_through_each_positive_root():
    for label in ("B2", "G2"):
        rs = build_root_system(label)
        for beta in rs.positive_roots:
            r = reflection_through(rs, beta)
            assert (r * r).is_identity
            assert r.length % 2 == 1
            # the reflection sends its own root to the negative; check on
            # root coordinates via the matrix action
            image = tuple(
                sum(r.mat[i][j] * beta.coords[j] for j in range(rs.rank))
                for i in range(rs.rank)
            )
            assert image == tuple(-c for c in beta.coords)
            # and beta is one of its inversions
            assert beta in r.inversions


def test_reflection_through_b2_names():
    rs = build_root_system("B2")
    named = {
        (1, 0): (1,),
        (0, 1): (2,),
        (1, 1): (2, 1, 2),
        (2, 1): (1, 2, 1),
    }
    for coords, word in named.items():
        assert reflection_through(rs, Root(coords)).word == word


def test_bruhat_against_subword_oracle_exhaustive():
    for label in ("A1", "A2", "B2", "G2"):
        rs = build_root_system(label)
        elems = all_elements(rs)
        for x in elems:
            for y in elems:
                assert bruhat_leq(x, y) == subword_leq(rs, x, y), (label, x.word, y.word)


def test_bruhat_against_subword_oracle_sampled_b3():
    rs = build_root_system("B3")
    elems = all_elements(rs)
    rng = random.Random(20240817)
    for _ in range(400):
        x = rng.choice(elems)
        y = rng.choice(elems)
        assert bruhat_leq(x, y) == subword_leq(rs, x, y), (x.word, y.word)


def test_bruhat_basic_properties():
    rs = build_root_system("B3")
    elems = all_elements(rs)
    w0 = longest_element(rs)
    e = identity_element(rs)
    for w in elems:
        assert bruhat_leq(e, w)
        assert bruhat_leq(w, w0)
        assert bruhat_leq(w, w)


def test_root_sequence_through_all_elements():
    for label in ("A2", "B2", "G2"):
        rs = build_root_system(label)
        n = len(rs.positive_roots)
        for w in all_elements(rs):
            seq = root_sequence_through(rs, w)
            assert len(seq.betas) == n
            assert seq.split == w.length
            assert set(seq.betas) == set(rs.positive_roots)
            assert set(seq.betas[: seq.split]) == set(w.inversions)


def test_group_too_large_guard():
    rs = build_root_system("A3")
    with pytest.raises(GroupTooLarge):
        all_elements(rs, bound=10)


def test_parse_word_text():
    rs = build_root_system("B2")
    assert parse_word_text(rs, "e") == ()
    assert parse_word_text(rs, "") == ()
    assert parse_word_text(rs, "sts") == (1, 2, 1)
    assert parse_word_text(rs, "w0") == (1, 2, 1, 2)
    assert parse_word_text(rs, "1,2,1") == (1, 2, 1)
    rs3 = build_root_system("A3")
    assert parse_word_text(rs3, "1,3,2") == (1, 3, 2)
    with pytest.raises(ValueError):
        parse_word_text(rs3, "stu")
    with pytest.raises(ValueError):
        parse_word_text(rs, "xyz")


def test_word_text():
    rs = build_root_system("B2")
    assert word_text(identity_element(rs)) == "e"
    assert word_text(element_from_word(rs, (1, 2, 1))) == "sts"
    rs3 = build_root_system("A3")
    assert word_text(element_from_word(rs3, (1, 3))) == "1,3"
