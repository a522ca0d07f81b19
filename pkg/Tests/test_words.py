from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings

from Tests.conftest import A
from Tests.conftest import B
from Tests.conftest import lasso_words
from Words.LassoWord import LassoWord
from Words.MoveAlphabet import MoveAlphabet
from Words.word_operations import count_occurrences
from Words.word_operations import first_mismatch
from Words.word_operations import metric_distance
from Words.word_operations import normalize_lasso
from Words.word_operations import prefix
from Words.word_operations import primitive_root
from Words.word_operations import same_infinite_word


def test_alphabet_letters_and_names(pd_alphabet):
    assert pd_alphabet.letters == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert pd_alphabet.size == 4
    assert pd_alphabet.letter_from_names(["d", "c"]) == (1, 0)
    assert pd_alphabet.letter_names((0, 1)) == ("c", "d")
    assert pd_alphabet.player_names == ("row", "column")


def test_alphabet_variations(pd_alphabet):
    assert pd_alphabet.variations((0, 0), 0) == ((1, 0),)
    assert pd_alphabet.variations((0, 0), 1) == ((0, 1),)


@pytest.mark.parametrize("actions", [[], ["a", "a"], ["a,b"], ["_"], ["a b"], ["(a"]])
def test_alphabet_rejects_bad_actions(actions):
    with pytest.raises(ValueError):
        MoveAlphabet.from_lists(actions)


def test_alphabet_rejects_unknown_action(pd_alphabet):
    with pytest.raises(ValueError):
        pd_alphabet.letter_from_names(["c", "x"])
    with pytest.raises(ValueError):
        pd_alphabet.check_letter((0, 2))


def test_lasso_rejects_empty_cycle():
    with pytest.raises(ValueError):
        LassoWord((A,), ())


def test_lasso_positions():
    x = LassoWord((A, A), (B, A, B))
    assert [x.letter_at(t) for t in range(8)] == [A, A, B, A, B, B, A, B]
    assert x.phase(1) == 1
    assert x.phase(5) == 2
    assert x.suffix(1) == LassoWord((A,), (B, A, B))
    assert x.suffix(3) == LassoWord((), (A, B, B))
    assert prefix(x, 4) == (A, A, B, A)
    with pytest.raises(ValueError):
        prefix(x, -1)


def test_primitive_root():
    assert primitive_root((A, B, A, B)) == (A, B)
    assert primitive_root((A, B, A)) == (A, B, A)
    assert primitive_root((B,) * 5) == (B,)


def test_normalize_absorbs_stem_into_cycle():
    x = LassoWord((A, B), (A, B, A, B))
    assert normalize_lasso(x) == LassoWord((), (A, B))
    assert normalize_lasso(LassoWord((B, A), (B, A))) == LassoWord((), (B, A))
    assert normalize_lasso(LassoWord((B,), (A,))) == LassoWord((B,), (A,))


def test_same_infinite_word():
    assert same_infinite_word(LassoWord((A,), (B, A)), LassoWord((), (A, B)))
    assert not same_infinite_word(LassoWord((), (A,)), LassoWord((A, A), (B,)))
    assert first_mismatch(LassoWord((), (A,)), LassoWord((A, A), (B,))) == 2


def test_metric_distance():
    assert metric_distance(LassoWord((), (A,)), LassoWord((), (A,))) == 0
    assert metric_distance(LassoWord((), (A,)), LassoWord((A, A), (B,))) == Fraction(1, 3)
    assert metric_distance(LassoWord((), (A,)), LassoWord((), (B,))) == 1


def test_count_occurrences():
    assert count_occurrences((A, B, B), B) == 2
    assert count_occurrences((), A) == 0


@settings(max_examples=200)
@given(lasso_words())
def test_normalization_keeps_the_word(x):
    normal = normalize_lasso(x)
    assert same_infinite_word(x, normal)
    assert normal.representation_length <= x.representation_length
    assert normalize_lasso(normal) == normal


@settings(max_examples=200)
@given(lasso_words(), lasso_words())
def test_equal_words_share_their_normal_form(x, y):
    assert same_infinite_word(x, y) == (normalize_lasso(x) == normalize_lasso(y))


@settings(max_examples=300)
@given(lasso_words(max_stem=3, max_cycle=3), lasso_words(max_stem=3, max_cycle=3), lasso_words(max_stem=3, max_cycle=3))
def test_distance_is_an_ultrametric(x, y, z):
    assert metric_distance(x, x) == 0
    assert metric_distance(x, y) == metric_distance(y, x)
    assert (metric_distance(x, y) == 0) == same_infinite_word(x, y)
    assert metric_distance(x, z) <= max(metric_distance(x, y), metric_distance(y, z))
