import os

import pytest
from hypothesis import strategies as st

from Games.Game import prisoners_dilemma
from Strategies.strategy_library import prisoners_dilemma_alphabet
from Words.LassoWord import LassoWord
from Words.MoveAlphabet import MoveAlphabet

REPOSITORY_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
PRISONERS_DILEMMA_WORKSPACE = os.path.join(REPOSITORY_ROOT, "Fixtures", "PrisonersDilemma")
ARROW_WORKSPACE = os.path.join(REPOSITORY_ROOT, "Fixtures", "ArrowExamples")

A, B = (0,), (1,)
CC, CD, DC, DD = (0, 0), (0, 1), (1, 0), (1, 1)


@pytest.fixture
def pd_alphabet():
    return prisoners_dilemma_alphabet()


@pytest.fixture
def pd_game(pd_alphabet):
    return prisoners_dilemma(pd_alphabet)


@pytest.fixture
def ab_alphabet():
    return MoveAlphabet.from_lists(["a", "b"])


def lasso_words(letters=(A, B), max_stem=4, max_cycle=4):
    """
    Hypothesis strategy for lasso words over the given letters.
    """
    letter = st.sampled_from(letters)
    return st.builds(LassoWord,
                     st.lists(letter, max_size=max_stem).map(tuple),
                     st.lists(letter, min_size=1, max_size=max_cycle).map(tuple))
