from fractions import Fraction
from typing import Optional

from Utility.utils import lcm
from Words.LassoWord import LassoWord
from Words.MoveAlphabet import FiniteWord
from Words.MoveAlphabet import MoveLetter


def primitive_root(word: FiniteWord) -> FiniteWord:
    """
    Shortest u such that word = u^k.
    """
    length = len(word)
    for period in range(1, length + 1):
        if length % period == 0 and word == word[:period] * (length // period):
            return word[:period]
    return word


def normalize_lasso(x: LassoWord) -> LassoWord:
    """
    Canonical representative of the infinite word: primitive cycle,
    and a stem that cannot be shortened by rotating the cycle.
    """
    stem = x.stem
    cycle = primitive_root(x.cycle)
    while len(stem) > 0 and stem[-1] == cycle[-1]:
        stem = stem[:-1]
        cycle = cycle[-1:] + cycle[:-1]
    return LassoWord(stem, cycle)


def prefix(x: LassoWord, k: int) -> FiniteWord:
    if k < 0:
        raise ValueError("Prefix length must be natural, got {}".format(k))
    return tuple(x.letter_at(t) for t in range(k))


def count_occurrences(w: FiniteWord, a: MoveLetter) -> int:
    return sum(1 for letter in w if letter == a)


def comparison_horizon(x: LassoWord, y: LassoWord) -> int:
    """
    After this many positions the pair of phases repeats, so words
    agreeing up to here agree everywhere.
    """
    return max(len(x.stem), len(y.stem)) + lcm(len(x.cycle), len(y.cycle))


def first_mismatch(x: LassoWord, y: LassoWord) -> Optional[int]:
    for t in range(comparison_horizon(x, y)):
        if x.letter_at(t) != y.letter_at(t):
            return t
    return None


def same_infinite_word(x: LassoWord, y: LassoWord) -> bool:
    return first_mismatch(x, y) is None


def metric_distance(x: LassoWord, y: LassoWord) -> Fraction:
    """
    d(x, y) = 1 / (1 + length of the longest common prefix), with 1/inf = 0.
    """
    mismatch = first_mismatch(x, y)
    if mismatch is None:
        return Fraction(0)
    return Fraction(1, 1 + mismatch)
