from typing import Callable
from typing import FrozenSet

from Words.MoveAlphabet import MoveAlphabet
from Words.MoveAlphabet import MoveLetter


class ProgrammaticStrategy:
    """
    A strategy given by a pure function from histories to move sets.
    Such strategies may generate non-rational languages, so only
    queries and bounded-horizon unrolling accept them.
    """

    def __init__(self, alphabet: MoveAlphabet, function: Callable, name="programmatic"):
        self.alphabet = alphabet
        self.function = function
        self.name = name

    def moves_after(self, word) -> FrozenSet[MoveLetter]:
        moves = frozenset(self.function(tuple(word)))
        for letter in moves:
            self.alphabet.check_letter(letter)
        return moves

    def __repr__(self):
        return "ProgrammaticStrategy({})".format(self.name)
