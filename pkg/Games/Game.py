from fractions import Fraction
from typing import Dict
from typing import Tuple

from Words.MoveAlphabet import MoveAlphabet
from Words.MoveAlphabet import MoveLetter


class Game:
    """
    Base game G = (P, A, pi): the alphabet of moves and a utility vector
    pi(a) = (pi_1(a), ..., pi_n(a)) for every move a.
    """

    def __init__(self, alphabet: MoveAlphabet, utility: Dict[MoveLetter, Tuple]):
        self.alphabet = alphabet
        self.utility = dict()
        for letter in alphabet.letters:
            if letter not in utility:
                raise ValueError("No payoff for move {}".format(",".join(alphabet.letter_names(letter))))
            values = tuple(Fraction(value) if not isinstance(value, float) else value for value in utility[letter])
            if len(values) != alphabet.player_count:
                raise ValueError("Move {} has {} payoffs for {} players".format(
                    ",".join(alphabet.letter_names(letter)), len(values), alphabet.player_count))
            self.utility[letter] = values
        unknown = set(utility) - set(alphabet.letters)
        if unknown:
            raise ValueError("Payoffs given for letters outside the alphabet: {}".format(unknown))

    @property
    def player_count(self):
        return self.alphabet.player_count

    def payoff(self, letter, player):
        return self.utility[letter][player]

    def max_abs_payoff(self):
        return max(abs(value) for values in self.utility.values() for value in values)


def prisoners_dilemma(alphabet=None):
    """
    (c,c) -> (4,4), (c,d) -> (0,5), (d,c) -> (5,0), (d,d) -> (1,1)
    """
    if alphabet is None:
        from Strategies.strategy_library import prisoners_dilemma_alphabet
        alphabet = prisoners_dilemma_alphabet()
    c, d = 0, 1
    return Game(alphabet, {(c, c): (4, 4), (c, d): (0, 5), (d, c): (5, 0), (d, d): (1, 1)})
