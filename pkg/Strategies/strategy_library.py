"""
Strategies of the running examples: the Prisoner's Dilemma vectors,
the pair showing that gamma is not injective, and the counting
strategy whose language is not omega-rational.
"""

from Strategies.ProductStrategyVector import ProductStrategyVector
from Strategies.ProgrammaticStrategy import ProgrammaticStrategy
from Words.MoveAlphabet import MoveAlphabet
from Words.word_operations import count_occurrences

C, D = 0, 1


def prisoners_dilemma_alphabet():
    return MoveAlphabet.from_lists(["c", "d"], ["c", "d"], player_names=["row", "column"])


def _all_letters_to(alphabet, state, target):
    return {(state, letter): target for letter in alphabet.letters}


def grim_trigger_example(alphabet=None):
    """
    Row cooperates until the column defects once, then defects forever;
    the column is free. Histories in which the row itself strays end
    in a sink that permits nothing.
    """
    alphabet = alphabet or prisoners_dilemma_alphabet()
    update = dict()
    update.update(_all_letters_to(alphabet, "cooperate", "sink"))
    update[("cooperate", (C, C))] = "cooperate"
    update[("cooperate", (C, D))] = "punish"
    update.update(_all_letters_to(alphabet, "punish", "sink"))
    update[("punish", (D, C))] = "punish"
    update[("punish", (D, D))] = "punish"
    update.update(_all_letters_to(alphabet, "sink", "sink"))
    return ProductStrategyVector(alphabet, ["cooperate", "punish", "sink"], "cooperate", update,
                                 {"cooperate": [{C}, {C, D}],
                                  "punish"   : [{D}, {C, D}],
                                  "sink"     : [set(), set()]})


def grim_trigger_pair(alphabet=None):
    """
    Both players play grim-trigger: cooperate until anybody defects.
    """
    alphabet = alphabet or prisoners_dilemma_alphabet()
    update = _all_letters_to(alphabet, "cooperate", "punish")
    update[("cooperate", (C, C))] = "cooperate"
    update.update(_all_letters_to(alphabet, "punish", "punish"))
    return ProductStrategyVector(alphabet, ["cooperate", "punish"], "cooperate", update,
                                 {"cooperate": [{C}, {C}],
                                  "punish"   : [{D}, {D}]})


def always_defect(alphabet=None):
    alphabet = alphabet or prisoners_dilemma_alphabet()
    return ProductStrategyVector(alphabet, ["defect"], "defect", _all_letters_to(alphabet, "defect", "defect"),
                                 {"defect": [{D}, {D}]})


def wait_for_cooperation(alphabet=None):
    """
    Row defects as long as the column defects and cooperates forever
    once the column cooperates; the column is free.
    """
    alphabet = alphabet or prisoners_dilemma_alphabet()
    update = {("waiting", letter): "cooperating" if letter[1] == C else "waiting" for letter in alphabet.letters}
    update.update(_all_letters_to(alphabet, "cooperating", "cooperating"))
    return ProductStrategyVector(alphabet, ["waiting", "cooperating"], "waiting", update,
                                 {"waiting"    : [{D}, {C, D}],
                                  "cooperating": [{C}, {C, D}]})


def single_path_strategies(alphabet, letter):
    """
    sigma permits only letter along letter^* and nothing elsewhere,
    sigma_prime permits everything elsewhere. Both generate letter^omega.
    """
    update = {("on_path", other): "on_path" if other == letter else "off_path" for other in alphabet.letters}
    update.update(_all_letters_to(alphabet, "off_path", "off_path"))
    on_path = [{action} for action in letter]
    everything = [set(range(len(actions))) for actions in alphabet.action_names]
    nothing = [set() for _ in alphabet.action_names]
    sigma = ProductStrategyVector(alphabet, ["on_path", "off_path"], "on_path", update,
                                  {"on_path": on_path, "off_path": nothing})
    sigma_prime = ProductStrategyVector(alphabet, ["on_path", "off_path"], "on_path", update,
                                        {"on_path": on_path, "off_path": everything})
    return sigma, sigma_prime


def balance_strategy(alphabet=None):
    """
    Over {a, b}: both letters while |w|_a < |w|_b, otherwise only b.
    """
    alphabet = alphabet or MoveAlphabet.from_lists(["a", "b"])
    a = alphabet.letter_from_names(["a"])
    b = alphabet.letter_from_names(["b"])

    def moves(word):
        if count_occurrences(word, a) < count_occurrences(word, b):
            return {a, b}
        return {b}

    return ProgrammaticStrategy(alphabet, moves, name="balance")
