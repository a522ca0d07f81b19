"""
Seeded random automata, strategies, games and lassos for the corpus
pipelines and the tests. Every function takes a random.Random so that
runs are reproducible.
"""

from fractions import Fraction

from Automata.DeterministicAutomaton import DetBuchiAutomaton
from Automata.DeterministicAutomaton import DeterministicAutomaton
from Automata.DeterministicAutomaton import SINK
from Automata.language_operations import trim
from Games.Game import Game
from Strategies.FiniteMemoryStrategy import FiniteMemoryStrategy
from Strategies.ProductStrategyVector import ProductStrategyVector
from Strategies.strategy_operations import minimal_strategy
from Words.LassoWord import LassoWord
from Words.MoveAlphabet import MoveAlphabet

LETTER_NAMES = ("a", "b", "c", "d")


def random_alphabet(rng, max_letters=4):
    """
    One player with two to four letters, or the two-player 2x2 alphabet.
    """
    if rng.random() < 0.25:
        return MoveAlphabet.from_lists(["c", "d"], ["c", "d"])
    return MoveAlphabet.from_lists(LETTER_NAMES[:rng.randint(2, max_letters)])


def _random_transitions(rng, alphabet, states, density):
    return {(state, letter): rng.choice(states)
            for state in states for letter in alphabet.letters if rng.random() < density}


def random_buchi(rng, alphabet, max_states=6, density=0.6, accepting_probability=0.3):
    states = list(range(rng.randint(1, max_states)))
    accepting = [state for state in states if rng.random() < accepting_probability]
    return DetBuchiAutomaton(alphabet, states, 0, _random_transitions(rng, alphabet, states, density), accepting)


def random_safety(rng, alphabet, max_states=4, density=0.6, attempts=100):
    """
    Trim safety automaton with a nonempty language.
    """
    for _ in range(attempts):
        states = list(range(rng.randint(1, max_states)))
        automaton = trim(DeterministicAutomaton(alphabet, states, 0, _random_transitions(rng, alphabet, states, density)))
        if not automaton.is_empty_automaton:
            return automaton
    raise RuntimeError("No nonempty safety automaton after {} attempts".format(attempts))


def _random_update(rng, alphabet, memory):
    return {(state, letter): rng.choice(memory) for state in memory for letter in alphabet.letters}


def _random_subset(rng, size, empty_probability):
    if rng.random() < empty_probability:
        return set()
    chosen = {index for index in range(size) if rng.random() < 0.5}
    return chosen or {rng.randrange(size)}


def random_product_vector(rng, alphabet, max_memory=4, empty_probability=0.1):
    memory = list(range(rng.randint(1, max_memory)))
    allowed = {state: [_random_subset(rng, len(actions), empty_probability) for actions in alphabet.action_names]
               for state in memory}
    return ProductStrategyVector(alphabet, memory, 0, _random_update(rng, alphabet, memory), allowed)


def random_strategy(rng, alphabet, max_memory=4, empty_probability=0.1):
    memory = list(range(rng.randint(1, max_memory)))
    allowed = {state: {alphabet.letters[index] for index in _random_subset(rng, alphabet.size, empty_probability)}
               for state in memory}
    return FiniteMemoryStrategy(alphabet, memory, 0, _random_update(rng, alphabet, memory), allowed)


def random_generator_of(rng, language, max_counter=3, extra_probability=0.3):
    """
    A strategy generating exactly the closed language L, built from
    the minimal strategy of L with a counter added to its memory. Live
    states may permit extra letters, but only letters leading into the
    sink, where nothing is permitted, so the generated language stays L.
    """
    minimal = minimal_strategy(language)
    alphabet = minimal.alphabet
    period = rng.randint(1, max_counter)
    memory = [(state, count) for state in minimal.memory for count in range(period)]
    update = {((state, count), letter): (minimal.next_memory(state, letter), (count + 1) % period)
              for state, count in memory for letter in alphabet.letters}
    allowed = dict()
    for state, count in memory:
        moves = set(minimal.moves(state))
        if state is not SINK:
            moves |= {letter for letter in alphabet.letters
                      if minimal.next_memory(state, letter) is SINK and rng.random() < extra_probability}
        allowed[(state, count)] = moves
    return FiniteMemoryStrategy(alphabet, memory, (minimal.initial, 0), update, allowed)


def random_lasso(rng, alphabet, max_stem=4, max_cycle=4):
    stem = tuple(rng.choice(alphabet.letters) for _ in range(rng.randint(0, max_stem)))
    cycle = tuple(rng.choice(alphabet.letters) for _ in range(rng.randint(1, max_cycle)))
    return LassoWord(stem, cycle)


def random_game(rng, alphabet, low=-5, high=5):
    return Game(alphabet, {letter: tuple(Fraction(rng.randint(low, high)) for _ in range(alphabet.player_count))
                           for letter in alphabet.letters})
