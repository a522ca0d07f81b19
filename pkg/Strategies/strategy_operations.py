import itertools
import logging
from collections import deque
from typing import FrozenSet
from typing import Optional
from typing import Set
from typing import Tuple

from Automata.DeterministicAutomaton import DeterministicAutomaton
from Automata.DeterministicAutomaton import SINK
from Automata.DeterministicAutomaton import SafetyAutomaton
from Automata.language_operations import alive_states
from Automata.language_operations import as_buchi
from Automata.language_operations import trim
from Strategies.FiniteMemoryStrategy import FiniteMemoryStrategy
from Strategies.ProgrammaticStrategy import ProgrammaticStrategy
from Words.MoveAlphabet import MoveLetter

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_LIMIT = 200000


def _finite_memory(strategy) -> FiniteMemoryStrategy:
    if isinstance(strategy, ProgrammaticStrategy):
        raise TypeError("Programmatic strategies only support queries and bounded prefix enumeration.")
    return strategy.to_general()


def gamma(strategy) -> SafetyAutomaton:
    """
    gamma(sigma): the matches h with h_0 in sigma(eps) and
    h_{t+1} in sigma(h_0...h_t). Memory states become automaton states
    and only permitted letters get a transition.
    """
    strategy = _finite_memory(strategy)
    transitions = {(state, letter): strategy.next_memory(state, letter)
                   for state in strategy.memory for letter in strategy.moves(state)}
    raw = DeterministicAutomaton(strategy.alphabet, strategy.memory, strategy.initial, transitions)
    return trim(raw)


def minimal_strategy(language) -> FiniteMemoryStrategy:
    """
    sigma_hat_L(w) = Pref_1(w^-1 L). The memory follows the run of L
    over its alive states and falls into an absorbing sink, where
    nothing is permitted, as soon as the history leaves Pref(L).
    """
    language = as_buchi(language)
    alphabet = language.alphabet
    alive = alive_states(language)
    live_memory = [state for state in language.states if state in alive]
    update = dict()
    allowed = {SINK: frozenset()}
    for state in live_memory:
        permitted = set()
        for letter in alphabet.letters:
            target = language.step(state, letter)
            if target is not None and target in alive:
                update[(state, letter)] = target
                permitted.add(letter)
            else:
                update[(state, letter)] = SINK
        allowed[state] = frozenset(permitted)
    for letter in alphabet.letters:
        update[(SINK, letter)] = SINK
    initial = language.initial if language.initial in alive else SINK
    logger.debug("[minimal_strategy] %d live memory states", len(live_memory))
    return FiniteMemoryStrategy(alphabet, live_memory + [SINK], initial, update, allowed)


def strategy_query(strategy, w) -> FrozenSet[MoveLetter]:
    if isinstance(strategy, ProgrammaticStrategy):
        return strategy.moves_after(w)
    return strategy.moves(strategy.memory_after(w))


def strategy_leq(first, second) -> bool:
    """
    first(w) ⊆ second(w) for every history w, checked on the reachable
    pairs of the synchronized memories.
    """
    first = _finite_memory(first)
    second = _finite_memory(second)
    if first.alphabet != second.alphabet:
        raise ValueError("Strategies over different alphabets")
    start = (first.initial, second.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        left, right = queue.popleft()
        if not first.moves(left) <= second.moves(right):
            logger.debug("[strategy_leq] inclusion fails at memory pair (%r, %r)", left, right)
            return False
        for letter in first.alphabet.letters:
            pair = (first.next_memory(left, letter), second.next_memory(right, letter))
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


def is_rectangular(strategy) -> Tuple[bool, Optional[object]]:
    """
    Whether every reachable move set is the product of its projections,
    i.e. the relation is a strategy vector. Returns the first offending
    memory state otherwise.
    """
    strategy = _finite_memory(strategy)
    for state in strategy.reachable_memory():
        moves = strategy.moves(state)
        if len(moves) == 0:
            continue
        projections = [sorted({letter[player] for letter in moves}) for player in range(strategy.alphabet.player_count)]
        if len(moves) != len(list(itertools.product(*projections))):
            return False, state
    return True, None


def enumerate_prefixes(strategy, k: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> Set[tuple]:
    """
    Pref_k(gamma(sigma)) for finite-memory strategies. Programmatic
    strategies are unrolled k steps instead, which gives a superset:
    a permitted history may still have no infinite continuation.
    """
    if k < 0:
        raise ValueError("Prefix length must be natural, got {}".format(k))
    if strategy.alphabet.size ** k > limit:
        raise ValueError("Enumerating {}^{} words exceeds the limit of {}".format(strategy.alphabet.size, k, limit))
    if isinstance(strategy, ProgrammaticStrategy):
        words = {()}
        for _ in range(k):
            words = {word + (letter,) for word in words for letter in strategy.moves_after(word)}
        return words
    automaton = gamma(strategy)
    if automaton.is_empty_automaton:
        return set()
    frontier = {(): automaton.initial}
    for _ in range(k):
        frontier = {word + (letter,): target
                    for word, state in frontier.items() for letter, target in automaton.successors(state).items()}
    return set(frontier)
