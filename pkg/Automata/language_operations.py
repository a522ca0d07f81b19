import logging
from collections import deque
from typing import Iterator
from typing import Optional
from typing import Tuple

import networkx as nx

from Automata.DeterministicAutomaton import DetBuchiAutomaton
from Automata.DeterministicAutomaton import DeterministicAutomaton
from Automata.DeterministicAutomaton import Dfa
from Automata.DeterministicAutomaton import SafetyAutomaton
from Automata.graph_search import cyclic_components
from Automata.graph_search import find_accepting_lasso
from Words.LassoWord import LassoWord
from Words.word_operations import normalize_lasso

logger = logging.getLogger(__name__)


class _Escaped:
    """
    Marks the second component of a product state once the run of the
    right-hand automaton has left its domain.
    """

    def __repr__(self):
        return "escaped"

    def __reduce__(self):
        return _escaped_marker, ()


ESCAPED = _Escaped()


def _escaped_marker():
    return ESCAPED


def _check_same_alphabet(first, second):
    if first.alphabet != second.alphabet:
        raise ValueError("Automata over different alphabets: {} and {}".format(first.alphabet, second.alphabet))


def as_buchi(automaton: DeterministicAutomaton) -> DetBuchiAutomaton:
    """
    Safety automata become Büchi automata accepting in every state.
    """
    if isinstance(automaton, DetBuchiAutomaton):
        return automaton
    if isinstance(automaton, SafetyAutomaton):
        return DetBuchiAutomaton(automaton.alphabet, automaton.states, automaton.initial,
                                 automaton.transitions, automaton.states)
    raise TypeError("Expected a safety or Büchi automaton, got {}".format(type(automaton).__name__))


def trim(raw: DeterministicAutomaton) -> SafetyAutomaton:
    """
    Live part of a deterministic automaton read as a safety automaton:
    states without successors and unreachable states are removed until
    nothing changes. Acceptance is dropped.
    """
    if raw.is_empty_automaton:
        return SafetyAutomaton.empty(raw.alphabet)
    keep = set(raw.reachable_states())
    while True:
        dead = {state for state in keep if not any(target in keep for target in raw.successors(state).values())}
        if len(dead) == 0:
            break
        keep -= dead
        if raw.initial not in keep:
            return SafetyAutomaton.empty(raw.alphabet)
        keep = set(nx.descendants(raw.graph().subgraph(keep), raw.initial)) | {raw.initial}
    logger.debug("[trim] kept %d of %d states", len(keep), len(raw.states))
    return SafetyAutomaton(raw.alphabet,
                           [state for state in raw.states if state in keep],
                           raw.initial,
                           {(source, letter): target for (source, letter), target in raw.transitions.items()
                            if source in keep and target in keep})


def alive_states(automaton: DeterministicAutomaton) -> frozenset:
    """
    Reachable states from which some run visits the acceptance set
    infinitely often.
    """
    if automaton.is_empty_automaton:
        return frozenset()
    graph = automaton.graph().subgraph(automaton.reachable_states())
    accepting = automaton.acceptance_set()
    good = set()
    for component in cyclic_components(graph):
        if any(state in accepting for state in component):
            good |= component
    alive = set(good)
    frontier = deque(good)
    while frontier:
        state = frontier.popleft()
        for predecessor in graph.predecessors(state):
            if predecessor not in alive:
                alive.add(predecessor)
                frontier.append(predecessor)
    return frozenset(alive)


def prune(automaton: DeterministicAutomaton):
    """
    Restriction to the alive states, same kind of automaton.
    """
    return automaton.restricted(alive_states(automaton))


def omega_membership(h: LassoWord, automaton: DeterministicAutomaton) -> bool:
    """
    Runs the stem, then whole cycle iterations until the state at an
    iteration boundary repeats; the iterations in between form the
    eventual loop of the run.
    """
    state = automaton.run(h.stem)
    if state is None:
        return False
    accepting = automaton.acceptance_set()
    boundaries = dict()
    loop_visits = list()
    while state not in boundaries:
        boundaries[state] = len(loop_visits)
        visited_accepting = False
        for letter in h.cycle:
            state = automaton.step(state, letter)
            if state is None:
                return False
            visited_accepting = visited_accepting or state in accepting
        loop_visits.append(visited_accepting)
    return any(loop_visits[boundaries[state]:])


def pref_automaton(language: DeterministicAutomaton) -> Dfa:
    """
    Dfa for Pref(L): the alive states, all accepting. Pref of the
    empty language is empty, the empty word included.
    """
    alive = alive_states(language)
    if language.initial not in alive:
        return Dfa.empty(language.alphabet)
    return Dfa(language.alphabet,
               [state for state in language.states if state in alive],
               language.initial,
               {(source, letter): target for (source, letter), target in language.transitions.items()
                if source in alive and target in alive},
               alive)


def left_quotient(language: DeterministicAutomaton, w) -> DetBuchiAutomaton:
    language = as_buchi(language)
    state = language.run(w)
    if state is None:
        return DetBuchiAutomaton.empty(language.alphabet)
    return language.rerooted(state)


def arrow(x: Dfa) -> DetBuchiAutomaton:
    """
    Words with infinitely many prefixes in X: the completed Dfa read as
    a Büchi automaton over the same final states.
    """
    complete = x.completed()
    logger.debug("[arrow] completed dfa has %d states", len(complete))
    return DetBuchiAutomaton(x.alphabet, complete.states, complete.initial,
                             complete.transitions, complete.accepting).reachable_part()


def safety_closure(language: DeterministicAutomaton) -> SafetyAutomaton:
    """
    Smallest closed language containing L: alive states of L with
    acceptance dropped.
    """
    language = as_buchi(language)
    alive = alive_states(language)
    raw = language.restricted(alive)
    return trim(raw)


def _product_graph(first: DetBuchiAutomaton, second: DetBuchiAutomaton, keep_escaped: bool):
    """
    Reachable synchronous product. With keep_escaped, runs of first
    continue after second leaves its domain, paired with ESCAPED.
    """
    start = (first.initial, second.initial if second.initial is not None else ESCAPED)
    graph = nx.DiGraph()
    if first.initial is None or (start[1] is ESCAPED and not keep_escaped):
        return graph, None
    graph.add_node(start)
    queue = deque([start])
    while queue:
        node = queue.popleft()
        left, right = node
        for letter, left_target in first.successors(left).items():
            right_target = ESCAPED if right is ESCAPED else second.step(right, letter)
            if right_target is None:
                if not keep_escaped:
                    continue
                right_target = ESCAPED
            target = (left_target, right_target)
            if target not in graph:
                graph.add_node(target)
                queue.append(target)
            if graph.has_edge(node, target):
                graph[node][target]["letters"].append(letter)
            else:
                graph.add_edge(node, target, letters=[letter])
    return graph, start


def contains(first: DeterministicAutomaton, second: DeterministicAutomaton) -> Tuple[bool, Optional[LassoWord]]:
    """
    Decides L(first) ⊆ L(second) for deterministic operands. A
    counterexample is a lasso of the product whose cycle visits an
    accepting state of first and no accepting state of second.
    """
    _check_same_alphabet(first, second)
    first = as_buchi(first)
    second = as_buchi(second)
    graph, start = _product_graph(first, second, keep_escaped=True)
    if start is None:
        return True, None
    first_accepting = first.acceptance_set()
    second_accepting = second.acceptance_set()
    witness = find_accepting_lasso(graph, start,
                                   is_accepting=lambda node: node[0] in first_accepting,
                                   is_allowed=lambda node: node[1] is ESCAPED or node[1] not in second_accepting)
    logger.debug("[contains] product has %d states, counterexample %s", graph.number_of_nodes(), witness)
    if witness is None:
        return True, None
    return False, normalize_lasso(witness)


def equivalent(first: DeterministicAutomaton, second: DeterministicAutomaton) -> bool:
    return contains(first, second)[0] and contains(second, first)[0]


def _is_trivial_acceptance(automaton: DetBuchiAutomaton) -> bool:
    return automaton.accepting >= frozenset(automaton.states)


def intersect(first: DeterministicAutomaton, second: DeterministicAutomaton):
    """
    Product construction. Two safety operands give a trimmed safety
    automaton; Büchi operands are supported as long as at most one of
    them has a nontrivial acceptance set.
    """
    _check_same_alphabet(first, second)
    both_safety = isinstance(first, SafetyAutomaton) and isinstance(second, SafetyAutomaton)
    left = as_buchi(first)
    right = as_buchi(second)
    left_trivial = _is_trivial_acceptance(left)
    right_trivial = _is_trivial_acceptance(right)
    if not both_safety and not left_trivial and not right_trivial:
        raise NotImplementedError("Intersection of two Büchi automata with nontrivial acceptance sets "
                                  "needs a generalized acceptance condition, which is not supported.")
    graph, start = _product_graph(left, right, keep_escaped=False)
    if start is None:
        return SafetyAutomaton.empty(first.alphabet) if both_safety else DetBuchiAutomaton.empty(first.alphabet)
    states = list(graph.nodes)
    transitions = {(source, letter): target
                   for source, target, letters in graph.edges(data="letters") for letter in letters}
    logger.debug("[intersect] product has %d states", len(states))
    if both_safety:
        return trim(DeterministicAutomaton(first.alphabet, states, start, transitions))
    accepting = [(p, q) for p, q in states
                 if (left_trivial or p in left.accepting) and (right_trivial or q in right.accepting)]
    return prune(DetBuchiAutomaton(first.alphabet, states, start, transitions, accepting))


def is_empty(automaton: DeterministicAutomaton) -> Tuple[bool, Optional[LassoWord]]:
    """
    (True, None) for the empty language, otherwise (False, member).
    """
    if automaton.is_empty_automaton:
        return True, None
    accepting = automaton.acceptance_set()
    witness = find_accepting_lasso(automaton.graph(), automaton.initial, is_accepting=lambda state: state in accepting)
    if witness is None:
        return True, None
    return False, normalize_lasso(witness)


def is_strategical(language: DeterministicAutomaton) -> bool:
    """
    L is strategical (closed) iff its safety closure adds nothing, and
    equivalently iff L equals the arrow of Pref(L). Both routes run.
    """
    language = as_buchi(language)
    by_closure, _ = contains(safety_closure(language), language)
    by_arrow = equivalent(arrow(pref_automaton(language)), language)
    if by_closure != by_arrow:
        raise RuntimeError("Closure and arrow characterizations disagree on {!r}".format(language))
    return by_closure


def enumerate_lassos(automaton: DeterministicAutomaton, bound: int) -> Iterator[LassoWord]:
    """
    Lassos of the automaton with |stem| + |cycle| <= bound, shortest
    first: paths whose last state repeats an earlier one, the repeated
    stretch being the cycle (which must visit the acceptance set).
    Each infinite word is produced once, normalized.
    """
    if automaton.is_empty_automaton:
        return
    accepting = automaton.acceptance_set()
    seen = set()
    layer = [((automaton.initial,), ())]
    for length in range(1, bound + 1):
        next_layer = list()
        for states, letters in layer:
            for letter, target in automaton.successors(states[-1]).items():
                path_states = states + (target,)
                path_letters = letters + (letter,)
                next_layer.append((path_states, path_letters))
                for start in range(length):
                    if path_states[start] != target:
                        continue
                    if not any(state in accepting for state in path_states[start + 1:]):
                        continue
                    lasso = normalize_lasso(LassoWord(path_letters[:start], path_letters[start:]))
                    if lasso not in seen:
                        seen.add(lasso)
                        yield lasso
        layer = next_layer
