from typing import Dict
from typing import Hashable
from typing import Iterable
from typing import Optional
from typing import Tuple

import networkx as nx

from Words.MoveAlphabet import MoveAlphabet
from Words.MoveAlphabet import MoveLetter


class _Sink:
    """
    Absorbing state added by completions and by the minimal strategy.
    Distinct from every user state, whatever the user named them.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "sink"

    def __reduce__(self):
        return _Sink, ()


SINK = _Sink()


class DeterministicAutomaton:
    """
    Partial deterministic automaton over a MoveAlphabet.

    The empty automaton has no states and initial None. Instances are
    never mutated after construction; operations build new ones.
    """
    kind = "raw"

    def __init__(self,
                 alphabet: MoveAlphabet,
                 states: Iterable[Hashable],
                 initial: Optional[Hashable],
                 transitions: Dict[Tuple[Hashable, MoveLetter], Hashable],
                 accepting: Iterable[Hashable] = ()):
        self.alphabet = alphabet
        self.states = tuple(dict.fromkeys(states))
        self.initial = initial
        self.transitions = dict(transitions)
        self.accepting = frozenset(accepting)
        state_set = frozenset(self.states)
        if initial is None:
            if len(self.states) > 0:
                raise ValueError("Only the empty automaton may lack an initial state.")
        elif initial not in state_set:
            raise ValueError("Initial state {!r} is not among the states".format(initial))
        if not self.accepting <= state_set:
            raise ValueError("Accepting states {} are not among the states".format(set(self.accepting - state_set)))
        self._successors = {state: dict() for state in self.states}
        for (source, letter), target in self.transitions.items():
            if source not in state_set or target not in state_set:
                raise ValueError("Transition {!r} --{}--> {!r} uses an unknown state".format(source, letter, target))
            alphabet.check_letter(letter)
            self._successors[source][letter] = target
        self._graph = None

    @classmethod
    def empty(cls, alphabet: MoveAlphabet):
        return cls(alphabet, (), None, {})

    @property
    def is_empty_automaton(self) -> bool:
        return self.initial is None

    def successors(self, state) -> Dict[MoveLetter, Hashable]:
        return self._successors[state]

    def step(self, state, letter):
        if state is None:
            return None
        return self._successors[state].get(letter)

    def run(self, word, start=None):
        """
        State reached after reading word, None if the run leaves the domain.
        """
        state = self.initial if start is None else start
        for letter in word:
            state = self.step(state, letter)
            if state is None:
                return None
        return state

    def acceptance_set(self) -> frozenset:
        return self.accepting

    def graph(self) -> nx.DiGraph:
        if self._graph is None:
            graph = nx.DiGraph()
            graph.add_nodes_from(self.states)
            for state in self.states:
                for letter, target in self._successors[state].items():
                    if graph.has_edge(state, target):
                        graph[state][target]["letters"].append(letter)
                    else:
                        graph.add_edge(state, target, letters=[letter])
            self._graph = graph
        return self._graph

    def reachable_states(self, start=None) -> frozenset:
        start = self.initial if start is None else start
        if start is None:
            return frozenset()
        return frozenset(nx.descendants(self.graph(), start) | {start})

    def restricted(self, keep, initial=None):
        """
        Same kind of automaton on the states in keep; empty if the
        initial state is dropped.
        """
        initial = self.initial if initial is None else initial
        keep = frozenset(keep)
        if initial is None or initial not in keep:
            return type(self).empty(self.alphabet)
        return self._rebuild(states=[state for state in self.states if state in keep],
                             initial=initial,
                             transitions={(source, letter): target for (source, letter), target in self.transitions.items()
                                          if source in keep and target in keep},
                             accepting=self.accepting & keep)

    def rerooted(self, state):
        return self.restricted(self.reachable_states(state), initial=state)

    def reachable_part(self):
        return self.restricted(self.reachable_states())

    def _rebuild(self, states, initial, transitions, accepting):
        return type(self)(self.alphabet, states, initial, transitions, accepting)

    def __len__(self):
        return len(self.states)

    def __repr__(self):
        return "{}(states={}, initial={!r}, transitions={}, accepting={})".format(
            type(self).__name__, len(self.states), self.initial, len(self.transitions), len(self.accepting))


class Dfa(DeterministicAutomaton):
    """
    Finite-word acceptor for subsets X of A*.
    """
    kind = "dfa"

    def accepts(self, word) -> bool:
        state = self.run(word)
        return state is not None and state in self.accepting

    def completed(self) -> "Dfa":
        """
        Adds a rejecting sink for every missing transition.
        """
        if self.is_empty_automaton:
            return Dfa(self.alphabet, [SINK], SINK, {(SINK, letter): SINK for letter in self.alphabet.letters})
        missing = [(state, letter) for state in self.states for letter in self.alphabet.letters
                   if letter not in self.successors(state)]
        if len(missing) == 0:
            return self
        transitions = dict(self.transitions)
        transitions.update({key: SINK for key in missing})
        transitions.update({(SINK, letter): SINK for letter in self.alphabet.letters})
        return Dfa(self.alphabet, self.states + (SINK,), self.initial, transitions, self.accepting)


class DetBuchiAutomaton(DeterministicAutomaton):
    """
    Accepts the infinite words whose run visits the accepting set
    infinitely often.
    """
    kind = "buchi"


class SafetyAutomaton(DeterministicAutomaton):
    """
    Accepts the infinite words that have an infinite run. Any accepting
    set handed to the constructor is ignored.
    """
    kind = "safety"

    def __init__(self, alphabet, states, initial, transitions, accepting=()):
        super().__init__(alphabet, states, initial, transitions, ())

    def acceptance_set(self) -> frozenset:
        return frozenset(self.states)
