from collections import deque
from typing import Dict
from typing import FrozenSet
from typing import Hashable
from typing import Iterable
from typing import Tuple

from Words.MoveAlphabet import MoveAlphabet
from Words.MoveAlphabet import MoveLetter


class FiniteMemoryStrategy:
    """
    A strategy as a relation A* -> P(A) computed by a finite memory:
    sigma(w) = allowed(memory reached after w).

    The update map is total, so sigma is defined on every history;
    the allowed sets may be empty.
    """

    def __init__(self,
                 alphabet: MoveAlphabet,
                 memory: Iterable[Hashable],
                 initial: Hashable,
                 update: Dict[Tuple[Hashable, MoveLetter], Hashable],
                 allowed: Dict[Hashable, Iterable[MoveLetter]]):
        self.alphabet = alphabet
        self.memory = tuple(dict.fromkeys(memory))
        self.initial = initial
        self.update = dict(update)
        self.allowed = {state: frozenset(allowed.get(state, ())) for state in self.memory}
        memory_set = frozenset(self.memory)
        if initial not in memory_set:
            raise ValueError("Initial memory state {!r} is unknown".format(initial))
        for state in self.memory:
            for letter in alphabet.letters:
                target = self.update.get((state, letter))
                if target is None:
                    raise ValueError("Update is not total: no successor for {!r} on {}".format(state, alphabet.letter_names(letter)))
                if target not in memory_set:
                    raise ValueError("Update leads to unknown memory state {!r}".format(target))
            for letter in self.allowed[state]:
                alphabet.check_letter(letter)
        unknown = set(allowed) - memory_set
        if unknown:
            raise ValueError("Allowed sets given for unknown memory states {}".format(unknown))

    def next_memory(self, state, letter):
        return self.update[(state, letter)]

    def memory_after(self, word):
        state = self.initial
        for letter in word:
            state = self.update[(state, letter)]
        return state

    def moves(self, state) -> FrozenSet[MoveLetter]:
        return self.allowed[state]

    def reachable_memory(self) -> Tuple[Hashable, ...]:
        """
        Memory states reached by some history, in breadth-first order.
        """
        order = [self.initial]
        seen = {self.initial}
        queue = deque([self.initial])
        while queue:
            state = queue.popleft()
            for letter in self.alphabet.letters:
                target = self.update[(state, letter)]
                if target not in seen:
                    seen.add(target)
                    order.append(target)
                    queue.append(target)
        return tuple(order)

    def to_general(self) -> "FiniteMemoryStrategy":
        return self

    def __repr__(self):
        return "FiniteMemoryStrategy(memory={}, initial={!r})".format(len(self.memory), self.initial)
