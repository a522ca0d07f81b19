import itertools
from typing import Dict
from typing import FrozenSet
from typing import Hashable
from typing import Iterable
from typing import Sequence
from typing import Tuple

from Strategies.FiniteMemoryStrategy import FiniteMemoryStrategy
from Words.MoveAlphabet import MoveAlphabet
from Words.MoveAlphabet import MoveLetter


class ProductStrategyVector(FiniteMemoryStrategy):
    """
    Strategy vector sigma = (sigma_1, ..., sigma_n) sharing one memory.
    Each player i gets a set of action indices per memory state and the
    permitted moves are their product, so the move sets are rectangular
    by construction.
    """

    def __init__(self,
                 alphabet: MoveAlphabet,
                 memory: Iterable[Hashable],
                 initial: Hashable,
                 update: Dict[Tuple[Hashable, MoveLetter], Hashable],
                 allowed_per_player: Dict[Hashable, Sequence[Iterable[int]]]):
        memory = tuple(dict.fromkeys(memory))
        self.allowed_per_player = dict()
        for state in memory:
            per_player = allowed_per_player.get(state, [()] * alphabet.player_count)
            if len(per_player) != alphabet.player_count:
                raise ValueError("Memory state {!r} lists actions for {} players, expected {}".format(
                    state, len(per_player), alphabet.player_count))
            per_player = tuple(frozenset(actions) for actions in per_player)
            for player, actions in enumerate(per_player):
                for action in actions:
                    if not 0 <= action < len(alphabet.action_names[player]):
                        raise ValueError("Action index {} is invalid for player {}".format(action, player + 1))
            self.allowed_per_player[state] = per_player
        allowed = {state: frozenset(itertools.product(*(sorted(actions) for actions in self.allowed_per_player[state])))
                   for state in memory}
        super().__init__(alphabet, memory, initial, update, allowed)

    def player_moves(self, state, player) -> FrozenSet[int]:
        return self.allowed_per_player[state][player]

    def with_unpredictable(self, players: Iterable[int]) -> "ProductStrategyVector":
        """
        Replaces the components of the given players by the unpredictable
        strategy, which permits every action at every history. Its single
        memory state composes with this memory trivially.
        """
        players = set(players)
        everything = {player: frozenset(range(len(self.alphabet.action_names[player]))) for player in players}
        return ProductStrategyVector(self.alphabet, self.memory, self.initial, self.update,
                                     {state: [everything[player] if player in players else actions
                                              for player, actions in enumerate(self.allowed_per_player[state])]
                                      for state in self.memory})

    def to_general(self) -> FiniteMemoryStrategy:
        return FiniteMemoryStrategy(self.alphabet, self.memory, self.initial, self.update, self.allowed)

    def __repr__(self):
        return "ProductStrategyVector(memory={}, initial={!r})".format(len(self.memory), self.initial)
