import itertools
import re
from dataclasses import dataclass
from dataclasses import field
from functools import cached_property
from typing import Sequence
from typing import Tuple

MoveLetter = Tuple[int, ...]
FiniteWord = Tuple[MoveLetter, ...]

_RESERVED = re.compile(r"[\s,()|:#]")


@dataclass(frozen=True)
class MoveAlphabet:
    """
    The product alphabet A = A_1 x ... x A_n of simultaneous moves.

    A letter is a tuple holding one action index per player, so
    letters of different alphabets are only comparable through
    their names.
    """
    action_names: Tuple[Tuple[str, ...], ...]
    player_names: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        action_names = tuple(tuple(actions) for actions in self.action_names)
        object.__setattr__(self, "action_names", action_names)
        if len(action_names) == 0:
            raise ValueError("An alphabet needs at least one player.")
        for player, actions in enumerate(action_names):
            if len(actions) == 0:
                raise ValueError("Player {} has no actions.".format(player + 1))
            if len(set(actions)) != len(actions):
                raise ValueError("Player {} has duplicate actions: {}".format(player + 1, actions))
            for action in actions:
                if action == "" or action == "_" or _RESERVED.search(action):
                    raise ValueError("Invalid action name {!r} for player {}.".format(action, player + 1))
        if not self.player_names:
            object.__setattr__(self, "player_names", tuple("P{}".format(i + 1) for i in range(len(action_names))))
        elif len(self.player_names) != len(action_names):
            raise ValueError("Got {} player names for {} players.".format(len(self.player_names), len(action_names)))
        else:
            object.__setattr__(self, "player_names", tuple(self.player_names))

    @classmethod
    def from_lists(cls, *action_lists: Sequence[str], player_names=None):
        return cls(action_names=tuple(tuple(actions) for actions in action_lists),
                   player_names=tuple(player_names) if player_names else ())

    @property
    def player_count(self) -> int:
        return len(self.action_names)

    @property
    def size(self) -> int:
        size = 1
        for actions in self.action_names:
            size *= len(actions)
        return size

    @cached_property
    def letters(self) -> Tuple[MoveLetter, ...]:
        return tuple(itertools.product(*(range(len(actions)) for actions in self.action_names)))

    def contains_letter(self, letter) -> bool:
        if not isinstance(letter, tuple) or len(letter) != self.player_count:
            return False
        return all(isinstance(index, int) and 0 <= index < len(actions)
                   for index, actions in zip(letter, self.action_names))

    def check_letter(self, letter):
        if not self.contains_letter(letter):
            raise ValueError("{!r} is not a letter of {}".format(letter, self))
        return letter

    def action_index(self, player: int, name: str) -> int:
        try:
            return self.action_names[player].index(name)
        except ValueError:
            raise ValueError("Unknown action {!r} for player {}; expected one of {}".format(
                name, self.player_names[player], ", ".join(self.action_names[player])))

    def letter_from_names(self, names: Sequence[str]) -> MoveLetter:
        if len(names) != self.player_count:
            raise ValueError("A letter needs {} actions, got {}: {}".format(self.player_count, len(names), ",".join(names)))
        return tuple(self.action_index(player, name) for player, name in enumerate(names))

    def letter_names(self, letter: MoveLetter) -> Tuple[str, ...]:
        return tuple(self.action_names[player][index] for player, index in enumerate(letter))

    def variations(self, letter: MoveLetter, player: int) -> Tuple[MoveLetter, ...]:
        """
        All i-variations of a letter: same actions for every other
        player, a different action for the given one.
        """
        return tuple(letter[:player] + (index,) + letter[player + 1:]
                     for index in range(len(self.action_names[player])) if index != letter[player])

    def __str__(self):
        return " x ".join("{{{}}}".format(",".join(actions)) for actions in self.action_names)
