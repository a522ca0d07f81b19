import logging
import os
from pathlib import Path

from Automata.DeterministicAutomaton import DeterministicAutomaton
from Preprocessing.FileFrontend import ParseError
from Preprocessing.FileFrontend import read_automaton
from Preprocessing.FileFrontend import read_game
from Preprocessing.FileFrontend import read_strategy
from Utility.config import AnalysisConfig

logger = logging.getLogger(__name__)

GAME_SUFFIX = ".game"
AUTOMATON_SUFFIX = ".automaton"
STRATEGY_SUFFIX = ".strategy"


class Workspace:
    """
    Everything one invocation works on: at most one game, named
    strategies and named automata, all over the same alphabet. Names
    are the file names without their suffix.
    """

    def __init__(self, config=None):
        self.config = config or AnalysisConfig()
        self.alphabet = None
        self.game = None
        self.strategies = dict()
        self.automata = dict()

    def _adopt_alphabet(self, alphabet, path):
        if self.alphabet is None:
            self.alphabet = alphabet
        elif alphabet != self.alphabet:
            raise ParseError("Alphabet {} differs from the workspace alphabet {}".format(alphabet, self.alphabet),
                             str(path), 1, 1)

    def add_file(self, path):
        path = Path(path)
        name = path.stem
        if path.suffix == GAME_SUFFIX:
            if self.game is not None:
                raise ValueError("A workspace holds one game; {} is a second one".format(path))
            game = read_game(path)
            self._adopt_alphabet(game.alphabet, path)
            self.game = game
        elif path.suffix == STRATEGY_SUFFIX:
            if name in self.strategies:
                raise ValueError("Duplicate strategy name {!r}".format(name))
            strategy = read_strategy(path)
            self._adopt_alphabet(strategy.alphabet, path)
            self.strategies[name] = strategy
        elif path.suffix == AUTOMATON_SUFFIX:
            if name in self.automata:
                raise ValueError("Duplicate automaton name {!r}".format(name))
            automaton = read_automaton(path)
            self._adopt_alphabet(automaton.alphabet, path)
            self.automata[name] = automaton
        else:
            raise ValueError("Unknown file type {!r}; expected {}, {} or {}".format(
                path.name, GAME_SUFFIX, STRATEGY_SUFFIX, AUTOMATON_SUFFIX))
        logger.debug("[load] %s", path)

    def strategy(self, name):
        if name not in self.strategies:
            raise ValueError("Unknown strategy {!r}; known: {}".format(name, ", ".join(sorted(self.strategies)) or "none"))
        return self.strategies[name]

    def automaton(self, name, kinds=None) -> DeterministicAutomaton:
        if name not in self.automata:
            raise ValueError("Unknown automaton {!r}; known: {}".format(name, ", ".join(sorted(self.automata)) or "none"))
        automaton = self.automata[name]
        if kinds is not None and automaton.kind not in kinds:
            raise ValueError("Automaton {!r} is a {} automaton; expected {}".format(name, automaton.kind, " or ".join(kinds)))
        return automaton

    def require_game(self):
        if self.game is None:
            raise ValueError("The workspace has no {} file".format(GAME_SUFFIX))
        return self.game

    def __repr__(self):
        return "Workspace(game={}, strategies={}, automata={})".format(
            self.game is not None, sorted(self.strategies), sorted(self.automata))


def load(paths, config=None) -> Workspace:
    """
    Accepts files and directories; directories contribute every
    game, strategy and automaton file directly inside them.
    """
    if isinstance(paths, (str, os.PathLike)):
        paths = [paths]
    workspace = Workspace(config)
    for path in paths:
        path = Path(path)
        if path.is_dir():
            for child in sorted(path.iterdir()):
                if child.suffix in (GAME_SUFFIX, STRATEGY_SUFFIX, AUTOMATON_SUFFIX):
                    workspace.add_file(child)
        elif path.exists():
            workspace.add_file(path)
        else:
            raise ValueError("No such file or directory: {}".format(path))
    if workspace.alphabet is None:
        raise ValueError("Nothing to load from {}".format(", ".join(str(path) for path in paths)))
    return workspace
