"""
Readers and writers for the textual automaton, strategy and game files.

Shared grammar, one item per line, '#' starts a comment:

    player <name>: <action> <action> ...      one line per player, in order
    <key>: <value>                            header lines, see below
    <state> , <letter> -> <state>             transitions

A letter joins one action per player with commas, e.g. c,d. The
letter '_' in a transition stands for every letter the source state
has no explicit transition for.

Automaton headers: kind (dfa | buchi | safety), states, initial,
accepting (dfa and buchi only).

Strategy headers: form (product | general), states, initial,
default (target for every missing transition), and per state
    allow <state>: <actions of player 1> | <actions of player 2> ...    product form
    allow <state>: <letter> <letter> ...                                general form
States without an allow line permit nothing.

Game files hold the player lines and one payoff line per letter:
    <letter> : <payoff 1> <payoff 2> ...
"""

import logging
import re
from fractions import Fraction

from Automata.DeterministicAutomaton import DetBuchiAutomaton
from Automata.DeterministicAutomaton import Dfa
from Automata.DeterministicAutomaton import SafetyAutomaton
from Games.Game import Game
from Preprocessing.LassoFrontend import format_letter
from Preprocessing.LassoFrontend import parse_letter
from Strategies.FiniteMemoryStrategy import FiniteMemoryStrategy
from Strategies.ProductStrategyVector import ProductStrategyVector
from Words.MoveAlphabet import MoveAlphabet

logger = logging.getLogger(__name__)

WILDCARD = "_"
AUTOMATON_KINDS = {"dfa": Dfa, "buchi": DetBuchiAutomaton, "safety": SafetyAutomaton}

_TRANSITION = re.compile(r"^(?P<source>[^\s,]+)\s*,\s*(?P<letter>\S+)\s*->\s*(?P<target>[^\s,]+)$")
_PLAYER = re.compile(r"^player\s+(?P<name>[^\s:]+)\s*:(?P<actions>.*)$")
_ALLOW = re.compile(r"^allow\s+(?P<state>[^\s:]+)\s*:(?P<moves>.*)$")
_HEADER = re.compile(r"^(?P<key>[a-z_]+)\s*:(?P<value>.*)$")
_PAYOFF = re.compile(r"^(?P<letter>[^\s:]+)\s*:(?P<values>.*)$")
_SAFE_STATE = re.compile(r"^[^\s,:|#()]+$")


class ParseError(ValueError):

    def __init__(self, message, path="<text>", line=0, column=1):
        self.path = path
        self.line = line
        self.column = column
        self.message = message
        super().__init__("{}:{}:{}: {}".format(path, line, column, message))


class FileFrontend:
    """
    Splits a file into player declarations, header values, allow
    lines, transitions and payoff lines, remembering where each item
    came from so that later checks can point at the offending line.
    """

    def __init__(self, text, path="<text>", payoff_lines=False):
        self.path = path
        self.players = list()
        self.headers = dict()
        self.allow = list()
        self.transitions = list()
        self.payoffs = list()
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            stripped = line.strip()
            if stripped == "":
                continue
            column = len(line) - len(line.lstrip()) + 1
            position = (number, column)
            match = _PLAYER.match(stripped)
            if match:
                self.players.append((match.group("name"), match.group("actions").split(), position))
                continue
            match = _ALLOW.match(stripped)
            if match:
                self.allow.append((match.group("state"), match.group("moves").strip(), position))
                continue
            match = _TRANSITION.match(stripped)
            if match:
                self.transitions.append((match.group("source"), match.group("letter"), match.group("target"), position))
                continue
            match = _HEADER.match(stripped)
            if match and not payoff_lines:
                key = match.group("key")
                if key in self.headers:
                    self.error("Duplicate header {!r}".format(key), position)
                self.headers[key] = (match.group("value").strip(), position)
                continue
            match = _PAYOFF.match(stripped)
            if match and payoff_lines:
                self.payoffs.append((match.group("letter"), match.group("values").split(), position))
                continue
            self.error("Cannot read line {!r}".format(stripped), position)

    def error(self, message, position=(0, 1)):
        raise ParseError(message, self.path, position[0], position[1])

    def header(self, key, required=True):
        if key not in self.headers:
            if required:
                self.error("Missing header '{}:'".format(key))
            return None, (0, 1)
        return self.headers[key]

    def check_headers(self, allowed):
        for key, (_, position) in self.headers.items():
            if key not in allowed:
                self.error("Unknown header {!r}; expected one of {}".format(key, ", ".join(sorted(allowed))), position)

    def alphabet(self) -> MoveAlphabet:
        if len(self.players) == 0:
            self.error("No 'player <name>: <actions>' declaration")
        try:
            return MoveAlphabet.from_lists(*[actions for _, actions, _ in self.players],
                                           player_names=[name for name, _, _ in self.players])
        except ValueError as error:
            self.error(str(error), self.players[0][2])

    def states(self):
        value, position = self.header("states")
        states = value.split()
        if len(states) == 0:
            self.error("The state list is empty", position)
        if len(set(states)) != len(states):
            self.error("Duplicate state names", position)
        return states

    def known_state(self, state, states, position):
        if state not in states:
            self.error("Unknown state {!r}".format(state), position)
        return state

    def letter(self, alphabet, token, position):
        try:
            return parse_letter(alphabet, token)
        except ValueError as error:
            self.error(str(error), position)

    def transition_map(self, alphabet, states, default=None):
        """
        Explicit transitions first, then wildcards, then the default
        target for whatever is still missing.
        """
        explicit = dict()
        wildcards = dict()
        for source, token, target, position in self.transitions:
            self.known_state(source, states, position)
            self.known_state(target, states, position)
            if token == WILDCARD:
                if source in wildcards:
                    self.error("Second wildcard transition for state {!r}".format(source), position)
                wildcards[source] = target
                continue
            letter = self.letter(alphabet, token, position)
            if (source, letter) in explicit and explicit[(source, letter)] != target:
                self.error("Nondeterministic transition from {!r} on {}".format(source, token), position)
            explicit[(source, letter)] = target
        transitions = dict(explicit)
        for state in states:
            for letter in alphabet.letters:
                if (state, letter) in transitions:
                    continue
                if state in wildcards:
                    transitions[(state, letter)] = wildcards[state]
                elif default is not None:
                    transitions[(state, letter)] = default
        return transitions


def _read_text(path):
    with open(path, "r", encoding="utf8") as file:
        return file.read()


def parse_automaton(text, path="<text>"):
    frontend = FileFrontend(text, path)
    frontend.check_headers({"kind", "states", "initial", "accepting"})
    kind, position = frontend.header("kind")
    if kind not in AUTOMATON_KINDS:
        frontend.error("Unknown automaton kind {!r}; expected dfa, buchi or safety".format(kind), position)
    alphabet = frontend.alphabet()
    states = frontend.states()
    initial, position = frontend.header("initial")
    frontend.known_state(initial, states, position)
    accepting = list()
    value, position = frontend.header("accepting", required=False)
    if value is not None:
        if kind == "safety":
            frontend.error("Safety automata accept through their runs; drop the 'accepting:' line", position)
        accepting = [frontend.known_state(state, states, position) for state in value.split()]
    transitions = frontend.transition_map(alphabet, states)
    try:
        automaton = AUTOMATON_KINDS[kind](alphabet, states, initial, transitions, accepting)
    except ValueError as error:
        frontend.error(str(error))
    logger.debug("[parse_automaton] %s: %s", path, automaton)
    return automaton


def read_automaton(path):
    return parse_automaton(_read_text(path), str(path))


def _parse_moves(frontend, alphabet, form, text, position):
    if form == "general":
        return [frontend.letter(alphabet, token, position) for token in text.split()]
    parts = text.split("|")
    if len(parts) != alphabet.player_count:
        frontend.error("Expected {} '|'-separated action lists, got {}".format(alphabet.player_count, len(parts)), position)
    per_player = list()
    for player, part in enumerate(parts):
        actions = set()
        for name in part.split():
            try:
                actions.add(alphabet.action_index(player, name))
            except ValueError as error:
                frontend.error(str(error), position)
        per_player.append(actions)
    return per_player


def parse_strategy(text, path="<text>"):
    frontend = FileFrontend(text, path)
    frontend.check_headers({"form", "states", "initial", "default"})
    form, position = frontend.header("form")
    if form not in ("product", "general"):
        frontend.error("Unknown strategy form {!r}; expected product or general".format(form), position)
    alphabet = frontend.alphabet()
    states = frontend.states()
    initial, position = frontend.header("initial")
    frontend.known_state(initial, states, position)
    default, position = frontend.header("default", required=False)
    if default is not None:
        frontend.known_state(default, states, position)
    allowed = dict()
    for state, moves, position in frontend.allow:
        frontend.known_state(state, states, position)
        if state in allowed:
            frontend.error("Second allow line for state {!r}".format(state), position)
        allowed[state] = _parse_moves(frontend, alphabet, form, moves, position)
    transitions = frontend.transition_map(alphabet, states, default)
    for state in states:
        for letter in alphabet.letters:
            if (state, letter) not in transitions:
                frontend.error("Memory update is not total: state {!r} has no transition on {}; "
                               "add a wildcard or a 'default:' line".format(state, format_letter(alphabet, letter)))
    try:
        if form == "product":
            strategy = ProductStrategyVector(alphabet, states, initial, transitions,
                                             {state: allowed.get(state, [set()] * alphabet.player_count)
                                              for state in states})
        else:
            strategy = FiniteMemoryStrategy(alphabet, states, initial, transitions, allowed)
    except ValueError as error:
        frontend.error(str(error))
    logger.debug("[parse_strategy] %s: %s", path, strategy)
    return strategy


def read_strategy(path):
    return parse_strategy(_read_text(path), str(path))


def parse_game(text, path="<text>"):
    frontend = FileFrontend(text, path, payoff_lines=True)
    alphabet = frontend.alphabet()
    utility = dict()
    for token, values, position in frontend.payoffs:
        letter = frontend.letter(alphabet, token, position)
        if letter in utility:
            frontend.error("Second payoff line for {}".format(token), position)
        if len(values) != alphabet.player_count:
            frontend.error("Expected {} payoffs, got {}".format(alphabet.player_count, len(values)), position)
        try:
            utility[letter] = tuple(Fraction(value) for value in values)
        except (ValueError, ZeroDivisionError):
            frontend.error("Payoffs must be rational numbers: {}".format(" ".join(values)), position)
    missing = [letter for letter in alphabet.letters if letter not in utility]
    if missing:
        frontend.error("No payoff line for {}".format(format_letter(alphabet, missing[0])))
    return Game(alphabet, utility)


def read_game(path):
    return parse_game(_read_text(path), str(path))


def state_names(states):
    """
    Printable names for arbitrary state objects. Falls back to q0, q1, ...
    when some str() is unsafe for the grammar or two states collide.
    """
    names = [str(state) for state in states]
    if all(_SAFE_STATE.match(name) for name in names) and len(set(names)) == len(names) \
            and not any(name == WILDCARD for name in names):
        return dict(zip(states, names))
    return {state: "q{}".format(index) for index, state in enumerate(states)}


def _player_lines(alphabet):
    return ["player {}: {}".format(name, " ".join(actions))
            for name, actions in zip(alphabet.player_names, alphabet.action_names)]


def format_automaton(automaton):
    if automaton.is_empty_automaton:
        raise ValueError("The empty automaton has no textual form; report the empty language instead.")
    alphabet = automaton.alphabet
    names = state_names(automaton.states)
    lines = ["kind: {}".format(automaton.kind)]
    lines.extend(_player_lines(alphabet))
    lines.append("states: {}".format(" ".join(names[state] for state in automaton.states)))
    lines.append("initial: {}".format(names[automaton.initial]))
    if automaton.kind != "safety":
        lines.append("accepting: {}".format(" ".join(names[state] for state in automaton.states
                                                     if state in automaton.accepting)))
    for state in automaton.states:
        for letter, target in automaton.successors(state).items():
            lines.append("{} , {} -> {}".format(names[state], format_letter(alphabet, letter), names[target]))
    return "\n".join(lines) + "\n"


def format_strategy(strategy):
    alphabet = strategy.alphabet
    names = state_names(strategy.memory)
    product = isinstance(strategy, ProductStrategyVector)
    lines = ["form: {}".format("product" if product else "general")]
    lines.extend(_player_lines(alphabet))
    lines.append("states: {}".format(" ".join(names[state] for state in strategy.memory)))
    lines.append("initial: {}".format(names[strategy.initial]))
    for state in strategy.memory:
        if product:
            moves = " | ".join(" ".join(alphabet.action_names[player][action] for action in sorted(actions))
                               for player, actions in enumerate(strategy.allowed_per_player[state]))
        else:
            moves = " ".join(format_letter(alphabet, letter) for letter in sorted(strategy.moves(state)))
        lines.append("allow {}: {}".format(names[state], moves).rstrip())
    for state in strategy.memory:
        for letter in alphabet.letters:
            lines.append("{} , {} -> {}".format(names[state], format_letter(alphabet, letter),
                                                names[strategy.next_memory(state, letter)]))
    return "\n".join(lines) + "\n"


def format_game(game):
    lines = _player_lines(game.alphabet)
    for letter in game.alphabet.letters:
        lines.append("{} : {}".format(format_letter(game.alphabet, letter),
                                      " ".join(str(value) for value in game.utility[letter])))
    return "\n".join(lines) + "\n"
