import random
import sys

from Games.discounted_payoff import partial_payoff
from Preprocessing.LassoFrontend import format_letter
from Preprocessing.LassoFrontend import format_word
from Strategies.ProductStrategyVector import ProductStrategyVector
from Utility.utils import check_discount_factor
from Utility.utils import format_number


class PlaySession:
    """
    A human plays one component of a strategy vector, the engine
    plays the others. Engine choices are uniform over the actions the
    vector allows at the current memory state, drawn from a seeded
    generator, so a scripted input replays identically.
    """

    def __init__(self, strategy, game, human, delta, horizon, seed=131714, input_stream=None, output_stream=None):
        if not isinstance(strategy, ProductStrategyVector):
            raise ValueError("Play needs a strategy vector in product form")
        if game.alphabet != strategy.alphabet:
            raise ValueError("Game and strategy use different alphabets")
        if not 0 <= human < game.player_count:
            raise ValueError("Unknown player {}".format(human + 1))
        if horizon < 1:
            raise ValueError("The horizon must be at least 1, got {}".format(horizon))
        check_discount_factor(delta)
        self.strategy = strategy
        self.game = game
        self.alphabet = game.alphabet
        self.human = human
        self.delta = delta
        self.horizon = horizon
        self.rng = random.Random(seed)
        self.input_stream = input_stream or sys.stdin
        self.output_stream = output_stream or sys.stdout
        self.transcript = list()
        self.history = tuple()
        self.left_strategy = False

    def say(self, line=""):
        self.transcript.append(line)
        print(line, file=self.output_stream)

    def _ask(self, options):
        names = self.alphabet.action_names[self.human]
        while True:
            self.say("your action for {} [{}]:".format(self.alphabet.player_names[self.human], " ".join(names)))
            line = self.input_stream.readline()
            if line == "":
                return None
            choice = line.strip()
            self.transcript.append("> {}".format(choice))
            if choice in names:
                if names.index(choice) not in options:
                    self.say("note: {} is not permitted to you by the strategy here".format(choice))
                return names.index(choice)
            self.say("unknown action {!r}".format(choice))

    def run(self):
        player_name = self.alphabet.player_names[self.human]
        self.say("playing as {} for {} rounds, delta = {}".format(player_name, self.horizon, format_number(self.delta)))
        state = self.strategy.initial
        for round_number in range(1, self.horizon + 1):
            self.say("round {}".format(round_number))
            for player, actions in enumerate(self.strategy.allowed_per_player[state]):
                self.say("  {} may play {}".format(self.alphabet.player_names[player],
                                                   " ".join(self.alphabet.action_names[player][action]
                                                            for action in sorted(actions)) or "nothing"))
            engine_sets = [sorted(actions) for player, actions in enumerate(self.strategy.allowed_per_player[state])
                           if player != self.human]
            if len(self.strategy.player_moves(state, self.human)) == 0:
                self.left_strategy = True
                self.say("you have no permitted action: the match leaves the language of the strategy")
                break
            if any(len(actions) == 0 for actions in engine_sets):
                self.left_strategy = True
                self.say("the engine has no permitted action: the match leaves the language of the strategy")
                break
            action = self._ask(self.strategy.player_moves(state, self.human))
            if action is None:
                self.say("input ended")
                break
            letter = tuple(action if player == self.human else self.rng.choice(sorted(actions))
                           for player, actions in enumerate(self.strategy.allowed_per_player[state]))
            self.history = self.history + (letter,)
            state = self.strategy.next_memory(state, letter)
            payoff = partial_payoff(self.game, self.delta, self.history)
            self.say("  move {}, partial payoff {}".format(format_letter(self.alphabet, letter),
                                                            " ".join(format_number(value) for value in payoff)))
        self.say("history: {}".format(format_word(self.alphabet, self.history)))
        payoff = partial_payoff(self.game, self.delta, self.history)
        self.say("partial payoff: {}".format(" ".join(format_number(value) for value in payoff)))
        return self.transcript
