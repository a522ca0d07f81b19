"""
Good-match checking: the payoff of a match against the best
i-variation inside the ambient language, one deviation time at a time.
"""

import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Dict
from typing import Optional
from typing import Tuple

import numpy as np

from Automata.DeterministicAutomaton import SafetyAutomaton
from Automata.language_operations import omega_membership
from Games.Game import Game
from Games.discounted_payoff import discounted_payoff
from Utility.utils import check_discount_factor
from Words.LassoWord import LassoWord
from Words.MoveAlphabet import MoveLetter
from Words.word_operations import normalize_lasso

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9
DEFAULT_MAX_STEPS = 100000
DEFAULT_MAX_POLICY_ROUNDS = 10000
POLICY_CHECK_INTERVAL = 64


@dataclass(frozen=True)
class PositionMargin:
    position: int
    state: object
    on_path_value: float
    deviation_value: Optional[float]
    deviation: Optional[MoveLetter]

    @property
    def margin(self) -> Optional[float]:
        if self.deviation_value is None:
            return None
        return self.on_path_value - self.deviation_value


@dataclass(frozen=True)
class GoodMatchVerdict:
    """
    Outcome of comparing h with its best i-variations.

    positions lists one entry per position of the walk; the pair
    (phase of h, state of Y) at loop_end equals the one at loop_start,
    so later positions repeat the entries from loop_start on.
    """
    good: bool
    player: int
    delta: float
    tolerance: float
    positions: Tuple[PositionMargin, ...]
    loop_start: int
    loop_end: int
    worst_position: Optional[int] = None
    margin: Optional[float] = None
    deviation: Optional[MoveLetter] = None
    boundary: bool = field(default=False)

    def entry_at(self, t: int) -> PositionMargin:
        if t < self.loop_end:
            return self.positions[t]
        period = self.loop_end - self.loop_start
        return self.positions[self.loop_start + (t - self.loop_start) % period]

    def margin_at(self, t: int) -> Optional[float]:
        return self.entry_at(t).margin

    def margins(self):
        return [(entry.position, entry.margin) for entry in self.positions]

    def payoff_gap(self, t: int) -> Optional[float]:
        """
        pi_i(h) - pi_i(best i-variation diverging at t), which is the
        margin at t discounted back to the start of the match.
        """
        margin = self.margin_at(t)
        if margin is None:
            return None
        return self.delta ** t * margin


def _check_trim(language: SafetyAutomaton):
    if language.is_empty_automaton:
        raise ValueError("The ambient language is empty.")
    stuck = [state for state in language.states if len(language.successors(state)) == 0]
    if stuck:
        raise ValueError("The ambient automaton is not trim: {} has no successor".format(stuck[0]))


def _edge_arrays(language, game, player):
    index = {state: position for position, state in enumerate(language.states)}
    sources, targets, rewards = list(), list(), list()
    for state in language.states:
        for letter, target in language.successors(state).items():
            sources.append(index[state])
            targets.append(index[target])
            rewards.append(float(game.payoff(letter, player)))
    return index, np.array(sources, dtype=np.int64), np.array(targets, dtype=np.int64), np.array(rewards)


def _greedy_edges(sources, candidates, state_count):
    """
    Index of a best outgoing edge per state, in state order; ties go to
    the earliest edge.
    """
    order = np.lexsort((np.arange(len(sources)), -candidates, sources))
    _, first = np.unique(sources[order], return_index=True)
    if len(first) != state_count:
        raise ValueError("Every state needs an outgoing edge")
    return order[first]


def _evaluate_policy(policy, targets, rewards, delta):
    """
    Exact value of a memoryless policy: solves (I - delta P) V = (1 - delta) r.
    """
    state_count = len(policy)
    transition = np.zeros((state_count, state_count))
    np.add.at(transition, (np.arange(state_count), targets[policy]), 1.0)
    return np.linalg.solve(np.eye(state_count) - delta * transition, (1 - delta) * rewards[policy])


def _policy_iteration(policy, sources, targets, rewards, delta, max_rounds=DEFAULT_MAX_POLICY_ROUNDS):
    improvement_floor = 1e-12 * (1 + float(np.max(np.abs(rewards))))
    policy = policy.copy()
    for round_number in range(max_rounds):
        values = _evaluate_policy(policy, targets, rewards, delta)
        candidates = (1 - delta) * rewards + delta * values[targets]
        greedy = _greedy_edges(sources, candidates, len(policy))
        improves = candidates[greedy] > values + improvement_floor
        if not np.any(improves):
            logger.debug("[best_deviation_value] policy stable after %d rounds", round_number + 1)
            return values
        policy[improves] = greedy[improves]
    raise RuntimeError("Policy iteration cycled for {} rounds (delta = {})".format(max_rounds, delta))


def best_deviation_value(language: SafetyAutomaton,
                         game: Game,
                         player: int,
                         delta,
                         tol: float = DEFAULT_TOLERANCE,
                         max_steps: int = DEFAULT_MAX_STEPS) -> Dict[object, float]:
    """
    V(q) = max over letters a available at q of (1 - delta) pi_i(a) + delta V(q.a)

    Value iteration from zero. Stops once a step moves no value by more
    than tol (1 - delta) / (2 delta), which bounds the remaining error
    by tol. When the greedy policy settles first, or max_steps sweeps
    pass, the values are finished exactly by policy iteration, so
    discount factors close to 1 converge as well.
    """
    check_discount_factor(delta)
    if tol <= 0:
        raise ValueError("Tolerance must be positive, got {}".format(tol))
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1, got {}".format(max_steps))
    _check_trim(language)
    delta = float(delta)
    index, sources, targets, rewards = _edge_arrays(language, game, player)
    values = np.zeros(len(index))
    stopping_step = tol * (1 - delta) / (2 * delta)
    settled = None
    for step in range(max_steps):
        candidates = (1 - delta) * rewards + delta * values[targets]
        updated = np.full(len(index), -np.inf)
        np.maximum.at(updated, sources, candidates)
        change = np.max(np.abs(updated - values))
        values = updated
        if change <= stopping_step:
            logger.debug("[best_deviation_value] player %d converged after %d steps", player, step + 1)
            return {state: float(values[position]) for state, position in index.items()}
        if (step + 1) % POLICY_CHECK_INTERVAL == 0:
            greedy = _greedy_edges(sources, candidates, len(index))
            if settled is not None and np.array_equal(greedy, settled):
                break
            settled = greedy
    candidates = (1 - delta) * rewards + delta * values[targets]
    policy = _greedy_edges(sources, candidates, len(index))
    logger.debug("[best_deviation_value] player %d finishing by policy iteration after %d steps", player, step + 1)
    values = _policy_iteration(policy, sources, targets, rewards, delta)
    return {state: float(values[position]) for state, position in index.items()}


def _letter_value(game, player, delta, values, letter, target):
    return (1 - delta) * float(game.payoff(letter, player)) + delta * values[target]


def greedy_policy(language: SafetyAutomaton, game: Game, player: int, delta, values) -> Dict[object, MoveLetter]:
    """
    Memoryless policy picking at each state a letter attaining V;
    ties go to the first letter in alphabet order.
    """
    delta = float(delta)
    policy = dict()
    for state in language.states:
        best = None
        for letter in language.alphabet.letters:
            target = language.step(state, letter)
            if target is None:
                continue
            value = _letter_value(game, player, delta, values, letter, target)
            if best is None or value > best[0]:
                best = (value, letter)
        policy[state] = best[1]
    return policy


def complete_deviation(h: LassoWord,
                       language: SafetyAutomaton,
                       t: int,
                       deviation: MoveLetter,
                       policy: Dict[object, MoveLetter]) -> LassoWord:
    """
    The i-variation h_0 ... h_{t-1} deviation, continued by the policy
    until a state repeats. Lies in the language by construction.
    """
    stem = tuple(h.letter_at(k) for k in range(t)) + (deviation,)
    state = language.run(stem)
    if state is None:
        raise ValueError("The deviation leaves the language at position {}".format(t))
    order = dict()
    letters = list()
    while state not in order:
        order[state] = len(letters)
        letter = policy[state]
        letters.append(letter)
        state = language.step(state, letter)
    start = order[state]
    return normalize_lasso(LassoWord(stem + tuple(letters[:start]), tuple(letters[start:])))


def is_good_match(h: LassoWord,
                  language: SafetyAutomaton,
                  game: Game,
                  player: int,
                  delta,
                  tol: float = DEFAULT_TOLERANCE,
                  values: Optional[Dict[object, float]] = None) -> GoodMatchVerdict:
    check_discount_factor(delta)
    if not omega_membership(h, language):
        raise ValueError("The match is not a member of the ambient language.")
    if values is None:
        values = best_deviation_value(language, game, player, delta, tol)
    float_delta = float(delta)
    on_path = dict()
    positions = list()
    seen = dict()
    state = language.initial
    t = 0
    while (h.phase(t), state) not in seen:
        seen[(h.phase(t), state)] = t
        phase = h.phase(t)
        if phase not in on_path:
            on_path[phase] = float(discounted_payoff(game, delta, h.suffix(t))[player])
        letter = h.letter_at(t)
        best = None
        for variation in language.alphabet.variations(letter, player):
            target = language.step(state, variation)
            if target is None:
                continue
            value = _letter_value(game, player, float_delta, values, variation, target)
            if best is None or value > best[0]:
                best = (value, variation)
        positions.append(PositionMargin(position=t,
                                        state=state,
                                        on_path_value=on_path[phase],
                                        deviation_value=None if best is None else best[0],
                                        deviation=None if best is None else best[1]))
        state = language.step(state, letter)
        t += 1
    loop_start = seen[(h.phase(t), state)]

    compared = [entry for entry in positions if entry.margin is not None]
    if len(compared) == 0:
        return GoodMatchVerdict(good=True, player=player, delta=float_delta, tolerance=tol,
                                positions=tuple(positions), loop_start=loop_start, loop_end=t)
    worst = min(compared, key=lambda entry: entry.margin)
    good = worst.margin >= -tol
    logger.debug("[is_good_match] player %d, %d positions, worst margin %g at %d",
                 player, len(positions), worst.margin, worst.position)
    return GoodMatchVerdict(good=good,
                            player=player,
                            delta=float_delta,
                            tolerance=tol,
                            positions=tuple(positions),
                            loop_start=loop_start,
                            loop_end=t,
                            worst_position=worst.position,
                            margin=worst.margin,
                            deviation=None if good else worst.deviation,
                            boundary=good and abs(worst.margin) <= tol)
