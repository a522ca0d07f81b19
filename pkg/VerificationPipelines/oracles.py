"""
Cross-checks against brute force: containment against lasso
enumeration, value iteration against finite-horizon dynamic
programming, closed-form payoffs against truncated series, the
ultrametric, and self-validation of bad good-match verdicts.
"""

import itertools
import random

from tabulate import tabulate
from tqdm import tqdm

from Automata.DeterministicAutomaton import DetBuchiAutomaton
from Automata.language_operations import contains
from Automata.language_operations import enumerate_lassos
from Automata.language_operations import omega_membership
from Games.discounted_payoff import discounted_payoff
from Games.good_matches import best_deviation_value
from Games.good_matches import complete_deviation
from Games.good_matches import greedy_policy
from Games.good_matches import is_good_match
from Utility.random_instances import random_buchi
from Utility.random_instances import random_game
from Utility.random_instances import random_lasso
from Utility.random_instances import random_safety
from Words.LassoWord import LassoWord
from Words.MoveAlphabet import MoveAlphabet
from Words.word_operations import metric_distance

SMALL_ALPHABET = MoveAlphabet.from_lists(["a", "b"])
PD_ALPHABET = MoveAlphabet.from_lists(["c", "d"], ["c", "d"])


def all_lassos(alphabet, max_stem, max_cycle):
    for stem_length in range(max_stem + 1):
        for stem in itertools.product(alphabet.letters, repeat=stem_length):
            for cycle_length in range(1, max_cycle + 1):
                for cycle in itertools.product(alphabet.letters, repeat=cycle_length):
                    yield LassoWord(stem, cycle)


def _random_small_automaton(rng):
    automaton = random_buchi(rng, SMALL_ALPHABET, max_states=3, density=0.7, accepting_probability=0.5)
    if rng.random() < 0.3:
        return DetBuchiAutomaton(automaton.alphabet, automaton.states, automaton.initial,
                                 automaton.transitions, automaton.states)
    return automaton


def containment_discrepancies(rng, cases, show):
    lassos = list(all_lassos(SMALL_ALPHABET, 4, 4))
    failures = 0
    for _ in tqdm(range(cases), disable=not show):
        first = _random_small_automaton(rng)
        second = _random_small_automaton(rng)
        included, witness = contains(first, second)
        if included:
            if any(omega_membership(h, first) and not omega_membership(h, second) for h in lassos):
                failures += 1
        elif not (omega_membership(witness, first) and not omega_membership(witness, second)):
            failures += 1
    return failures


def horizon_values(language, game, player, delta, horizon):
    values = {state: 0.0 for state in language.states}
    for _ in range(horizon):
        values = {state: max((1 - delta) * float(game.payoff(letter, player)) + delta * values[target]
                             for letter, target in language.successors(state).items())
                  for state in language.states}
    return values


def value_iteration_discrepancies(rng, cases, show, horizon=30, tol=1e-9):
    failures = 0
    for _ in tqdm(range(cases), disable=not show):
        language = random_safety(rng, PD_ALPHABET, max_states=4)
        game = random_game(rng, PD_ALPHABET)
        player = rng.randrange(2)
        delta = rng.choice([0.1, 0.3, 0.5, 0.7])
        values = best_deviation_value(language, game, player, delta, tol)
        reference = horizon_values(language, game, player, delta, horizon)
        bound = tol + delta ** horizon * float(game.max_abs_payoff()) / (1 - delta)
        if any(abs(values[state] - reference[state]) > bound for state in language.states):
            failures += 1
    return failures


def truncated_payoff(game, delta, h, terms=200):
    return tuple((1 - delta) * sum(float(game.payoff(h.letter_at(k), player)) * delta ** k for k in range(terms))
                 for player in range(game.player_count))


def payoff_discrepancies(rng, cases, show):
    failures = 0
    for _ in tqdm(range(cases), disable=not show):
        game = random_game(rng, PD_ALPHABET)
        delta = rng.choice([0.1, 0.25, 0.5, 0.75, 0.9])
        h = random_lasso(rng, PD_ALPHABET)
        bound = float(game.max_abs_payoff()) * delta ** 200 / (1 - delta) + 1e-9
        exact = discounted_payoff(game, delta, h)
        if any(abs(value - reference) > bound for value, reference in zip(exact, truncated_payoff(game, delta, h))):
            failures += 1
            continue
        for t in range(2 * h.representation_length + 1):
            head = [(1 - delta) * sum(float(game.payoff(h.letter_at(k), player)) * delta ** k for k in range(t))
                    for player in range(game.player_count)]
            shifted = discounted_payoff(game, delta, h.suffix(t))
            if any(abs(exact[player] - head[player] - delta ** t * shifted[player]) > 1e-9
                   for player in range(game.player_count)):
                failures += 1
                break
    return failures


def metric_discrepancies(rng, cases):
    failures = 0
    for _ in range(cases):
        x, y, z = (random_lasso(rng, SMALL_ALPHABET, max_stem=3, max_cycle=3) for _ in range(3))
        if metric_distance(x, x) != 0 or metric_distance(x, y) != metric_distance(y, x):
            failures += 1
        elif metric_distance(x, z) > max(metric_distance(x, y), metric_distance(y, z)):
            failures += 1
    return failures


def deviation_discrepancies(rng, cases, show, tol=1e-9):
    """
    Returns (bad verdicts checked, failures): every clearly bad verdict
    must come with an i-variation that pays the player more.
    """
    checked = 0
    failures = 0
    for _ in tqdm(range(cases), disable=not show):
        language = random_safety(rng, PD_ALPHABET, max_states=4)
        game = random_game(rng, PD_ALPHABET)
        player = rng.randrange(2)
        delta = rng.choice([0.3, 0.5, 0.7])
        values = best_deviation_value(language, game, player, delta, tol)
        policy = greedy_policy(language, game, player, delta, values)
        for h in itertools.islice(enumerate_lassos(language, 4), 5):
            verdict = is_good_match(h, language, game, player, delta, tol, values=values)
            if verdict.good or verdict.margin > -1e-6:
                continue
            checked += 1
            variation = complete_deviation(h, language, verdict.worst_position, verdict.deviation, policy)
            if not omega_membership(variation, language) or \
                    discounted_payoff(game, delta, variation)[player] <= discounted_payoff(game, delta, h)[player]:
                failures += 1
    return checked, failures


def run(seed=131714, cases=50, show=True):
    rng = random.Random(seed)
    rows = [["contains against lasso enumeration", 6 * cases, containment_discrepancies(rng, 6 * cases, show), "|stem|, |cycle| <= 4"],
            ["value iteration against horizon 30", cases, value_iteration_discrepancies(rng, cases, show), ""],
            ["closed-form payoff against 200 terms", 2 * cases, payoff_discrepancies(rng, 2 * cases, show),
             "with shift consistency"],
            ["ultrametric on lasso triples", 20 * cases, metric_discrepancies(rng, 20 * cases), ""]]
    checked, failures = deviation_discrepancies(rng, cases, show)
    rows.append(["bad verdicts come with a better variation", checked, failures, ""])
    if show:
        print(tabulate(rows, headers=["check", "cases", "discrepancies", "detail"]))
    return rows
