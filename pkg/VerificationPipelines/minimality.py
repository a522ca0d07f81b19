"""
The minimal strategy of a closed language is below every strategy
generating that language.
"""

import random

from tabulate import tabulate
from tqdm import tqdm

from Automata.automaton_library import coordination_language
from Automata.automaton_library import grim_trigger_language
from Automata.automaton_library import wait_for_cooperation_language
from Automata.language_operations import equivalent
from Strategies.strategy_library import prisoners_dilemma_alphabet
from Strategies.strategy_operations import gamma
from Strategies.strategy_operations import minimal_strategy
from Strategies.strategy_operations import strategy_leq
from Utility.random_instances import random_alphabet
from Utility.random_instances import random_generator_of
from Utility.random_instances import random_strategy


def run(seed=131714, cases=200, show=True):
    rng = random.Random(seed)
    alphabet = prisoners_dilemma_alphabet()
    fixed_languages = [grim_trigger_language(alphabet), coordination_language(alphabet),
                       wait_for_cooperation_language(alphabet)]
    rows = list()

    wrong_language = 0
    not_minimal = 0
    for case in tqdm(range(cases), disable=not show):
        language = fixed_languages[case % len(fixed_languages)]
        strategy = random_generator_of(rng, language)
        if not equivalent(gamma(strategy), language):
            wrong_language += 1
            continue
        if not strategy_leq(minimal_strategy(language), strategy):
            not_minimal += 1
    rows.append(["generators of fixed closed languages", cases, wrong_language + not_minimal,
                 "{} generated another language".format(wrong_language)])

    not_minimal = 0
    for _ in tqdm(range(cases), disable=not show):
        strategy = random_strategy(rng, random_alphabet(rng))
        if not strategy_leq(minimal_strategy(gamma(strategy)), strategy):
            not_minimal += 1
    rows.append(["random strategies against the minimal one of their language", cases, not_minimal, ""])
    if show:
        print(tabulate(rows, headers=["check", "cases", "discrepancies", "detail"]))
    return rows
