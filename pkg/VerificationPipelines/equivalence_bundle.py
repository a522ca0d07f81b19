"""
On random deterministic Büchi automata: L is strategical iff the
minimal strategy regenerates L iff the arrow of Pref(L) is L, and the
minimal strategy always generates the safety closure.
"""

import random

from tabulate import tabulate
from tqdm import tqdm

from Automata.language_operations import arrow
from Automata.language_operations import equivalent
from Automata.language_operations import is_strategical
from Automata.language_operations import pref_automaton
from Automata.language_operations import safety_closure
from Strategies.strategy_operations import gamma
from Strategies.strategy_operations import minimal_strategy
from Utility.random_instances import random_alphabet
from Utility.random_instances import random_buchi


def run(seed=131714, cases=500, show=True):
    rng = random.Random(seed)
    route_disagreements = 0
    predicate_discrepancies = 0
    closure_discrepancies = 0
    strategical = 0
    for _ in tqdm(range(cases), disable=not show):
        language = random_buchi(rng, random_alphabet(rng), max_states=6)
        try:
            closed = is_strategical(language)
        except RuntimeError:
            route_disagreements += 1
            continue
        generated = gamma(minimal_strategy(language))
        by_minimal_strategy = equivalent(generated, language)
        by_arrow = equivalent(arrow(pref_automaton(language)), language)
        if not closed == by_minimal_strategy == by_arrow:
            predicate_discrepancies += 1
        if not equivalent(generated, safety_closure(language)):
            closure_discrepancies += 1
        strategical += int(closed)
    rows = [["closure and arrow routes agree", cases, route_disagreements, ""],
             ["three strategical characterizations agree", cases, predicate_discrepancies,
              "{} strategical".format(strategical)],
             ["minimal strategy generates the closure", cases, closure_discrepancies, ""]]
    if show:
        print(tabulate(rows, headers=["check", "cases", "discrepancies", "detail"]))
    return rows
