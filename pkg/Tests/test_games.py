import random
from fractions import Fraction

import pytest

from Automata.DeterministicAutomaton import SafetyAutomaton
from Automata.automaton_library import coordination_language
from Automata.automaton_library import grim_trigger_language
from Automata.automaton_library import universal
from Automata.automaton_library import wait_for_cooperation_language
from Automata.language_operations import equivalent
from Automata.language_operations import omega_membership
from Games.EquilibriumFamily import equilibrium_family
from Games.Game import Game
from Games.discounted_payoff import discounted_payoff
from Games.discounted_payoff import partial_payoff
from Games.good_matches import best_deviation_value
from Games.good_matches import complete_deviation
from Games.good_matches import greedy_policy
from Games.good_matches import is_good_match
from Games.nash import NashStatus
from Games.nash import is_nash
from Games.nash import nash_threshold
from Strategies.ProductStrategyVector import ProductStrategyVector
from Strategies.strategy_library import always_defect
from Strategies.strategy_library import balance_strategy
from Strategies.strategy_library import grim_trigger_pair
from Strategies.strategy_library import wait_for_cooperation
from Strategies.strategy_operations import gamma
from Tests.conftest import A
from Tests.conftest import B
from Tests.conftest import CC
from Tests.conftest import CD
from Tests.conftest import DC
from Tests.conftest import DD
from Utility.random_instances import random_game
from Utility.random_instances import random_safety
from Words.LassoWord import LassoWord

COOPERATION = LassoWord((), (CC,))
MUTUAL_DEFECTION = LassoWord((), (DD,))
LATE_EXPLOIT = LassoWord((DC,), (CD,))


def column_grim_language(alphabet):
    """
    (c,c)^omega + (c,c)^*(d,c)((c,d) + (d,d))^omega
    """
    return SafetyAutomaton(alphabet, ["cooperate", "punish"], "cooperate",
                           {("cooperate", CC): "cooperate",
                            ("cooperate", DC): "punish",
                            ("punish", CD)   : "punish",
                            ("punish", DD)   : "punish"})


def waiting_margin(delta):
    if delta >= Fraction(1, 5):
        return (1 - delta) * (5 * delta - 1)
    return 5 * delta - 1


def test_game_requires_every_letter(pd_alphabet):
    with pytest.raises(ValueError):
        Game(pd_alphabet, {CC: (1, 1)})
    with pytest.raises(ValueError):
        Game(pd_alphabet, {CC: (1, 1), CD: (1, 1), DC: (1, 1), DD: (1,)})


def test_payoff_of_constant_cooperation(pd_game):
    assert discounted_payoff(pd_game, Fraction(1, 2), COOPERATION) == (4, 4)
    assert discounted_payoff(pd_game, 0.5, COOPERATION) == pytest.approx((4.0, 4.0))


@pytest.mark.parametrize("delta", [Fraction(1, 10), Fraction(1, 5), Fraction(3, 10), Fraction(9, 10)])
def test_payoff_of_late_exploitation(pd_game, delta):
    assert discounted_payoff(pd_game, delta, LATE_EXPLOIT) == (5 * (1 - delta), 5 * delta)


@pytest.mark.parametrize("rounds", [1, 2, 3, 6])
def test_payoff_after_waiting_rounds(pd_game, rounds):
    delta = Fraction(1, 4)
    h = LassoWord((DD,) * rounds + (DC,), (CD,))
    assert discounted_payoff(pd_game, delta, h)[1] == 1 + delta ** rounds * (5 * delta - 1)


def test_payoff_with_stem_and_long_cycle(pd_game):
    half = Fraction(1, 2)
    assert discounted_payoff(pd_game, half, LassoWord((CD,), (DD,))) == (half, 3)
    assert discounted_payoff(pd_game, half, LassoWord((), (CC, DD))) == (3, 3)
    assert discounted_payoff(pd_game, half, LassoWord((CC,), (CC, CC))) == (4, 4)


def test_partial_payoff(pd_game):
    delta = Fraction(2, 3)
    assert partial_payoff(pd_game, delta, (CC,) * 5) == (4 * (1 - delta ** 5),) * 2
    assert partial_payoff(pd_game, delta, ()) == (0, 0)


@pytest.mark.parametrize("delta", [0, 1, Fraction(3, 2), -0.5, "1/2"])
def test_invalid_discount_factor(pd_game, delta):
    with pytest.raises(ValueError):
        discounted_payoff(pd_game, delta, COOPERATION)


def test_equilibrium_family_of_grim_pair(pd_alphabet):
    family = equilibrium_family(grim_trigger_pair(pd_alphabet))
    assert family.player_count == 2
    assert equivalent(family.x_players[0], grim_trigger_language(pd_alphabet))
    assert equivalent(family.x_players[1], column_grim_language(pd_alphabet))
    assert equivalent(family.y_players[0], family.x_players[1])
    assert equivalent(family.y_players[1], family.x_players[0])
    assert omega_membership(COOPERATION, family.x)
    assert not omega_membership(LassoWord((), (CC, DD)), family.x)


def test_equilibrium_family_of_unpredictable_vector(pd_alphabet):
    family = equilibrium_family(grim_trigger_pair(pd_alphabet).with_unpredictable([0, 1]))
    for language in (family.x,) + family.x_players + family.y_players:
        assert equivalent(language, universal(pd_alphabet))


def test_equilibrium_family_rejects_bad_queries(ab_alphabet):
    single = ProductStrategyVector(ab_alphabet, ["s"], "s", {("s", A): "s", ("s", B): "s"}, {"s": [{0}]})
    with pytest.raises(ValueError):
        equilibrium_family(single)
    with pytest.raises(TypeError):
        equilibrium_family(balance_strategy())


def test_best_deviation_value(pd_alphabet, pd_game):
    values = best_deviation_value(universal(pd_alphabet), pd_game, 0, Fraction(1, 2))
    assert values["any"] == pytest.approx(5, abs=1e-8)
    row_defects = gamma(always_defect(pd_alphabet).with_unpredictable([1]))
    values = best_deviation_value(row_defects, pd_game, 1, 0.9)
    assert values["defect"] == pytest.approx(1, abs=1e-8)


@pytest.mark.parametrize("delta", [0.1, 0.2, 0.5, 0.8, 0.95])
def test_best_deviation_value_of_grim_opponent(pd_alphabet, pd_game, delta):
    values = best_deviation_value(column_grim_language(pd_alphabet), pd_game, 0, delta)
    assert values["punish"] == pytest.approx(1, abs=1e-8)
    assert values["cooperate"] == pytest.approx(max(4, 5 - 4 * delta), abs=1e-8)


def test_best_deviation_value_errors(pd_alphabet, pd_game):
    stuck = SafetyAutomaton(pd_alphabet, ["s", "t"], "s", {("s", CC): "s", ("s", DD): "t"})
    with pytest.raises(ValueError):
        best_deviation_value(stuck, pd_game, 0, 0.5)
    with pytest.raises(ValueError):
        best_deviation_value(universal(pd_alphabet), pd_game, 0, 0.5, tol=0)
    with pytest.raises(ValueError):
        best_deviation_value(universal(pd_alphabet), pd_game, 0, 0.5, max_steps=0)


def test_best_deviation_value_finishes_exactly_after_few_sweeps(pd_alphabet, pd_game):
    values = best_deviation_value(universal(pd_alphabet), pd_game, 0, 0.99, max_steps=2)
    assert values["any"] == pytest.approx(5, abs=1e-9)
    values = best_deviation_value(column_grim_language(pd_alphabet), pd_game, 0, 0.9, max_steps=1)
    assert values["cooperate"] == pytest.approx(4, abs=1e-9)
    assert values["punish"] == pytest.approx(1, abs=1e-9)


@pytest.mark.parametrize("delta", [Fraction(999, 1000), Fraction(9999, 10000), 0.99999])
def test_best_deviation_value_close_to_one(pd_alphabet, pd_game, delta):
    values = best_deviation_value(column_grim_language(pd_alphabet), pd_game, 0, delta)
    assert values["punish"] == pytest.approx(1, abs=1e-8)
    assert values["cooperate"] == pytest.approx(4, abs=1e-8)


def test_grim_pair_is_nash_for_very_patient_players(pd_alphabet, pd_game):
    delta = Fraction(9999, 10000)
    verdict = is_nash(grim_trigger_pair(pd_alphabet), pd_game, delta, candidate=COOPERATION)
    assert verdict.status is NashStatus.WITNESS_FOUND
    for player_verdict in verdict.verdicts:
        assert player_verdict.good
        assert player_verdict.margin == pytest.approx(4 * float(delta) - 1, abs=1e-8)


@pytest.mark.parametrize("delta", [0.1, 0.5, 0.9])
@pytest.mark.parametrize("player", [0, 1])
def test_coordination_members_are_good(pd_alphabet, pd_game, delta, player):
    language = coordination_language(pd_alphabet)
    for h in (COOPERATION, MUTUAL_DEFECTION):
        assert is_good_match(h, language, pd_game, player, delta).good


@pytest.mark.corpus
def test_best_deviation_value_grows_with_the_move_sets(pd_alphabet):
    rng = random.Random(131714)
    for _ in range(40):
        language = random_safety(rng, pd_alphabet)
        game = random_game(rng, pd_alphabet)
        states = list(language.states)
        transitions = dict(language.transitions)
        transitions.update({(state, letter): rng.choice(states)
                            for state in states for letter in pd_alphabet.letters
                            if (state, letter) not in transitions and rng.random() < 0.5})
        enlarged = SafetyAutomaton(pd_alphabet, states, language.initial, transitions)
        for delta in (0.3, 0.7, 0.95):
            for player in (0, 1):
                values = best_deviation_value(language, game, player, delta)
                larger = best_deviation_value(enlarged, game, player, delta)
                assert all(larger[state] >= values[state] - 1e-7 for state in states)


def test_match_without_deviations_is_good(pd_alphabet, pd_game):
    verdict = is_good_match(COOPERATION, gamma(grim_trigger_pair(pd_alphabet)), pd_game, 0, 0.5)
    assert verdict.good
    assert verdict.margin is None
    assert verdict.deviation is None


def test_late_exploitation_is_good_for_patient_column(pd_alphabet, pd_game):
    verdict = is_good_match(LATE_EXPLOIT, wait_for_cooperation_language(pd_alphabet), pd_game, 1, 0.3)
    assert verdict.good
    assert verdict.margin_at(0) == pytest.approx(waiting_margin(0.3), abs=1e-8)
    assert verdict.margin_at(5) == pytest.approx(0.7, abs=1e-8)


def test_late_exploitation_is_bad_for_impatient_column(pd_alphabet, pd_game):
    verdict = is_good_match(LATE_EXPLOIT, wait_for_cooperation_language(pd_alphabet), pd_game, 1, 0.1)
    assert not verdict.good
    assert verdict.worst_position == 0
    assert verdict.deviation == DD
    assert verdict.margin == pytest.approx(-0.5, abs=1e-8)


@pytest.mark.parametrize("delta", [Fraction(1, 20), Fraction(1, 10), Fraction(3, 10), Fraction(1, 2), Fraction(4, 5)])
def test_waiting_margin_formula(pd_alphabet, pd_game, delta):
    verdict = is_good_match(LATE_EXPLOIT, wait_for_cooperation_language(pd_alphabet), pd_game, 1, delta)
    assert verdict.margin_at(0) == pytest.approx(float(waiting_margin(delta)), abs=1e-8)


def test_mutual_defection_is_good_for_impatient_column(pd_alphabet, pd_game):
    assert is_good_match(MUTUAL_DEFECTION, wait_for_cooperation_language(pd_alphabet), pd_game, 1, 0.1).good


def test_waiting_boundary(pd_alphabet, pd_game):
    verdict = is_good_match(LATE_EXPLOIT, wait_for_cooperation_language(pd_alphabet), pd_game, 1, Fraction(1, 5))
    assert verdict.good
    assert verdict.boundary
    assert abs(verdict.margin) <= 1e-9


def test_match_outside_language(pd_alphabet, pd_game):
    with pytest.raises(ValueError):
        is_good_match(COOPERATION, wait_for_cooperation_language(pd_alphabet), pd_game, 1, 0.3)


def test_grim_margins(pd_alphabet, pd_game):
    language = equilibrium_family(grim_trigger_pair(pd_alphabet)).y_players[0]
    boundary = is_good_match(COOPERATION, language, pd_game, 0, Fraction(1, 4))
    assert boundary.good and boundary.boundary
    verdict = is_good_match(COOPERATION, language, pd_game, 0, 0.2)
    assert not verdict.good
    assert verdict.deviation == DC
    assert verdict.worst_position == 0
    for t in range(6):
        assert verdict.margin_at(t) == pytest.approx(4 * 0.2 - 1, abs=1e-8)
        assert verdict.payoff_gap(t) == pytest.approx(0.2 ** t * (4 * 0.2 - 1), abs=1e-8)


def test_complete_deviation(pd_alphabet, pd_game):
    language = column_grim_language(pd_alphabet)
    delta = Fraction(1, 5)
    values = best_deviation_value(language, pd_game, 0, delta)
    policy = greedy_policy(language, pd_game, 0, delta, values)
    assert policy["punish"] == DD
    variation = complete_deviation(COOPERATION, language, 0, DC, policy)
    assert variation == LassoWord((DC,), (DD,))
    assert omega_membership(variation, language)
    assert discounted_payoff(pd_game, delta, variation)[0] == Fraction(21, 5)
    assert discounted_payoff(pd_game, delta, variation)[0] > discounted_payoff(pd_game, delta, COOPERATION)[0]
    later = complete_deviation(COOPERATION, language, 2, DC, policy)
    assert later == LassoWord((CC, CC, DC), (DD,))
    with pytest.raises(ValueError):
        complete_deviation(COOPERATION, language, 0, DD, policy)


def test_grim_pair_is_nash_for_patient_players(pd_alphabet, pd_game):
    verdict = is_nash(grim_trigger_pair(pd_alphabet), pd_game, 0.3)
    assert verdict.status is NashStatus.WITNESS_FOUND
    assert verdict.is_nash
    assert verdict.witness == COOPERATION
    assert verdict.status.exit_code == 0
    assert all(player_verdict.good for player_verdict in verdict.verdicts)


def test_grim_pair_rejects_cooperation_for_impatient_players(pd_alphabet, pd_game):
    verdict = is_nash(grim_trigger_pair(pd_alphabet), pd_game, 0.2, candidate=COOPERATION)
    assert verdict.status is NashStatus.CANDIDATE_REJECTED
    assert verdict.is_nash is False
    assert verdict.witness is None
    assert verdict.status.exit_code == 1
    assert [player_verdict.good for player_verdict in verdict.verdicts] == [False, False]


def test_grim_pair_search_is_inconclusive_for_impatient_players(pd_alphabet, pd_game):
    verdict = is_nash(grim_trigger_pair(pd_alphabet), pd_game, 0.2, search_bound=4)
    assert verdict.status is NashStatus.NO_WITNESS
    assert verdict.is_nash is None
    assert verdict.candidates_checked == 1
    assert verdict.search_bound == 4
    assert verdict.status.exit_code == 2


def test_always_defect_is_nash(pd_alphabet, pd_game):
    verdict = is_nash(always_defect(pd_alphabet), pd_game, Fraction(9, 10))
    assert verdict.witness == MUTUAL_DEFECTION


def test_candidate_outside_every_deviation_language(pd_alphabet, pd_game):
    verdict = is_nash(grim_trigger_pair(pd_alphabet), pd_game, 0.5, candidate=MUTUAL_DEFECTION)
    assert verdict.status is NashStatus.CANDIDATE_REJECTED
    assert verdict.verdicts == (None, None)


def test_is_nash_argument_checks(pd_alphabet, pd_game):
    with pytest.raises(ValueError):
        is_nash(grim_trigger_pair(pd_alphabet), pd_game, 0.5, search_bound=0)
    with pytest.raises(ValueError):
        is_nash(grim_trigger_pair(pd_alphabet), pd_game, 1.5)
    with pytest.raises(TypeError):
        is_nash(grim_trigger_pair(pd_alphabet).to_general(), pd_game, 0.5)


def test_threshold_of_grim_pair(pd_alphabet, pd_game):
    search = nash_threshold(grim_trigger_pair(pd_alphabet), pd_game, COOPERATION)
    assert len(search.crossings) == 1
    crossing = search.crossings[0]
    assert not crossing.good_below
    assert crossing.lower <= 0.25 <= crossing.upper
    assert crossing.estimate == pytest.approx(0.25, abs=1e-5)
    assert (0.25, True) in search.grid


def test_threshold_of_waiting_column(pd_alphabet, pd_game):
    search = nash_threshold(wait_for_cooperation(pd_alphabet), pd_game, LATE_EXPLOIT, players=[1])
    assert search.players == (1,)
    assert len(search.crossings) == 1
    assert search.crossings[0].estimate == pytest.approx(0.2, abs=1e-5)


def test_threshold_of_always_defect(pd_alphabet, pd_game):
    search = nash_threshold(always_defect(pd_alphabet), pd_game, MUTUAL_DEFECTION, grid_step=Fraction(1, 16))
    assert search.crossings == []
    assert search.good_everywhere
    assert len(search.grid) == 15
    parallel = nash_threshold(always_defect(pd_alphabet), pd_game, MUTUAL_DEFECTION,
                              grid_step=Fraction(1, 16), n_jobs=2)
    assert parallel.grid == search.grid


def test_threshold_argument_checks(pd_alphabet, pd_game):
    with pytest.raises(ValueError):
        nash_threshold(grim_trigger_pair(pd_alphabet), pd_game, COOPERATION, grid_step=0)
    with pytest.raises(ValueError):
        nash_threshold(grim_trigger_pair(pd_alphabet), pd_game, COOPERATION, tol=0)
    with pytest.raises(ValueError):
        nash_threshold(grim_trigger_pair(pd_alphabet), pd_game, COOPERATION, players=[2])
