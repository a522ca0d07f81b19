from fractions import Fraction

from Games.Game import Game
from Utility.utils import check_discount_factor
from Words.LassoWord import LassoWord


def _is_exact(delta, game):
    return isinstance(delta, (Fraction, int)) and not any(
        isinstance(value, float) for values in game.utility.values() for value in values)


def _numeric(value, exact):
    return value if exact else float(value)


def _weighted_sum(game, delta, word, player, exact):
    total = _numeric(0, exact)
    weight = _numeric(1, exact)
    for letter in word:
        total += _numeric(game.payoff(letter, player), exact) * weight
        weight *= delta
    return total


def discounted_payoff(game: Game, delta, h: LassoWord):
    """
    pi^delta(u v^omega) = (1 - delta) [sum_{k<|u|} pi(u_k) delta^k
                          + delta^|u| / (1 - delta^|v|) sum_{k<|v|} pi(v_k) delta^k]

    Exact when delta is rational, float otherwise.
    """
    check_discount_factor(delta)
    exact = _is_exact(delta, game)
    delta = _numeric(delta, exact)
    one = _numeric(1, exact)
    payoffs = list()
    for player in range(game.player_count):
        stem_part = _weighted_sum(game, delta, h.stem, player, exact)
        cycle_part = _weighted_sum(game, delta, h.cycle, player, exact)
        value = (one - delta) * (stem_part + delta ** len(h.stem) * cycle_part / (one - delta ** len(h.cycle)))
        payoffs.append(value)
    return tuple(payoffs)


def partial_payoff(game: Game, delta, word):
    """
    (1 - delta) sum_{k<|w|} pi(w_k) delta^k, the share of the payoff
    already collected after a finite history.
    """
    check_discount_factor(delta)
    exact = _is_exact(delta, game)
    delta = _numeric(delta, exact)
    return tuple((_numeric(1, exact) - delta) * _weighted_sum(game, delta, word, player, exact)
                 for player in range(game.player_count))
