import logging
from dataclasses import dataclass
from functools import reduce
from typing import Tuple

from Automata.DeterministicAutomaton import SafetyAutomaton
from Automata.language_operations import equivalent
from Automata.language_operations import intersect
from Strategies.ProductStrategyVector import ProductStrategyVector
from Strategies.strategy_operations import gamma

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquilibriumFamily:
    """
    x          gamma(sigma)
    x_players  X_i = gamma(mu_i), only player i follows sigma
    y_players  Y_i = gamma(nu_i), everybody but player i follows sigma
    """
    strategy: ProductStrategyVector
    x: SafetyAutomaton
    x_players: Tuple[SafetyAutomaton, ...]
    y_players: Tuple[SafetyAutomaton, ...]

    @property
    def player_count(self):
        return len(self.x_players)


def check_equilibrium_query(strategy):
    if not isinstance(strategy, ProductStrategyVector):
        raise TypeError("Equilibrium queries need a strategy vector in product form, got {}".format(type(strategy).__name__))
    if strategy.alphabet.player_count < 2:
        raise ValueError("Equilibrium queries need at least two players; "
                         "with one player the opponents' languages are undefined.")


def _intersection(languages):
    return reduce(intersect, languages)


def equilibrium_family(strategy: ProductStrategyVector) -> EquilibriumFamily:
    check_equilibrium_query(strategy)
    players = range(strategy.alphabet.player_count)
    x = gamma(strategy)
    x_players = tuple(gamma(strategy.with_unpredictable([other for other in players if other != player]))
                      for player in players)
    y_players = tuple(gamma(strategy.with_unpredictable([player])) for player in players)

    if not equivalent(x, _intersection(x_players)):
        raise RuntimeError("gamma(sigma) differs from the intersection of the X_i for {!r}".format(strategy))
    for player in players:
        others = [x_players[other] for other in players if other != player]
        if not equivalent(y_players[player], _intersection(others)):
            raise RuntimeError("Y_{} differs from the intersection of the other players' X_j for {!r}".format(
                player + 1, strategy))
    logger.debug("[equilibrium_family] X has %d states, X_i sizes %s, Y_i sizes %s",
                 len(x), [len(language) for language in x_players], [len(language) for language in y_players])
    return EquilibriumFamily(strategy, x, x_players, y_players)
