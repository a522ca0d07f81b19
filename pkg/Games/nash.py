import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from joblib import Parallel
from joblib import delayed

from Automata.language_operations import enumerate_lassos
from Automata.language_operations import omega_membership
from Games.EquilibriumFamily import EquilibriumFamily
from Games.EquilibriumFamily import check_equilibrium_query
from Games.EquilibriumFamily import equilibrium_family
from Games.Game import Game
from Games.good_matches import DEFAULT_TOLERANCE
from Games.good_matches import GoodMatchVerdict
from Games.good_matches import best_deviation_value
from Games.good_matches import is_good_match
from Utility.utils import check_discount_factor
from Words.LassoWord import LassoWord

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BOUND = 8
DEFAULT_GRID_STEP = Fraction(1, 64)
DEFAULT_THRESHOLD_TOLERANCE = 1e-6


class NashStatus(Enum):
    WITNESS_FOUND = "witness found"
    CANDIDATE_REJECTED = "candidate rejected"
    NO_WITNESS = "no witness found up to bound"

    @property
    def exit_code(self):
        return {NashStatus.WITNESS_FOUND: 0, NashStatus.CANDIDATE_REJECTED: 1, NashStatus.NO_WITNESS: 2}[self]


@dataclass(frozen=True)
class NashVerdict:
    """
    verdicts holds one GoodMatchVerdict per player for the returned
    witness or the rejected candidate; None for a player means the
    candidate is not even a match of that player's Y_i.
    """
    status: NashStatus
    witness: Optional[LassoWord]
    verdicts: Tuple[Optional[GoodMatchVerdict], ...]
    candidates_checked: int
    search_bound: Optional[int]

    @property
    def is_nash(self) -> Optional[bool]:
        if self.status is NashStatus.NO_WITNESS:
            return None
        return self.status is NashStatus.WITNESS_FOUND


def _player_values(family: EquilibriumFamily, game: Game, delta, tol, players):
    return {player: best_deviation_value(family.y_players[player], game, player, delta, tol) for player in players}


def _verdicts_for(h, family, game, delta, tol, values, players):
    verdicts = list()
    for player in players:
        language = family.y_players[player]
        if not omega_membership(h, language):
            verdicts.append(None)
            continue
        verdicts.append(is_good_match(h, language, game, player, delta, tol, values=values[player]))
    return tuple(verdicts)


def _all_good(verdicts):
    return all(verdict is not None and verdict.good for verdict in verdicts)


def is_nash(strategy,
            game: Game,
            delta,
            search_bound: int = DEFAULT_SEARCH_BOUND,
            candidate: Optional[LassoWord] = None,
            tol: float = DEFAULT_TOLERANCE,
            family: Optional[EquilibriumFamily] = None) -> NashVerdict:
    """
    sigma is a Nash equilibrium when some match is good for every
    player i inside Y_i. A found witness certifies it; an exhausted
    search only says that no lasso up to the bound works.
    """
    check_equilibrium_query(strategy)
    check_discount_factor(delta)
    if game.alphabet != strategy.alphabet:
        raise ValueError("Game and strategy use different alphabets")
    if family is None:
        family = equilibrium_family(strategy)
    players = list(range(game.player_count))
    values = _player_values(family, game, delta, tol, players)

    if candidate is not None:
        if not isinstance(candidate, LassoWord):
            raise ValueError("Candidate must be a lasso word, got {!r}".format(candidate))
        for letter in candidate.stem + candidate.cycle:
            game.alphabet.check_letter(letter)
        verdicts = _verdicts_for(candidate, family, game, delta, tol, values, players)
        status = NashStatus.WITNESS_FOUND if _all_good(verdicts) else NashStatus.CANDIDATE_REJECTED
        return NashVerdict(status, candidate if _all_good(verdicts) else None, verdicts, 1, None)

    if search_bound < 1:
        raise ValueError("Search bound must be at least 1, got {}".format(search_bound))
    checked = 0
    for h in enumerate_lassos(family.x, search_bound):
        checked += 1
        verdicts = _verdicts_for(h, family, game, delta, tol, values, players)
        if _all_good(verdicts):
            logger.debug("[is_nash] witness after %d candidates", checked)
            return NashVerdict(NashStatus.WITNESS_FOUND, h, verdicts, checked, search_bound)
    logger.debug("[is_nash] %d candidates, none good for all players", checked)
    return NashVerdict(NashStatus.NO_WITNESS, None, (), checked, search_bound)


@dataclass(frozen=True)
class ThresholdCrossing:
    """
    The predicate changes value inside [lower, upper].
    """
    lower: float
    upper: float
    good_below: bool

    @property
    def estimate(self) -> float:
        return (self.lower + self.upper) / 2


@dataclass(frozen=True)
class ThresholdSearch:
    crossings: List[ThresholdCrossing]
    grid: List[Tuple[float, bool]]
    players: Tuple[int, ...]

    @property
    def good_everywhere(self) -> bool:
        return all(good for _, good in self.grid)

    @property
    def good_nowhere(self) -> bool:
        return not any(good for _, good in self.grid)


def candidate_is_good(family: EquilibriumFamily, game: Game, candidate: LassoWord, delta, players, tol) -> bool:
    for player in players:
        language = family.y_players[player]
        if not omega_membership(candidate, language):
            return False
        if not is_good_match(candidate, language, game, player, delta, tol).good:
            return False
    return True


def nash_threshold(strategy,
                   game: Game,
                   candidate: LassoWord,
                   tol: float = DEFAULT_THRESHOLD_TOLERANCE,
                   grid_step=DEFAULT_GRID_STEP,
                   players: Optional[Sequence[int]] = None,
                   payoff_tolerance: float = DEFAULT_TOLERANCE,
                   n_jobs: int = 1) -> ThresholdSearch:
    """
    Evaluates the candidate's good-match predicate for the chosen
    players (all by default) on the grid step, 2 step, ... < 1 and
    bisects every interval where it changes. No monotonicity in delta
    is assumed, so every crossing is reported.
    """
    check_equilibrium_query(strategy)
    if tol <= 0:
        raise ValueError("Threshold tolerance must be positive, got {}".format(tol))
    grid_step = Fraction(grid_step)
    if not 0 < grid_step < 1:
        raise ValueError("Grid step must lie strictly between 0 and 1, got {}".format(grid_step))
    family = equilibrium_family(strategy)
    players = tuple(range(game.player_count)) if players is None else tuple(players)
    for player in players:
        if not 0 <= player < game.player_count:
            raise ValueError("Unknown player {}".format(player + 1))

    points = [float(grid_step * k) for k in range(1, int(1 / grid_step) + 1) if grid_step * k < 1]
    verdicts = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(candidate_is_good)(family, game, candidate, delta, players, payoff_tolerance) for delta in points)
    grid = list(zip(points, verdicts))

    crossings = list()
    for (lower, good_lower), (upper, good_upper) in zip(grid, grid[1:]):
        if good_lower == good_upper:
            continue
        while upper - lower > tol:
            middle = (lower + upper) / 2
            if candidate_is_good(family, game, candidate, middle, players, payoff_tolerance) == good_lower:
                lower = middle
            else:
                upper = middle
        crossings.append(ThresholdCrossing(lower, upper, good_lower))
    logger.debug("[nash_threshold] %d grid points, %d crossings", len(grid), len(crossings))
    return ThresholdSearch(crossings, grid, players)
