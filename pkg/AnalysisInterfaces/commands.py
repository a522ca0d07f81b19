"""
Command dispatch: each subcommand parses its flags, runs the library
operation on the workspace and returns a Report.
"""

import argparse
import logging
import shlex

from Automata.language_operations import arrow
from Automata.language_operations import contains
from Automata.language_operations import is_empty
from Automata.language_operations import is_strategical
from Automata.language_operations import left_quotient
from Automata.language_operations import safety_closure
from AnalysisInterfaces.PlaySession import PlaySession
from AnalysisInterfaces.Report import EXIT_TRUE
from AnalysisInterfaces.Report import Report
from Games.EquilibriumFamily import equilibrium_family
from Games.discounted_payoff import discounted_payoff
from Games.good_matches import best_deviation_value
from Games.good_matches import complete_deviation
from Games.good_matches import greedy_policy
from Games.good_matches import is_good_match
from Games.nash import is_nash
from Games.nash import nash_threshold
from Preprocessing.FileFrontend import format_automaton
from Preprocessing.FileFrontend import format_strategy
from Preprocessing.LassoFrontend import format_lasso
from Preprocessing.LassoFrontend import format_letter
from Preprocessing.LassoFrontend import format_word
from Preprocessing.LassoFrontend import parse_lasso
from Preprocessing.LassoFrontend import parse_word
from Strategies.strategy_operations import enumerate_prefixes
from Strategies.strategy_operations import gamma
from Strategies.strategy_operations import is_rectangular
from Strategies.strategy_operations import minimal_strategy
from Utility.utils import parse_number
from Words.word_operations import metric_distance

logger = logging.getLogger(__name__)

COMMANDS = ("gamma", "is-strategical", "closure", "minimal-strategy", "arrow", "quotient", "prefixes",
            "distance", "payoff", "good-match", "nash", "nash-threshold", "play")


class UsageError(ValueError):
    pass


class CommandParser(argparse.ArgumentParser):
    """
    Raises instead of exiting, since exit status 2 means an
    inconclusive verdict here.
    """

    def error(self, message):
        raise UsageError("{}: {}".format(self.prog, message))


def _automaton_text(automaton):
    if automaton.is_empty_automaton:
        return ["(empty language)"]
    return [format_automaton(automaton).rstrip("\n")]


def _player(workspace, number):
    if not 1 <= number <= workspace.alphabet.player_count:
        raise ValueError("Players are numbered 1 to {}, got {}".format(workspace.alphabet.player_count, number))
    return number - 1


def _delta(text):
    return parse_number(text)


def build_parser():
    parser = CommandParser(prog="run_analysis.py", description="Strategical languages of infinite words and discounted games.")
    parser.add_argument("--workspace", nargs="+", default=None,
                        help="Workspace directories or files (.game, .strategy, .automaton).")
    parser.add_argument("--config", default=None, help="YAML configuration file.")
    parser.add_argument("--json", action="store_true", help="Machine-readable output.")
    parser.add_argument("--verbose", action="store_true", help="Debug logging.")
    commands = parser.add_subparsers(dest="command", parser_class=CommandParser)
    commands.required = True

    command = commands.add_parser("gamma", help="Language generated by a strategy.")
    command.add_argument("--strategy", required=True)

    command = commands.add_parser("is-strategical", help="Whether an automaton's language is closed.")
    command.add_argument("--automaton", required=True)

    command = commands.add_parser("closure", help="Safety closure of an automaton's language.")
    command.add_argument("--automaton", required=True)

    command = commands.add_parser("minimal-strategy", help="Smallest strategy generating the closure of a language.")
    command.add_argument("--automaton", required=True)

    command = commands.add_parser("arrow", help="Infinite words with infinitely many prefixes in a finite-word language.")
    command.add_argument("--dfa", required=True)

    command = commands.add_parser("quotient", help="Left quotient of a language by a finite word.")
    command.add_argument("--automaton", required=True)
    command.add_argument("--word", required=True, help="Letters separated by blanks, '_' for the empty word.")

    command = commands.add_parser("prefixes", help="Prefixes of length k of the matches of a strategy.")
    command.add_argument("--strategy", required=True)
    command.add_argument("--length", type=int, required=True)

    command = commands.add_parser("distance", help="Distance between two lasso words.")
    command.add_argument("--x", required=True)
    command.add_argument("--y", required=True)

    command = commands.add_parser("payoff", help="Discounted payoff vector of a lasso match.")
    command.add_argument("--match", required=True)
    command.add_argument("--delta", type=_delta, required=True)

    command = commands.add_parser("good-match", help="Whether a match is good for a player.")
    command.add_argument("--match", required=True)
    command.add_argument("--player", type=int, required=True, help="1-based player number.")
    command.add_argument("--delta", type=_delta, required=True)
    source = command.add_mutually_exclusive_group(required=True)
    source.add_argument("--automaton", help="Safety automaton used as the ambient language.")
    source.add_argument("--strategy", help="Strategy vector whose Y_i is the ambient language.")
    command.add_argument("--tolerance", type=float, default=None)

    command = commands.add_parser("nash", help="Search a match good for every player.")
    command.add_argument("--strategy", required=True)
    command.add_argument("--delta", type=_delta, required=True)
    command.add_argument("--match", default=None, help="Candidate lasso; searched for when absent.")
    command.add_argument("--bound", type=int, default=None)
    command.add_argument("--tolerance", type=float, default=None)

    command = commands.add_parser("nash-threshold", help="Discount factors at which a candidate stops being good.")
    command.add_argument("--strategy", required=True)
    command.add_argument("--match", required=True)
    command.add_argument("--players", type=int, nargs="+", default=None, help="1-based players to check, all by default.")
    command.add_argument("--tolerance", type=float, default=None)
    command.add_argument("--grid-step", type=parse_number, default=None)
    command.add_argument("--jobs", type=int, default=None)

    command = commands.add_parser("play", help="Play against a strategy vector.")
    command.add_argument("--strategy", required=True)
    command.add_argument("--player", type=int, required=True, help="1-based player number of the human.")
    command.add_argument("--delta", type=_delta, required=True)
    command.add_argument("--horizon", type=int, required=True)
    command.add_argument("--seed", type=int, default=131714)
    return parser


def _gamma(workspace, args):
    language = gamma(workspace.strategy(args.strategy))
    empty, member = is_empty(language)
    results = {"states": len(language), "empty": empty}
    if member is not None:
        results["member"] = format_lasso(workspace.alphabet, member)
    return Report("gamma", True, results, text=_automaton_text(language))


def _is_strategical(workspace, args):
    language = workspace.automaton(args.automaton, ("buchi", "safety"))
    closed = is_strategical(language)
    closure = safety_closure(language)
    _, witness = contains(closure, language)
    results = {"closure_states": len(closure)}
    if witness is not None:
        results["limit_point_outside"] = format_lasso(workspace.alphabet, witness)
    return Report("is-strategical", closed, results)


def _closure(workspace, args):
    closure = safety_closure(workspace.automaton(args.automaton, ("buchi", "safety")))
    return Report("closure", True, {"states": len(closure)}, text=_automaton_text(closure))


def _minimal_strategy(workspace, args):
    strategy = minimal_strategy(workspace.automaton(args.automaton, ("buchi", "safety")))
    rectangular, state = is_rectangular(strategy)
    results = {"memory_states": len(strategy.memory), "rectangular": rectangular}
    if not rectangular:
        results["non_rectangular_moves"] = [format_letter(workspace.alphabet, letter)
                                            for letter in sorted(strategy.moves(state))]
    return Report("minimal-strategy", True, results, text=[format_strategy(strategy).rstrip("\n")])


def _arrow(workspace, args):
    language = arrow(workspace.automaton(args.dfa, ("dfa",)))
    empty, member = is_empty(language)
    results = {"empty": empty}
    if member is not None:
        results["member"] = format_lasso(workspace.alphabet, member)
    return Report("arrow", True, results, text=["(empty language)"] if empty else _automaton_text(language))


def _quotient(workspace, args):
    word = parse_word(workspace.alphabet, args.word)
    quotient = left_quotient(workspace.automaton(args.automaton, ("buchi", "safety")), word)
    empty, member = is_empty(quotient)
    results = {"word": format_word(workspace.alphabet, word), "empty": empty}
    if member is not None:
        results["member"] = format_lasso(workspace.alphabet, member)
    return Report("quotient", True, results, text=_automaton_text(quotient))


def _prefixes(workspace, args):
    words = enumerate_prefixes(workspace.strategy(args.strategy), args.length, workspace.config.enumeration_limit)
    return Report("prefixes", True, {"count": len(words),
                                     "words": sorted(format_word(workspace.alphabet, word) for word in words)})


def _distance(workspace, args):
    x = parse_lasso(workspace.alphabet, args.x)
    y = parse_lasso(workspace.alphabet, args.y)
    return Report("distance", True, {"distance": metric_distance(x, y)})


def _payoff(workspace, args):
    game = workspace.require_game()
    match = parse_lasso(workspace.alphabet, args.match)
    payoff = discounted_payoff(game, args.delta, match)
    return Report("payoff", True, {"match": format_lasso(workspace.alphabet, match),
                                   "delta": args.delta,
                                   "payoff": dict(zip(workspace.alphabet.player_names, payoff))})


def _good_match(workspace, args):
    game = workspace.require_game()
    player = _player(workspace, args.player)
    match = parse_lasso(workspace.alphabet, args.match)
    tolerance = workspace.config.updated(payoff_tolerance=args.tolerance).payoff_tolerance
    if args.automaton is not None:
        language = workspace.automaton(args.automaton, ("safety",))
    else:
        language = equilibrium_family(workspace.strategy(args.strategy)).y_players[player]
    values = best_deviation_value(language, game, player, args.delta, tolerance,
                                  workspace.config.value_iteration_max_steps)
    verdict = is_good_match(match, language, game, player, args.delta, tolerance, values=values)
    results = {"match": format_lasso(workspace.alphabet, match),
               "player": args.player,
               "delta": args.delta,
               "worst_position": verdict.worst_position,
               "margin": verdict.margin,
               "boundary": verdict.boundary}
    if not verdict.good:
        policy = greedy_policy(language, game, player, args.delta, values)
        variation = complete_deviation(match, language, verdict.worst_position, verdict.deviation, policy)
        results["deviation"] = format_letter(workspace.alphabet, verdict.deviation)
        results["variation"] = format_lasso(workspace.alphabet, variation)
        results["variation_payoff"] = discounted_payoff(game, args.delta, variation)[player]
        results["match_payoff"] = discounted_payoff(game, args.delta, match)[player]
    return Report("good-match", verdict.good, results, {"payoff_tolerance": tolerance})


def _nash(workspace, args):
    game = workspace.require_game()
    strategy = workspace.strategy(args.strategy)
    config = workspace.config.updated(payoff_tolerance=args.tolerance, search_bound=args.bound)
    tolerance = config.payoff_tolerance
    bound = config.search_bound
    candidate = None if args.match is None else parse_lasso(workspace.alphabet, args.match)
    verdict = is_nash(strategy, game, args.delta, bound, candidate, tolerance)
    results = {"status": verdict.status.value,
               "witness": None if verdict.witness is None else format_lasso(workspace.alphabet, verdict.witness),
               "candidates_checked": verdict.candidates_checked}
    if candidate is None:
        results["search_bound"] = bound
    else:
        results["margins"] = [None if player_verdict is None else player_verdict.margin
                              for player_verdict in verdict.verdicts]
    return Report("nash", verdict.is_nash, results, {"payoff_tolerance": tolerance},
                  exit_status=verdict.status.exit_code)


def _nash_threshold(workspace, args):
    game = workspace.require_game()
    config = workspace.config.updated(threshold_tolerance=args.tolerance, grid_step=args.grid_step, n_jobs=args.jobs)
    players = None if args.players is None else [_player(workspace, number) for number in args.players]
    candidate = parse_lasso(workspace.alphabet, args.match)
    search = nash_threshold(workspace.strategy(args.strategy), game, candidate,
                            tol=config.threshold_tolerance,
                            grid_step=config.grid_step,
                            players=players,
                            payoff_tolerance=config.payoff_tolerance,
                            n_jobs=config.n_jobs)
    results = {"match": format_lasso(workspace.alphabet, candidate),
               "players": [player + 1 for player in search.players],
               "thresholds": [crossing.estimate for crossing in search.crossings],
               "intervals": [[crossing.lower, crossing.upper, "good below" if crossing.good_below else "good above"]
                             for crossing in search.crossings],
               "good_on_whole_grid": search.good_everywhere}
    return Report("nash-threshold", True, results,
                  {"threshold_tolerance": config.threshold_tolerance, "payoff_tolerance": config.payoff_tolerance},
                  exit_status=EXIT_TRUE)


def _play(workspace, args, input_stream=None, output_stream=None):
    session = PlaySession(workspace.strategy(args.strategy), workspace.require_game(), _player(workspace, args.player),
                          args.delta, args.horizon, args.seed, input_stream, output_stream)
    session.run()
    return Report("play", not session.left_strategy,
                  {"history": format_word(workspace.alphabet, session.history)},
                  exit_status=EXIT_TRUE)


HANDLERS = {"gamma"           : _gamma,
            "is-strategical"  : _is_strategical,
            "closure"         : _closure,
            "minimal-strategy": _minimal_strategy,
            "arrow"           : _arrow,
            "quotient"        : _quotient,
            "prefixes"        : _prefixes,
            "distance"        : _distance,
            "payoff"          : _payoff,
            "good-match"      : _good_match,
            "nash"            : _nash,
            "nash-threshold"  : _nash_threshold}


def execute(workspace, command, input_stream=None, output_stream=None) -> Report:
    """
    command is an argv list, a command line string or a parsed
    namespace. Only the subcommand and its flags are read; the
    workspace is already loaded.
    """
    if isinstance(command, str):
        command = shlex.split(command)
    echo = None
    if isinstance(command, (list, tuple)):
        echo = " ".join(shlex.quote(part) for part in command)
        command = build_parser().parse_args(list(command))
    logger.debug("[execute] %s", command.command)
    if command.command == "play":
        report = _play(workspace, command, input_stream, output_stream)
    else:
        report = HANDLERS[command.command](workspace, command)
    if echo is not None:
        report.command = echo
    return report
