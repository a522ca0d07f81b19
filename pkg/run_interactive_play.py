import argparse
import sys

from AnalysisInterfaces.PlaySession import PlaySession
from AnalysisInterfaces.Workspace import load
from Utility.config import load_config
from Utility.logging_setup import setup_logging
from Utility.utils import parse_number

if __name__ == '__main__':
    parser = argparse.ArgumentParser(description='Play one component of a strategy vector against the others')

    parser.add_argument('strategy',
                        type=str,
                        help="Name of a product-form strategy in the workspace, e.g. grim.")

    parser.add_argument('--workspace',
                        type=str,
                        help="Directory holding the game and the strategies.",
                        default=None)

    parser.add_argument('--player',
                        type=int,
                        help="Which player you are, counting from 1.",
                        default=2)

    parser.add_argument('--delta',
                        type=parse_number,
                        help="Discount factor strictly between 0 and 1.",
                        default=parse_number("9/10"))

    parser.add_argument('--horizon',
                        type=int,
                        help="Number of rounds.",
                        default=10)

    parser.add_argument('--seed',
                        type=int,
                        help="Seed for the engine's choices.",
                        default=131714)

    parser.add_argument('--verbose',
                        action="store_true",
                        default=False)

    args = parser.parse_args()
    setup_logging(args.verbose)
    config = load_config()

    if args.horizon < 1:
        print("The horizon must be at least 1.")
        sys.exit(3)

    try:
        workspace = load(args.workspace or config.default_workspace, config)
        session = PlaySession(workspace.strategy(args.strategy), workspace.require_game(), args.player - 1,
                              args.delta, args.horizon, args.seed)
    except ValueError as error:
        print(error)
        sys.exit(3)
    session.run()
