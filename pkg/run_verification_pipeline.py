import argparse
import sys

from Utility.logging_setup import setup_logging
from VerificationPipelines.equilibrium_identities import run as equilibrium_identities
from VerificationPipelines.equivalence_bundle import run as equivalence_bundle
from VerificationPipelines.minimality import run as minimality
from VerificationPipelines.oracles import run as oracles
from VerificationPipelines.worked_examples import run as worked_examples

pipeline_dict = {
    "worked_examples"       : worked_examples,
    "equivalence_bundle"    : equivalence_bundle,
    "minimality"            : minimality,
    "equilibrium_identities": equilibrium_identities,
    "oracles"               : oracles
    }

if __name__ == '__main__':

    parser = argparse.ArgumentParser(description='Strategical languages toolkit - reproducible verification runs')

    parser.add_argument('pipeline',
                        choices=list(pipeline_dict.keys()) + ["all"],
                        help="Select pipeline to run.")

    parser.add_argument('--seed',
                        type=int,
                        help="Seed of the random corpus.",
                        default=131714)

    parser.add_argument('--verbose',
                        action="store_true",
                        default=False)

    args = parser.parse_args()
    setup_logging(args.verbose)

    selected = list(pipeline_dict.keys()) if args.pipeline == "all" else [args.pipeline]
    discrepancies = 0
    for name in selected:
        print("\n{}".format(name))
        rows = pipeline_dict[name](seed=args.seed)
        discrepancies += sum(row[2] for row in rows)
    print("\n{} discrepancies in total".format(discrepancies))
    sys.exit(0 if discrepancies == 0 else 1)
