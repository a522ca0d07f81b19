import sys

from AnalysisInterfaces.Report import EXIT_ERROR
from AnalysisInterfaces.Workspace import load
from AnalysisInterfaces.commands import build_parser
from AnalysisInterfaces.commands import execute
from Utility.config import load_config
from Utility.logging_setup import setup_logging


def main(argv=None, input_stream=None, output_stream=None):
    """
    Exit status 0 for a true verdict or plain success, 1 for a false
    verdict, 2 for an inconclusive search, 3 for any error.
    """
    output_stream = output_stream or sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        setup_logging(args.verbose)
        config = load_config(args.config)
        workspace = load(args.workspace or [config.default_workspace], config)
        report = execute(workspace, args, input_stream, output_stream)
    except (ValueError, TypeError, NotImplementedError, RuntimeError, OSError) as error:
        print("error: {}".format(error), file=sys.stderr)
        return EXIT_ERROR
    report.command = " ".join(argv)
    print(report.render(args.json), file=output_stream)
    return report.exit_status


if __name__ == '__main__':
    sys.exit(main())
