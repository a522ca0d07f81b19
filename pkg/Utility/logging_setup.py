import logging

import colorlog


def setup_logging(verbose=False):
    handler = colorlog.StreamHandler()
    handler.setFormatter(colorlog.ColoredFormatter(
        "%(log_color)s%(levelname)-8s%(reset)s %(blue)s%(name)s%(reset)s %(message)s",
        log_colors={"DEBUG"   : "cyan",
                    "INFO"    : "green",
                    "WARNING" : "yellow",
                    "ERROR"   : "red",
                    "CRITICAL": "red,bg_white"}))
    root = logging.getLogger()
    for existing in list(root.handlers):
        root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return root
