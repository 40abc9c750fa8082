# paley_zn/log.py
import logging
import sys

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity=0, stream=None):
    """
    Route paley_zn log records to stderr.

    Args:
        verbosity (int): 0 for warnings only, 1 for info, 2 or more for debug
        stream: Destination stream, stderr by default

    Returns:
        logging.Logger: The package logger
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING

    logger = logging.getLogger("paley_zn")
    logger.setLevel(level)

    # Reconfiguring must not stack handlers (tests call main() repeatedly)
    for handler in list(logger.handlers):
        if getattr(handler, "_paley_zn", False):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._paley_zn = True
    logger.addHandler(handler)
    logger.propagate = False
    return logger
