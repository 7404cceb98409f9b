#!/usr/bin/env python3

"""
Logging helpers: one package logger that writes messages to stdout and \
    warnings/errors to stderr (or both to a file), a verbosity-to-level \
    mapping for the --verbose flag, and a timer for long-running suites.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
import datetime as dt
from io import TextIOWrapper
import logging
import sys
from time import perf_counter_ns
from typing import Any, Self

# Constants
LOGGER_NAME = __package__ if __package__ else "elab"


# NOTE All classes and functions below are in alphabetical order.


def log(content: str, level: int = logging.INFO,
        logger_name: str = LOGGER_NAME) -> None:
    """
    :param content: String, the message to log/display
    :param level: int, the message's importance/urgency/severity level as \
                  defined by logging module's 0 (ignore) to 50 (urgent) scale
    """
    logging.getLogger(logger_name).log(msg=content, level=level)


class ShowTimeTaken:
    """ Log when a long-running block (a suite, a sampling run) starts at \
        DEBUG level, and how many seconds it took at INFO level. """

    def __init__(self, doing_what: str, start_level: int = logging.DEBUG,
                 end_level: int = logging.INFO) -> None:
        """
        :param doing_what: str naming the timed work, e.g. "verify flat"
        :param start_level: int, logging level of the start message
        :param end_level: int, logging level of the duration message
        """
        self.doing_what = doing_what
        self.levels = (start_level, end_level)
        self.elapsed = 0.0

    def __enter__(self) -> Self:
        log(f"Started {self.doing_what} at "
            f"{dt.datetime.now():%H:%M:%S}", self.levels[0])
        self.start = perf_counter_ns()
        return self

    def __exit__(self, exc_type: type | None = None, *_: Any) -> bool:
        """
        :param exc_type: type of the exception raised in the block, if any
        :return: bool, False so that any exception propagates
        """
        self.elapsed = (perf_counter_ns() - self.start) / 1e9
        outcome = "stopped by " + exc_type.__name__ if exc_type else "done"
        log(f"{self.doing_what.capitalize()} {outcome} after "
            f"{self.elapsed:.3f} s", self.levels[1])
        return False


class SplitLogger(logging.getLoggerClass()):
    """Container class for message-logger and error-logger ("split" apart)"""
    FMT = "%(levelname)s %(asctime)s: %(message)s"
    LVL = dict(OUT={logging.DEBUG, logging.INFO, logging.NOTSET},
               ERR={logging.CRITICAL, logging.ERROR, logging.WARNING})
    NAME = LOGGER_NAME

    def __init__(self, verbosity: int, log_file: str | None = None) -> None:
        """ Make logger to log status updates, warnings, & other useful info.
            SplitLogger logs errors/warnings to stderr and info/outputs to \
            stdout, or everything to one file if `log_file` is given.

        :param verbosity: Int, the number of times that the user included the
                          --verbose flag when they started running the script.
        :param log_file: str, valid path to text file to write all logs into
        """
        super().__init__(self.NAME, level=verbosity_to_log_level(verbosity))
        self.propagate = False
        if log_file:
            handler = logging.FileHandler(log_file, encoding="utf-8")
            handler.setFormatter(logging.Formatter(fmt=self.FMT))
            self.addHandler(handler)
        else:
            self.addSubHandler(sys.stdout, self.LVL["OUT"])
            self.addSubHandler(sys.stderr, self.LVL["ERR"])

        # Force logging.getLogger(name) to return this object, since otherwise
        # it creates a different logging.Logger with the same name!
        self.manager.loggerDict[self.name] = self

    def addSubHandler(self, log_stream: TextIOWrapper, levels: set[int]
                      ) -> None:
        """ Send only messages at the given levels to `log_stream`.

        :param log_stream: io.TextIOWrapper, namely sys.stdout or sys.stderr
        :param levels: set[int], logging levels this handler accepts
        """
        handler = logging.StreamHandler(log_stream)
        handler.setFormatter(logging.Formatter(fmt=self.FMT))
        handler.addFilter(lambda record: record.levelno in levels)
        self.addHandler(handler)


def verbosity_to_log_level(verbosity: int) -> int:
    """
    :param verbosity: int, how many times -v/--verbose was given
    :return: int, WARNING for 0, INFO for 1, DEBUG for 2 or more
    """
    return max(logging.DEBUG, logging.WARNING - (10 * verbosity))
