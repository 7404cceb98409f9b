#!/usr/bin/env python3

"""
Test elab/debug.py
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
import logging

# Import third-party PyPI libraries
import pytest

# Import local custom libraries
from elab.debug import (log, LOGGER_NAME, ShowTimeTaken, SplitLogger,
                        verbosity_to_log_level)
from elab.testers import Tester


class TestLogging(Tester):
    def read_log(self, log_file) -> str:
        with open(log_file, encoding="utf-8") as infile:
            return infile.read()

    def test_verbosity(self) -> None:
        self.check_result([verbosity_to_log_level(v) for v in range(4)],
                          [logging.WARNING, logging.INFO, logging.DEBUG,
                           logging.DEBUG])

    def test_split_logger_replaces_package_logger(self, tmp_path) -> None:
        logger = SplitLogger(verbosity=0, log_file=str(tmp_path / "a.log"))
        assert logging.getLogger(LOGGER_NAME) is logger
        log("quiet", logging.INFO)
        log("loud", logging.WARNING)
        text = self.read_log(tmp_path / "a.log")
        assert "loud" in text and "quiet" not in text

    def test_show_time_taken(self, tmp_path) -> None:
        SplitLogger(verbosity=2, log_file=str(tmp_path / "b.log"))
        with ShowTimeTaken("sampling 5 paths") as timer:
            pass
        assert timer.elapsed >= 0.0
        text = self.read_log(tmp_path / "b.log")
        assert "Started sampling 5 paths" in text
        assert "Sampling 5 paths done after" in text

    def test_show_time_taken_reraises(self, tmp_path) -> None:
        SplitLogger(verbosity=1, log_file=str(tmp_path / "c.log"))
        with pytest.raises(ValueError):
            with ShowTimeTaken("verify flat"):
                raise ValueError("bad frame")
        text = self.read_log(tmp_path / "c.log")
        assert "Verify flat stopped by ValueError" in text
        assert "Started" not in text  # start message is DEBUG
