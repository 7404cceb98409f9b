#!/usr/bin/env python3

"""
Test elab/report.py
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
import json

# Import local custom libraries
from elab import __version__
from elab.report import (Check, EXIT_FAIL, EXIT_OK, PAPER_ANCHORS,
                         Status, VerificationReport)
from elab.testers import Tester


class TestReport(Tester):
    def test_from_bound(self) -> None:
        check = Check.from_bound("energy", PAPER_ANCHORS["energy"], 1e-9,
                                 1e-8, location=(1, 2, 3, 4))
        self.check_result((check.status, check.location),
                          (Status.PASS, [1.0, 2.0, 3.0, 4.0]))
        self.check_result(Check.from_bound("energy", "", 1e-7, 1e-8).status,
                          Status.FAIL)

    def test_exit_codes(self) -> None:
        report = VerificationReport(config_hash="abc")
        self.check_result(report.exit_code(), EXIT_OK)
        report.add(Check(name="a", paper_anchor="", status=Status.WARN))
        self.check_result(report.exit_code(), EXIT_OK)
        report.extend([Check(name="b", paper_anchor="", status=Status.FAIL),
                       Check(name="c", paper_anchor="", status=Status.PASS)])
        self.check_result(report.exit_code(), EXIT_FAIL)
        self.check_result([check.name for check in report.failed], ["b"])
        self.check_result([check.name for check in report.section("c", "a")],
                          ["a", "c"])
        self.check_result(report.summary(), "1 PASS, 1 FAIL, 1 WARN")

    def test_json_with_infinity(self) -> None:
        report = VerificationReport(config_hash="abc")
        report.add(Check(name="lift", paper_anchor="", status=Status.FAIL,
                         worst_residual=float("inf")))
        dumped = json.loads(report.model_dump_json())
        self.check_result(dumped["tool_version"], __version__)
        self.check_result(dumped["checks"][0]["worst_residual"], "Infinity")

    def test_paper_anchor_is_verbatim(self) -> None:
        report = VerificationReport(config_hash="abc")
        report.add(Check.from_bound("pairing_defect",
                                    PAPER_ANCHORS["pairing"], 0.0, 1e-8))
        dumped = json.loads(report.model_dump_json())
        self.check_result(dumped["checks"][0]["paper_anchor"],
                          PAPER_ANCHORS["pairing"])
        assert "anchor" not in dumped["checks"][0]
        self.check_result(len(set(PAPER_ANCHORS.values())),
                          len(PAPER_ANCHORS))
