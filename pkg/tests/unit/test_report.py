"""
Unit tests for verification reports, CLI report rendering and logging setup.
"""

import io
import json
import logging
from fractions import Fraction

from src.exact_arith.cyclotomic import zeta
from src.exact_arith.interval import Interval
from src.exact_arith.rational import format_rational
from src.util.log_util import configure_logging
from src.util.report import Report, VerificationReport, render_csv, to_exact


class TestVerificationReport:
    def test_passed_until_a_violation(self):
        report = VerificationReport("model")
        report.add_check("unit")
        assert report.passed
        report.fail("associativity", "left != right", i=0, j=1)
        assert not report.passed
        assert report.failed_checks() == ["associativity"]
        assert report.check_passed("unit")
        assert report.to_data()["checks"] == {"unit": True, "associativity": False}

    def test_summary_names_the_first_witness(self):
        report = VerificationReport("fib", ["unit"])
        assert report.summary() == "fib: all 1 checks passed"
        report.fail("unit", value=Fraction(1, 2))
        assert "FAILED unit" in report.summary()
        assert report.to_data()["violations"][0]["witness"] == {"value": "1/2"}

    def test_merge(self):
        first = VerificationReport("a", ["x"])
        second = VerificationReport("b", ["y"])
        second.fail("y", "bad")
        first.merge(second)
        assert first.checks == ["x", "y"]
        assert not first.passed


class TestRendering:
    def test_to_exact(self):
        data = to_exact({"q": Fraction(3, 4), "z": zeta(4), "i": Interval.point(2), "t": (1, True, None)})
        assert data["q"] == "3/4"
        assert data["z"] == {"order": 4, "coeffs": ["0/1", "1/1"]}
        assert data["i"]["lo"] == "2/1"
        assert data["t"] == [1, True, None]

    def test_fractions_render_like_model_files(self):
        for value in (Fraction(4, 2), Fraction(-7, 3), Fraction(0)):
            assert to_exact(value) == format_rational(value)
        assert to_exact(Fraction(4, 2)) == "2/1"

    def test_report_separates_data_and_meta(self):
        report = Report("verify", {"b": 1, "a": Fraction(1, 3)}, meta={"wallTimeSeconds": 0.5})
        document = json.loads(report.to_json())
        assert document["command"] == "verify"
        assert document["data"] == {"a": "1/3", "b": 1}
        assert document["meta"] == {"wallTimeSeconds": 0.5}
        assert list(json.loads(report.data_json())) == ["a", "b"]

    def test_csv(self):
        assert render_csv(["model", "count"], [["su2_4", 2]]) == "model,count\nsu2_4,2\n"


class TestLogging:
    def test_single_handler_on_repeated_setup(self):
        first, second = io.StringIO(), io.StringIO()
        configure_logging("INFO", first)
        logger = configure_logging("DEBUG", second)
        logging.getLogger("src.modular.invariants").debug("walked %d subtrees", 3)
        marked = [h for h in logger.handlers if getattr(h, "_fusionkk", False)]
        assert len(marked) == 1
        assert first.getvalue() == ""
        assert "walked 3 subtrees" in second.getvalue()
        assert logger.level == logging.DEBUG
        configure_logging("WARNING")
