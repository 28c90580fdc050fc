"""
Unit tests for suite planning, running and reporting.
"""

import json
import os
import sys
import unittest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from soft_intgroups.config import SuiteMode, Verdict
from soft_intgroups.suite import DESK_GROUPS, PRESETS, SuiteConfig, plan, preset, run_suite
from soft_intgroups.theorems import TheoremId


class TestPlanning(unittest.TestCase):
    """Test cases for presets and plans."""

    def test_presets(self):
        """Test the preset names and their groups."""
        self.assertEqual(set(PRESETS), {"desk", "quick", "random"})
        self.assertEqual(preset("desk").groups, DESK_GROUPS)
        self.assertEqual(preset("desk").universes, [1, 2])
        self.assertEqual(preset("random").mode, SuiteMode.RANDOM)
        with self.assertRaises(ValueError):
            preset("weekly")

    def test_presets_are_fresh(self):
        """Test that editing one preset config leaves the next one alone."""
        config = preset("quick")
        config.groups.append("quaternion")
        self.assertNotIn("quaternion", preset("quick").groups)

    def test_canonical_order(self):
        """Test that plans follow theorem order whatever the selection order."""
        config = SuiteConfig(groups=["cyclic:2", "klein"], theorems=[TheoremId.C15, TheoremId.B20])
        pairs = plan(config)
        self.assertEqual([tid for tid, _ in pairs], [TheoremId.B20] * 2 + [TheoremId.C15] * 2)
        self.assertEqual([inst.group for _, inst in pairs], ["cyclic:2", "klein"] * 2)

    def test_homomorphism_instances(self):
        """Test one transport instance per catalog homomorphism."""
        pairs = plan(SuiteConfig(groups=["cyclic:4"], theorems=[TheoremId.D376]))
        homs = [inst.hom for _, inst in pairs]
        self.assertIn("reduction:4:2", homs)
        self.assertIn("quotient:cyclic:4:0,2", homs)
        self.assertIn("inclusion:cyclic:4:0,2", homs)
        self.assertTrue(all(inst.group == "cyclic:4" for _, inst in pairs))

    def test_direct_product_plan(self):
        """Test that direct products plan their quotient and inclusion maps."""
        config = SuiteConfig(groups=["cyclic:2 x cyclic:2"], theorems=[TheoremId.B20, TheoremId.D376])
        pairs = plan(config)
        self.assertEqual(len(pairs), 1 + 7)
        self.assertEqual(pairs[0][0], TheoremId.B20)
        self.assertTrue(all(inst.group == "cyclic:2 x cyclic:2" for _, inst in pairs))
        self.assertTrue(all(inst.hom.startswith(("quotient:", "inclusion:")) for _, inst in pairs[1:]))

    def test_selected_defaults_to_all(self):
        """Test that no selection means every theorem."""
        self.assertEqual(SuiteConfig().selected(), list(TheoremId))


class TestRunning(unittest.TestCase):
    """Test cases for running the suite."""

    def setUp(self):
        """Set up a small suite configuration."""
        self.config = SuiteConfig(
            groups=["cyclic:2", "klein", "dihedral:3"],
            universes=[1],
            theorems=[TheoremId.B367, TheoremId.C15, TheoremId.C290, TheoremId.C90_CONV],
        )

    def test_empty_suite(self):
        """Test that no groups gives an empty report with exit code 0."""
        report = run_suite(SuiteConfig(groups=[]))
        self.assertEqual(report.reports, [])
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.summary(), "0 records: 0 holds, 0 violated, 0 precondition-unmet, 0 informational")

    def test_small_suite(self):
        """Test verdicts of a small suite."""
        report = run_suite(self.config)
        self.assertEqual(len(report.reports), 12)
        self.assertEqual(report.violations, [])
        self.assertEqual(report.exit_code, 0)
        counts = report.counts()
        self.assertEqual(counts[Verdict.INFORMATIONAL], 3)
        self.assertEqual(counts[Verdict.HOLDS], 9)

    def test_structured_is_deterministic(self):
        """Test that two runs give byte-identical structured output."""
        self.assertEqual(run_suite(self.config).to_structured(), run_suite(self.config).to_structured())

    def test_workers_do_not_change_results(self):
        """Test that process workers give the same document as a single process."""
        parallel = SuiteConfig(**{**self.config.__dict__, "workers": 2})
        self.assertEqual(run_suite(parallel).to_structured(), run_suite(self.config).to_structured())

    def test_structured_document(self):
        """Test the keys of the structured report."""
        document = json.loads(run_suite(self.config).to_structured())
        self.assertEqual(set(document), {"config", "records", "summary", "exit_code"})
        record = document["records"][0]
        self.assertEqual(record["id"], "B367")
        self.assertIsNone(record["micros"])
        self.assertEqual(len(record["digest"]), 16)

    def test_text_report(self):
        """Test the last line of the text report."""
        lines = run_suite(self.config).render_text().split("\n")
        self.assertTrue(lines[-1].startswith("12 records: 9 holds, 0 violated"))

    def test_quick_preset_has_no_violations(self):
        """Test the quick preset end to end."""
        report = run_suite(preset("quick"))
        self.assertEqual([r.theorem.value for r in report.violations], [])

    def test_direct_product_suite(self):
        """Test a run over a direct product group."""
        theorems = [TheoremId.B20, TheoremId.D376, TheoremId.C430]
        config = SuiteConfig(groups=["cyclic:2 x cyclic:2"], theorems=theorems)
        report = run_suite(config)
        self.assertEqual(len(report.reports), 1 + 7 + 7)
        self.assertEqual(report.violations, [])
        self.assertEqual(report.exit_code, 0)


class TestDeskPreset(unittest.TestCase):
    """Test cases for the full desk preset."""

    def test_desk_preset_is_clean_and_reproducible(self):
        """Test exit code 0, no violations and identical documents across two runs."""
        first = run_suite(preset("desk"))
        self.assertEqual(first.exit_code, 0)
        self.assertEqual(first.counts()[Verdict.VIOLATED], 0)
        second = run_suite(preset("desk"))
        self.assertEqual(first.to_structured(), second.to_structured())


if __name__ == '__main__':
    unittest.main()
