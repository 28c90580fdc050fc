"""
Golden tests for the command-line verbs.
"""

import io
import json
import os
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from soft_intgroups.cli import run
from soft_intgroups.formats import parse_soft_set
from soft_intgroups.groups import cyclic
from tests.fixtures import SOFT_FILES, cyclic4_graded


class TestCli(unittest.TestCase):
    """Test cases for each verb's exit code and output."""

    def setUp(self):
        """Write the shared soft-set files to a temporary directory."""
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self._tmp.name)
        self.files = {}
        for name, text in SOFT_FILES.items():
            path = self.dir / f"{name}.soft"
            path.write_text(text, encoding="utf-8")
            self.files[name] = str(path)

    def tearDown(self):
        """Remove the temporary directory."""
        self._tmp.cleanup()

    def invoke(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = run(list(argv))
        return code, out.getvalue().splitlines(), err.getvalue()

    def write(self, name, text):
        path = self.dir / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    def test_validate_not_normal(self):
        """Test the reflection soft set reports its normality witness."""
        code, lines, _ = self.invoke("validate", "--group", "dihedral:3", "--soft", self.files["dihedral_reflection"])
        self.assertEqual(code, 0)
        self.assertEqual(lines, ["int-group: yes; normal: no; witness (u,v)"])

    def test_validate_normal(self):
        """Test a normal soft int-group."""
        code, lines, _ = self.invoke("validate", "--group", "cyclic:4", "--soft", self.files["cyclic4_graded"])
        self.assertEqual(code, 0)
        self.assertEqual(lines, ["int-group: yes; normal: yes"])

    def test_validate_failure(self):
        """Test that a lone point away from e is refused with exit code 1."""
        path = self.write("point.soft", "universe 1 a\n1 : {a}\n")
        code, lines, _ = self.invoke("validate", "--group", "cyclic:4", "--soft", path)
        self.assertEqual(code, 1)
        self.assertEqual(lines, ["int-group: no; groupoid condition fails at (1,1)"])

    def test_validate_trivial_group(self):
        """Test the empty soft set over Z1."""
        path = self.write("empty.soft", "universe 1 a\n")
        code, lines, _ = self.invoke("validate", "--group", "cyclic:1", "--soft", path)
        self.assertEqual(code, 0)
        self.assertTrue(lines[0].startswith("int-group: yes"))

    def test_verbs_refuse_non_int_groups(self):
        """Test that verbs needing an int-group exit 1."""
        path = self.write("point.soft", "universe 1 a\n1 : {a}\n")
        for verb in ("normal", "levels", "normalizer", "quotient", "conjugates"):
            code, lines, _ = self.invoke(verb, "--group", "cyclic:4", "--soft", path)
            self.assertEqual(code, 1, verb)
            self.assertTrue(lines[0].startswith("int-group: no;"), verb)

    def test_normal_criteria(self):
        """Test the six criteria lines and their agreement."""
        code, lines, _ = self.invoke("normal", "--group", "dihedral:3", "--soft", self.files["dihedral_peaked"])
        self.assertEqual(code, 0)
        self.assertEqual(len(lines), 7)
        self.assertEqual(lines[-1], "agree: yes")
        self.assertEqual(lines[0], "abelian: yes")

    def test_levels_chain(self):
        """Test the level summary of the reflection soft set."""
        code, lines, _ = self.invoke("levels", "--group", "dihedral:3", "--soft", self.files["dihedral_reflection"])
        self.assertEqual(code, 0)
        self.assertIn("chain: {e,v} < {e,u,u2,v,vu,vu2}", lines)
        self.assertEqual(lines[-1], "not soft level normal")

    def test_levels_not_chain(self):
        """Test the level summary of the Klein example."""
        code, lines, _ = self.invoke("levels", "--group", "klein", "--soft", self.files["klein_split"])
        self.assertEqual(code, 0)
        self.assertIn("chain: none", lines)
        self.assertIn("image chain: no", lines)
        self.assertEqual(lines[-1], "images not a chain; poset-form level-normal: yes")

    def test_normalizer(self):
        """Test the normalizer of {e, v} and its index."""
        code, lines, _ = self.invoke("normalizer", "--group", "dihedral:3", "--soft", self.files["dihedral_reflection"])
        self.assertEqual(code, 0)
        self.assertEqual(lines, ["normalizer: {e,v}", "index: 3"])

    def test_conjugates(self):
        """Test the conjugate count of {e, v}."""
        code, lines, _ = self.invoke("conjugates", "--group", "dihedral:3", "--soft", self.files["dihedral_reflection"])
        self.assertEqual(code, 0)
        self.assertEqual(lines[0], "distinct conjugates: 3")
        self.assertEqual(len(lines), 4)

    def test_quotient(self):
        """Test the quotient table and the non-normal refusal."""
        code, lines, _ = self.invoke("quotient", "--group", "cyclic:4", "--soft", self.files["cyclic4_graded"])
        self.assertEqual(code, 0)
        self.assertEqual(lines[0], "order: 2")
        self.assertIn("isomorphism onto G/e_f:", lines)
        code, lines, _ = self.invoke("quotient", "--group", "dihedral:3", "--soft", self.files["dihedral_reflection"])
        self.assertEqual(code, 1)
        self.assertEqual(lines, ["not normal; no quotient"])

    def test_product_round_trip(self):
        """Test that the product output parses back as a soft set."""
        graded = self.files["cyclic4_graded"]
        code, lines, _ = self.invoke("product", "--group", "cyclic:4", "--soft", graded, "--soft2", graded)
        self.assertEqual(code, 0)
        self.assertEqual(lines[0], "# validated: int-group, normal")
        self.assertEqual(parse_soft_set("\n".join(lines), cyclic(4)), cyclic4_graded())

    def test_image(self):
        """Test the soft image along Z4 -> Z2."""
        code, lines, _ = self.invoke("image", "--hom", "reduction:4:2", "--soft", self.files["cyclic4_graded"])
        self.assertEqual(code, 0)
        self.assertEqual(parse_soft_set("\n".join(lines), cyclic(2)).masks, (3, 1))

    def test_preimage(self):
        """Test the soft preimage along Z4 -> Z2."""
        path = self.write("z2.soft", "universe 2 a b\n0 : {a,b}\n1 : {a}\n")
        code, lines, _ = self.invoke("preimage", "--hom", "reduction:4:2", "--soft", path)
        self.assertEqual(code, 0)
        self.assertEqual(parse_soft_set("\n".join(lines), cyclic(4)), cyclic4_graded())

    def test_enumerate(self):
        """Test the three enumeration counts over Z2."""
        cases = ((), "soft sets: 4"), (("--int-groups",), "int-groups: 3"), (("--normal",), "normal int-groups: 3")
        for flags, expected in cases:
            code, lines, _ = self.invoke("enumerate", "--group", "cyclic:2", "--universe", "1", *flags)
            self.assertEqual(code, 0)
            self.assertEqual(lines, [expected])

    def test_enumerate_list(self):
        """Test listed int-groups over Z2."""
        code, lines, _ = self.invoke("enumerate", "--group", "cyclic:2", "--universe", "1", "--int-groups", "--list")
        self.assertEqual(lines[1:], ["0:{} 1:{}", "0:{a} 1:{}", "0:{a} 1:{a}"])

    def test_theorems_empty(self):
        """Test that an empty group list gives an empty report."""
        code, lines, _ = self.invoke("theorems", "--groups", "")
        self.assertEqual(code, 0)
        self.assertTrue(lines[-1].startswith("0 records"))

    def test_theorems_on_direct_product(self):
        """Test the suite over a direct product group."""
        code, lines, _ = self.invoke("theorems", "--groups", "cyclic:2 x cyclic:2", "--universe", "1",
                                     "--theorem", "B20")
        self.assertEqual(code, 0)
        self.assertEqual(lines[-1], "1 records: 1 holds, 0 violated, 0 precondition-unmet, 0 informational")

    def test_theorems_structured(self):
        """Test structured output for one theorem and its determinism."""
        argv = ("--format", "structured", "theorems", "--groups", "cyclic:2;klein", "--universe", "1",
                "--theorem", "B367", "--theorem", "c15")
        code, first, _ = self.invoke(*argv)
        self.assertEqual(code, 0)
        document = json.loads("\n".join(first))
        self.assertEqual([r["id"] for r in document["records"]], ["B367", "B367", "C15", "C15"])
        self.assertTrue(all(r["verdict"] == "holds" for r in document["records"]))
        _, second, _ = self.invoke(*argv)
        self.assertEqual(first, second)

    def test_structured_validate(self):
        """Test the structured rendering of validate."""
        code, lines, _ = self.invoke("--format", "structured", "validate", "--group", "dihedral:3",
                                     "--soft", self.files["dihedral_reflection"])
        self.assertEqual(json.loads("\n".join(lines)), {"int_group": True, "normal": False, "witness": ["u", "v"]})

    def test_parse_errors(self):
        """Test exit code 2 for parse errors and bad arguments."""
        path = self.write("bad.soft", "universe 1 a\n0 : {z}\n")
        code, _, err = self.invoke("validate", "--group", "cyclic:2", "--soft", path)
        self.assertEqual(code, 2)
        self.assertIn("line 2", err)
        self.assertEqual(self.invoke("validate", "--group", "bogus", "--soft", path)[0], 2)
        self.assertEqual(self.invoke("frobnicate")[0], 2)
        self.assertEqual(self.invoke("theorems", "--groups", "cyclic:2", "--theorem", "Z99")[0], 2)

    def test_missing_file(self):
        """Test that an unreadable soft file exits 2."""
        code, _, err = self.invoke("validate", "--group", "cyclic:2", "--soft", str(self.dir / "missing.soft"))
        self.assertEqual(code, 2)
        self.assertIn("cannot read", err)


if __name__ == '__main__':
    unittest.main()
