"""
Unit tests for soft int-group validation, products, normality, conjugates and level subgroups.
"""

import os
import sys
import unittest

from hypothesis import given, settings

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from soft_intgroups.config import NormalityCriterion
from soft_intgroups.errors import EmptyFamily, EmptySupport, NotAnIntGroup, PreconditionFailed
from soft_intgroups.groups import Subgroup, cyclic, dihedral
from soft_intgroups.int_groups import (
    GroupoidViolation, InverseViolation, SoftIntGroup, chain_int_group, check_int_group,
    commutator_value_test, conjugate, distinct_conjugates, family_intersection, identity_dominance,
    int_group_routes, inverse_witness, is_normal, largest_normal_contained, level_structure,
    normality_report, normalizer, quotient_by_eset_abelian, require_int_group, restrict,
    soft_inverse, soft_product,
)
from soft_intgroups.soft_sets import (
    SoftSet, characteristic, empty_soft, image_of_set, is_soft_subset, soft_point, universal_soft,
)
from tests.fixtures import (
    E, U, UNIVERSE_A, UNIVERSE_AB, V, cyclic4_graded, dihedral_peaked, dihedral_reflection,
    klein_split,
)
from tests.strategies import int_groups, soft_sets


class TestValidation(unittest.TestCase):
    """Test cases for the int-group conditions."""

    def test_shared_fixtures_validate(self):
        """Test that every shared example is a soft int-group."""
        for f in (cyclic4_graded(), dihedral_reflection(), dihedral_peaked(), klein_split()):
            self.assertIsInstance(check_int_group(f.inner), SoftIntGroup)

    def test_constant_soft_sets(self):
        """Test that the empty and universal soft sets are int-groups."""
        d3 = dihedral(3)
        self.assertIsInstance(check_int_group(empty_soft(d3, UNIVERSE_AB)), SoftIntGroup)
        self.assertIsInstance(check_int_group(universal_soft(d3, UNIVERSE_AB)), SoftIntGroup)

    def test_groupoid_witness(self):
        """Test that a lone point away from e fails at (1,1)."""
        f = soft_point(cyclic(4), 1, UNIVERSE_AB.subset(["a"]))
        violation = check_int_group(f)
        self.assertEqual(violation, GroupoidViolation(1, 1))
        self.assertEqual(violation.describe(f.group), "groupoid condition fails at (1,1)")

    def test_inverse_witness(self):
        """Test the inverse pass on its own."""
        self.assertEqual(inverse_witness(cyclic(4), (1, 1, 0, 0)), 1)
        self.assertIsNone(inverse_witness(cyclic(4), (3, 1, 3, 1)))
        self.assertEqual(InverseViolation(1).describe(cyclic(4)), "inverse condition fails at 1")

    def test_require_raises(self):
        """Test that require_int_group and the wrapper raise NotAnIntGroup."""
        f = soft_point(cyclic(4), 1, UNIVERSE_AB.full())
        with self.assertRaises(NotAnIntGroup):
            require_int_group(f)
        with self.assertRaises(NotAnIntGroup):
            SoftIntGroup(f)

    def test_routes_agree_on_z4(self):
        """Test the three routes on every soft set over Z4 with one label."""
        z4 = cyclic(4)
        for code in range(16):
            masks = tuple(code >> i & 1 for i in range(4))
            routes = int_group_routes(SoftSet(z4, UNIVERSE_A, masks))
            self.assertEqual(len(set(routes.values())), 1, (masks, routes))

    @given(soft_sets())
    @settings(max_examples=200)
    def test_routes_agree(self, f):
        """Test that direct, cut and product routes give one verdict."""
        routes = int_group_routes(f)
        self.assertEqual(len(set(routes.values())), 1)

    @given(int_groups())
    def test_identity_dominance(self, f):
        """Test that f(e) contains every value and the e-set is a subgroup."""
        self.assertTrue(identity_dominance(f))


class TestProducts(unittest.TestCase):
    """Test cases for the soft product and soft inverse."""

    def setUp(self):
        """Set up the graded soft set over Z4."""
        self.graded = cyclic4_graded()

    def test_int_group_is_idempotent(self):
        """Test f*f = f for a soft int-group."""
        self.assertEqual(soft_product(self.graded, self.graded), self.graded.inner)

    def test_points_multiply(self):
        """Test x^alpha * y^beta = (xy)^(alpha & beta)."""
        z4 = cyclic(4)
        p = soft_point(z4, 1, UNIVERSE_AB.full())
        q = soft_point(z4, 2, UNIVERSE_AB.subset(["b"]))
        self.assertEqual(soft_product(p, q), soft_point(z4, 3, UNIVERSE_AB.subset(["b"])))

    def test_point_translates(self):
        """Test that the point u^{f(G)} times f is x -> f(u^-1 x)."""
        f = dihedral_reflection()
        alpha = image_of_set(f.inner, f.group.elements)
        translated = soft_product(soft_point(f.group, U, alpha), f)
        ldiv = f.group.left_division_table[U]
        self.assertEqual(translated.masks, tuple(f.masks[ldiv[x]] for x in f.group.elements))

    def test_inverse(self):
        """Test that a soft int-group is its own inverse and inversion is an involution."""
        self.assertEqual(soft_inverse(self.graded), self.graded.inner)
        f = SoftSet(cyclic(4), UNIVERSE_AB, (0, 1, 2, 3))
        self.assertEqual(soft_inverse(soft_inverse(f)), f)
        self.assertEqual(soft_inverse(f).masks, (0, 3, 2, 1))

    def test_restrict(self):
        """Test restrictions to subgroups."""
        half = restrict(self.graded, Subgroup(cyclic(4), (0, 2)))
        self.assertEqual(half.group.order, 2)
        self.assertEqual(half.masks, (3, 3))
        rotations = restrict(dihedral_peaked(), Subgroup(dihedral(3), (0, 1, 2)))
        self.assertEqual(rotations.masks, (3, 1, 1))

    @given(int_groups(normal_only=True))
    def test_normal_product_commutes(self, f):
        """Test f*g = g*f for normal f."""
        point = soft_point(f.group, 1, f.universe.full())
        self.assertEqual(soft_product(f, point), soft_product(point, f))


class TestNormality(unittest.TestCase):
    """Test cases for normality criteria."""

    def test_reflection_not_normal(self):
        """Test the {e, v} characteristic soft set under every criterion."""
        f = dihedral_reflection()
        report = normality_report(f)
        self.assertFalse(report.is_normal)
        self.assertTrue(report.agree)
        self.assertEqual(report.witnesses[NormalityCriterion.CONJ_EQ], (U, V))
        conjugated = f.group.conjugation_table[U][V]
        self.assertEqual(conjugated, f.group.index_of("vu"))
        self.assertEqual(f.masks[conjugated], 0)
        self.assertEqual(f.masks[V], UNIVERSE_A.full_mask)
        for criterion in NormalityCriterion:
            self.assertFalse(is_normal(f, criterion))

    def test_peaked_is_normal(self):
        """Test that a value constant off the identity is normal."""
        report = normality_report(dihedral_peaked())
        self.assertTrue(report.is_normal)
        self.assertTrue(report.agree)

    def test_abelian_groups(self):
        """Test that soft int-groups over Abelian groups are normal."""
        self.assertTrue(is_normal(cyclic4_graded()))
        self.assertTrue(is_normal(klein_split()))

    @given(int_groups())
    def test_criteria_agree(self, f):
        """Test that all six criteria agree on random soft int-groups."""
        self.assertTrue(normality_report(f).agree)

    def test_commutator_values(self):
        """Test f([x,y]) = f(e) on the shared fixtures."""
        self.assertFalse(commutator_value_test(dihedral_peaked()))
        self.assertTrue(commutator_value_test(cyclic4_graded()))
        self.assertTrue(commutator_value_test(SoftIntGroup(universal_soft(dihedral(3), UNIVERSE_A))))

    def test_eset_quotient(self):
        """Test the Abelian question for G/e_f."""
        self.assertTrue(quotient_by_eset_abelian(cyclic4_graded()))
        self.assertFalse(quotient_by_eset_abelian(dihedral_peaked()))
        with self.assertRaises(PreconditionFailed):
            quotient_by_eset_abelian(dihedral_reflection())


class TestConjugates(unittest.TestCase):
    """Test cases for conjugates, normalizers and the normal core."""

    def setUp(self):
        """Set up the reflection soft set."""
        self.f = dihedral_reflection()
        self.d3 = self.f.group

    def test_conjugate_by_identity(self):
        """Test f^e = f."""
        self.assertEqual(conjugate(self.f, E), self.f)
        self.assertNotEqual(conjugate(self.f, U), self.f)

    def test_conjugation_composes(self):
        """Test conjugate(conjugate(f, u), v) = conjugate(f, uv)."""
        for u in self.d3.elements:
            for v in self.d3.elements:
                self.assertEqual(conjugate(conjugate(self.f, u), v), conjugate(self.f, self.d3.op(u, v)))

    def test_normalizer(self):
        """Test normalizers of the shared fixtures."""
        self.assertEqual(normalizer(self.f).members, (E, V))
        self.assertEqual(normalizer(self.f).index, 3)
        self.assertEqual(normalizer(dihedral_peaked()), Subgroup.whole(self.d3))

    def test_conjugate_counts(self):
        """Test that the count of distinct conjugates is the normalizer index."""
        self.assertEqual(len(distinct_conjugates(self.f)), 3)
        self.assertEqual(len(distinct_conjugates(dihedral_peaked())), 1)
        with self.assertRaises(EmptySupport):
            distinct_conjugates(SoftIntGroup(empty_soft(self.d3, UNIVERSE_A)))

    def test_largest_normal(self):
        """Test that the core of {e, v} is {e}."""
        core = largest_normal_contained(self.f)
        self.assertEqual(core.masks, (1, 0, 0, 0, 0, 0))
        self.assertTrue(is_normal(core))

    def test_family_intersection(self):
        """Test intersections of families."""
        self.assertEqual(family_intersection([self.f]), self.f)
        self.assertEqual(family_intersection(distinct_conjugates(self.f)), largest_normal_contained(self.f))
        with self.assertRaises(EmptyFamily):
            family_intersection([])

    @given(int_groups())
    def test_core_is_contained_and_normal(self, f):
        """Test the normal core is a normal int-group inside f."""
        core = largest_normal_contained(f)
        self.assertIsInstance(check_int_group(core.inner), SoftIntGroup)
        self.assertTrue(is_normal(core))
        self.assertTrue(is_soft_subset(core.inner, f.inner))


class TestLevels(unittest.TestCase):
    """Test cases for chain construction and level subgroups."""

    def test_chain_rebuilds_graded(self):
        """Test that {0} < {0,2} < Z4 with values {a,b} {a,b} {a} is the graded example."""
        z4 = cyclic(4)
        f = chain_int_group(z4, UNIVERSE_AB, [{0}, {0, 2}, range(4)], [3, 3, 1])
        self.assertEqual(f, cyclic4_graded())

    def test_chain_rejects_bad_input(self):
        """Test nesting, descent and length checks."""
        d3 = dihedral(3)
        with self.assertRaises(ValueError):
            chain_int_group(d3, UNIVERSE_A, [{0, 3}, {0, 1, 2}], [1, 1])
        with self.assertRaises(ValueError):
            chain_int_group(d3, UNIVERSE_AB, [{0}, range(6)], [1, 3])
        with self.assertRaises(ValueError):
            chain_int_group(d3, UNIVERSE_A, [{0}], [1, 1])

    def test_graded_levels(self):
        """Test the level structure of the graded example."""
        report = level_structure(cyclic4_graded())
        self.assertEqual([h.members for h in report.level_subgroups], [(0, 2), (0, 1, 2, 3)])
        self.assertTrue(report.is_chain)
        self.assertEqual(report.summary(), "soft level normal")

    def test_reflection_levels(self):
        """Test that {e,v} < D3 is a chain that is not level normal."""
        report = level_structure(dihedral_reflection())
        self.assertEqual(repr(report.level_subgroups[0]), "{e,v}")
        self.assertFalse(report.chain_level_normal)
        self.assertFalse(report.poset_level_normal)
        self.assertEqual(report.summary(), "not soft level normal")

    def test_split_levels(self):
        """Test that the Klein example is not a chain but is poset level normal."""
        report = level_structure(klein_split())
        self.assertEqual([h.members for h in report.level_subgroups], [(0,), (0, 1), (0, 2), (0, 1, 2, 3)])
        self.assertIsNone(report.chain)
        self.assertIsNone(report.chain_level_normal)
        self.assertTrue(report.poset_level_normal)
        self.assertEqual(report.summary(), "images not a chain; poset-form level-normal: yes")

    def test_peaked_levels(self):
        """Test that {e} < D3 is level normal."""
        report = level_structure(dihedral_peaked())
        self.assertEqual([h.order for h in report.level_subgroups], [1, 6])
        self.assertEqual(report.summary(), "soft level normal")

    @given(int_groups(normal_only=True))
    def test_normal_is_level_normal(self, f):
        """Test that normal soft int-groups are poset level normal."""
        self.assertTrue(level_structure(f).poset_level_normal)


if __name__ == '__main__':
    unittest.main()
