"""
Tests for subgroup factorization, symbolic z_h and block determinants
"""
import os
import random
import sys
import unittest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from groupdet.core.determinant import Assignment, eval_bareiss, eval_dedekind
from groupdet.core.errors import ExpansionLimitError, GroupError, VerificationError
from groupdet.core.factorization import (block_determinant, collapse_block_sum, eval_via_subgroup, factor_report_text,
                                         group_matrix_labels, subgroup_cayley, symbolic_z)
from groupdet.core.groups import (all_subgroups, cayley, dihedral_group, make_group, random_character_transversal,
                                  random_transversal, subgroup_closure)
from groupdet.core.oracle import cross_check


class TestEvalViaSubgroup(unittest.TestCase):
    def test_c4_example(self):
        G = make_group([4])
        H = subgroup_closure(G, [(2,)])
        report = eval_via_subgroup(G, H, Assignment.from_sequence(G, [1, 2, 3, 4]))
        self.assertEqual(report.z, {(0,): -6, (2,): -14})
        self.assertEqual(report.theta_h, -160)
        self.assertEqual(report.product, -160)
        self.assertEqual(len(report.factors), 2)

    def test_every_subgroup_agrees(self):
        rng = random.Random(21)
        for orders in ([4, 2], [8, 2], [2, 2, 2]):
            G = make_group(orders)
            for H in all_subgroups(G):
                for _ in range(3):
                    a = Assignment.random(G, rng, 5)
                    self.assertEqual(eval_via_subgroup(G, H, a).product, eval_dedekind(G, a))

    def test_direct_factor(self):
        # C8 x C2 through its C8 factor
        G = make_group([8, 2])
        H = subgroup_closure(G, [(1, 0)])
        rng = random.Random(5)
        for _ in range(5):
            a = Assignment.random(G, rng, 4)
            report = eval_via_subgroup(G, H, a)
            self.assertEqual(report.theta_h, eval_bareiss(G, a))

    def test_transversal_independence(self):
        G = make_group([8, 2])
        H = subgroup_closure(G, [(2, 1)])
        rng = random.Random(9)
        a = Assignment.random(G, rng, 5)
        base = eval_via_subgroup(G, H, a)
        for _ in range(5):
            T = random_transversal(G, H, rng)
            X = random_character_transversal(G, H, rng)
            report = eval_via_subgroup(G, H, a, T, X)
            self.assertEqual(report.transversal, tuple(T))
            self.assertEqual(report.z, base.z)
            self.assertEqual(report.product, base.product)

    def test_factors_read_on_chosen_cosets(self):
        G = make_group([4])
        H = subgroup_closure(G, [(2,)])
        a = Assignment.from_sequence(G, [1, 2, 3, 4])
        default = eval_via_subgroup(G, H, a)
        shifted = eval_via_subgroup(G, H, a, [(2,), (3,)])
        self.assertEqual(shifted.transversal, ((2,), (3,)))
        self.assertEqual(shifted.factors, default.factors)
        self.assertEqual(shifted.z, {(0,): -6, (2,): -14})

    def test_identity_assignment(self):
        G = make_group([4, 2])
        H = subgroup_closure(G, [(2, 0)])
        report = eval_via_subgroup(G, H, Assignment.identity_indicator(G))
        self.assertTrue(all(f == 1 for f in report.factors))
        self.assertEqual(report.product, 1)

    def test_report_rendering(self):
        G = make_group([4])
        H = subgroup_closure(G, [(2,)])
        report = eval_via_subgroup(G, H, Assignment.from_sequence(G, [1, 2, 3, 4]))
        text = factor_report_text(report)
        self.assertIn("z(0,) = -6", text)
        self.assertIn("product    = -160", text)
        data = report.to_dict()
        self.assertEqual(data['product'], -160)
        self.assertEqual(data['z'], [{'element': [0], 'value': -6}, {'element': [2], 'value': -14}])

    def test_subgroup_of_other_group(self):
        G = make_group([4])
        H = subgroup_closure(make_group([2, 2]), [(1, 0)])
        with self.assertRaises(GroupError):
            eval_via_subgroup(G, H, Assignment.identity_indicator(G))

    def test_subgroup_cayley(self):
        G = make_group([8, 2])
        H = subgroup_closure(G, [(2, 0)])
        C = subgroup_cayley(H)
        self.assertEqual(C.size, 4)
        self.assertTrue(C.is_abelian)


class TestSymbolicZ(unittest.TestCase):
    def test_c4_polynomials(self):
        G = make_group([4])
        H = subgroup_closure(G, [(2,)])
        z = symbolic_z(G, H)
        self.assertEqual(z[(0,)].format(), "x_0^2 - 2*x_1*x_3 + x_2^2")
        self.assertEqual(z[(2,)].format(), "2*x_0*x_2 - x_1^2 - x_3^2")

    def test_homogeneous_of_index_degree(self):
        for orders, gens in (([4, 2], [(1, 0)]), ([8, 2], [(2, 0)]), ([2, 2, 2], [(1, 0, 0)]), ([8], [(4,)])):
            G = make_group(orders)
            H = subgroup_closure(G, gens)
            for h, poly in symbolic_z(G, H).items():
                self.assertIn(h, H)
                self.assertTrue(poly.is_homogeneous(H.index))

    def test_substitution_matches_numeric_z(self):
        rng = random.Random(31)
        G = make_group([8, 2])
        H = subgroup_closure(G, [(2, 0)])
        z = symbolic_z(G, H)
        for _ in range(3):
            a = Assignment.random(G, rng, 4)
            numeric = eval_via_subgroup(G, H, a).z
            for h in H.elements:
                self.assertEqual(z[h].substitute(a.as_mapping()), numeric[h])

    def test_whole_group_gives_variables(self):
        G = make_group([4])
        z = symbolic_z(G, subgroup_closure(G, [(1,)]))
        self.assertEqual(z[(3,)].format(), "x_3")

    def test_expansion_limit(self):
        G = make_group([2, 2, 2, 2])
        with self.assertRaises(ExpansionLimitError):
            symbolic_z(G, subgroup_closure(G, []))
        G = make_group([8])
        with self.assertRaises(ExpansionLimitError):
            symbolic_z(G, subgroup_closure(G, []), max_terms=10)


class TestBlockDeterminant(unittest.TestCase):
    def test_abelian_layouts(self):
        rng = random.Random(17)
        G = make_group([8, 2])
        for H in all_subgroups(G):
            if H.index > 4:
                continue
            a = Assignment.random(G, rng, 4)
            self.assertEqual(block_determinant(G, H, a), eval_dedekind(G, a))

    def test_dihedral_rotation_subgroup(self):
        D = dihedral_group(16)
        rotations = D.closure([1])
        rng = random.Random(3)
        for _ in range(5):
            a = Assignment.random(D, rng, 5)
            self.assertEqual(block_determinant(D, rotations, a), eval_bareiss(D, a))

    def test_dihedral_index_four(self):
        D = dihedral_group(16)
        klein = D.closure([4, 8])
        a = Assignment.random(D, random.Random(4), 3)
        self.assertEqual(block_determinant(D, klein, a), eval_bareiss(D, a))

    def test_collapse_of_summed_blocks(self):
        C = cayley(make_group([4]))
        H = (0, 2)
        self.assertEqual(group_matrix_labels(C, H, [[5, 7], [7, 5]]), {0: 5, 1: 7})
        self.assertEqual(collapse_block_sum(C, H, [[5, 7], [7, 5]]), -24)

    def test_corrupted_block_sum_rejected(self):
        C = cayley(make_group([4]))
        with self.assertRaises(VerificationError):
            collapse_block_sum(C, (0, 2), [[5, 7], [6, 5]])
        D = dihedral_group(16)
        rotations = D.closure([1])
        total = [[(i - j) % 8 for j in range(8)] for i in range(8)]
        self.assertIsInstance(collapse_block_sum(D, rotations, total), int)
        total[3][5] += 1
        with self.assertRaises(VerificationError):
            collapse_block_sum(D, rotations, total)

    def test_non_abelian_subgroup_rejected(self):
        D = dihedral_group(16)
        with self.assertRaises(GroupError):
            block_determinant(D, D.closure([1, 8]), Assignment.identity_indicator(D))

    def test_index_limit(self):
        G = make_group([8, 2])
        H = subgroup_closure(G, [(4, 0)])
        with self.assertRaises(ExpansionLimitError):
            block_determinant(G, H, Assignment.identity_indicator(G))


class TestOracle(unittest.TestCase):
    def test_small_groups_agree(self):
        rng = random.Random(100)
        for spec in ((2,), (4,), (2, 2), (4, 2)):
            report = cross_check(make_group(spec), rng, samples=5)
            self.assertTrue(report.passed, report.mismatches)

    def test_dihedral(self):
        report = cross_check(dihedral_group(16), random.Random(1), samples=3)
        self.assertTrue(report.passed)
        self.assertGreater(report.block_subgroups, 0)
        self.assertEqual(report.to_dict()['group'], "D16")


if __name__ == '__main__':
    unittest.main()
