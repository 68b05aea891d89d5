"""
Tests for the C8 x C2 fold, closed forms and alpha/beta/gamma split
"""
import os
import random
import sys
import unittest

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from groupdet.c8c2.transform import (C4, C8, C8XC2, alpha_beta_gamma, assignment_of, bcde, d4, d4_halves, d4_tilde,
                                     d4_tilde_cyclotomic, d4_via_d2, d8, d8x2, d8x2_via_d8, element_of_index,
                                     two_adic_valuation, vec16)
from groupdet.c8c2.witnesses import prime_family_vector, small_family_witness
from groupdet.core.determinant import Assignment, eval_bareiss, eval_dedekind
from groupdet.core.errors import VerificationError


def random_vec(rng, bound, n=16):
    return [rng.randint(-bound, bound) for _ in range(n)]


class TestFold(unittest.TestCase):
    def test_examples(self):
        identity = [1] + [0] * 15
        f = bcde(identity)
        self.assertEqual((f.b, f.c, f.d, f.e), ((1, 0, 0, 0),) * 4)

        f = bcde([1] * 16)
        self.assertEqual(f.b, (4, 4, 4, 4))
        self.assertEqual((f.c, f.d, f.e), ((0, 0, 0, 0),) * 3)

        f = bcde([2] + [1] * 15)
        self.assertEqual(f.b, (5, 4, 4, 4))
        self.assertEqual((f.c, f.d, f.e), ((1, 0, 0, 0),) * 3)

    def test_congruences_hold_for_random_vectors(self):
        rng = random.Random(6)
        for _ in range(200):
            f = bcde(random_vec(rng, 9))
            for i in range(4):
                column = (f.b[i], f.c[i], f.d[i], f.e[i])
                self.assertEqual(len({x % 2 for x in column}), 1)
                self.assertEqual(sum(column) % 4, 0)

    def test_bad_fold_rejected(self):
        from groupdet.c8c2.transform import BCDE
        with self.assertRaises(VerificationError):
            BCDE((1, 0, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0), (1, 0, 0, 0))

    def test_vec16_length(self):
        with self.assertRaises(ValueError):
            vec16([1, 2, 3])

    def test_index_map(self):
        self.assertEqual(element_of_index(9), (1, 1))
        self.assertEqual(assignment_of(list(range(16))).as_mapping()[(3, 1)], 11)


class TestClosedForms(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(2024)

    def test_d4_examples(self):
        self.assertEqual(d4((1, 0, 0, 0)), 1)
        self.assertEqual(d4((1, 2, 3, 4)), -160)
        self.assertEqual(d4_tilde((1, 1, 0, 0)), 2)
        self.assertEqual(d4_tilde_cyclotomic((1, 1, 0, 0)), 2)

    def test_d4_matches_c4_determinant(self):
        for _ in range(50):
            x = random_vec(self.rng, 6, 4)
            self.assertEqual(d4(x), eval_bareiss(C4, Assignment.from_sequence(C4, x)))
            self.assertEqual(d4(x), d4_via_d2(x))

    def test_d4_halves(self):
        self.assertEqual(d4_halves((1, 2, 3, 4)), (-6, -14))

    def test_twisted_d4_in_cyclotomic_ring(self):
        for _ in range(50):
            x = random_vec(self.rng, 6, 4)
            self.assertEqual(d4_tilde(x), d4_tilde_cyclotomic(x))

    def test_sign_rotation(self):
        for _ in range(50):
            x0, x1, x2, x3 = random_vec(self.rng, 8, 4)
            self.assertEqual(d4((x0, x1, x2, x3)), -d4((x1, x2, x3, x0)))
            self.assertEqual(d4_tilde((x0, x1, x2, x3)), d4_tilde((x1, x2, x3, -x0)))

    def test_d8_matches_c8_determinant(self):
        for _ in range(20):
            x = random_vec(self.rng, 4, 8)
            self.assertEqual(d8(x), eval_dedekind(C8, Assignment.from_sequence(C8, x)))

    def test_d8x2_matches_generic_evaluators(self):
        for _ in range(100):
            a = random_vec(self.rng, 3)
            expected = eval_dedekind(C8XC2, assignment_of(a))
            self.assertEqual(d8x2(a), expected)
            self.assertEqual(d8x2_via_d8(a), expected)
        for _ in range(10):
            a = random_vec(self.rng, 3)
            self.assertEqual(d8x2(a), eval_bareiss(C8XC2, assignment_of(a)))

    def test_d8x2_examples(self):
        self.assertEqual(d8x2([1] + [0] * 15), 1)
        self.assertEqual(d8x2([0] + [-1] * 15), -15)
        self.assertEqual(d8x2(small_family_witness(5, 0)), 2 ** 12)

    def test_numpy_columns(self):
        rows = np.array([random_vec(self.rng, 1) for _ in range(64)], dtype=np.int64)
        values = d8x2([rows[:, j] for j in range(16)])
        for row, value in zip(rows, values):
            self.assertEqual(int(value), d8x2([int(v) for v in row]))


class TestAlphaBetaGamma(unittest.TestCase):
    def test_identity(self):
        abg = alpha_beta_gamma([1] + [0] * 15)
        self.assertEqual(abg.alphas, (1, 1, 1, 1))
        self.assertEqual(abg.beta_norm, 1)
        self.assertEqual(abg.gamma_norm, 1)

    def test_product_identities(self):
        rng = random.Random(77)
        for _ in range(100):
            a = random_vec(rng, 4)
            f = bcde(a)
            abg = alpha_beta_gamma(a)
            a0, a1, a2, a3 = abg.alphas
            self.assertEqual(a0 * a1, d4(f.b))
            self.assertEqual(a2 * a3, d4(f.d))
            self.assertEqual(abg.beta_norm, d4_tilde(f.c))
            self.assertEqual(abg.gamma_norm, d4_tilde(f.e))
            self.assertEqual(abg.product(), d8x2(a))

    def test_prime_family_example(self):
        a = prime_family_vector(1, (0, 0), 0)
        abg = alpha_beta_gamma(a)
        self.assertEqual(d8x2(a), 2 ** 11 * 5)
        self.assertEqual(abg.beta_norm, 2)
        self.assertEqual(abg.gamma_norm, 2)
        self.assertEqual(sorted((two_adic_valuation(abg.alphas[0]), two_adic_valuation(abg.alphas[2]))), [3, 4])
        self.assertEqual(abg.to_dict()['alphas'], [8, 10, 16, 2])


class TestValuation(unittest.TestCase):
    def test_values(self):
        self.assertEqual(two_adic_valuation(1), 0)
        self.assertEqual(two_adic_valuation(-2048), 11)
        self.assertEqual(two_adic_valuation(2 ** 10 * 3), 10)
        with self.assertRaises(ValueError):
            two_adic_valuation(0)


if __name__ == '__main__':
    unittest.main()
