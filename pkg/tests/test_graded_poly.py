"""
Tests for group-graded polynomials
"""
import os
import random
import sys
import unittest

import sympy

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from groupdet.core.cyclotomic import get_ring
from groupdet.core.errors import IntegralityError, MissingVariableError, RingMismatchError
from groupdet.core.graded_poly import GradedPoly, Monomial, grade_of
from groupdet.core.groups import make_group


def x(G, *coords):
    return GradedPoly.variable(G, tuple(coords))


class TestGrading(unittest.TestCase):
    def test_grade_of_monomial(self):
        G = make_group([4])
        # x_1^2 x_3 has grade 1 + 1 + 3 = 5 = 1 (mod 4)
        self.assertEqual(grade_of(G, (0, 2, 0, 1)), (1,))
        self.assertEqual(grade_of(G, (0, 0, 0, 0)), (0,))

    def test_monomial_product_adds_grades(self):
        G = make_group([4, 2])
        rng = random.Random(2)
        for _ in range(20):
            e1 = tuple(rng.randint(0, 2) for _ in range(G.size))
            e2 = tuple(rng.randint(0, 2) for _ in range(G.size))
            m = Monomial.from_exponents(G, e1) * Monomial.from_exponents(G, e2)
            self.assertEqual(m.grade, grade_of(G, m.exponents))
            self.assertEqual(m.degree, sum(e1) + sum(e2))


class TestArithmetic(unittest.TestCase):
    def setUp(self):
        self.G = make_group([4])

    def test_difference_of_squares(self):
        G = self.G
        a = x(G, 0) + x(G, 2)
        b = x(G, 1) + x(G, 3)
        self.assertEqual((a + b) * (a - b), a ** 2 - b ** 2)

    def test_zero_terms_are_dropped(self):
        G = self.G
        p = x(G, 1) - x(G, 1)
        self.assertTrue(p.is_zero())
        self.assertEqual(p, 0)
        self.assertEqual(len(x(G, 0) * 3 + 1), 2)

    def test_homogeneity(self):
        G = self.G
        p = (x(G, 0) + x(G, 1)) ** 3
        self.assertTrue(p.is_homogeneous(3))
        self.assertFalse((p + 1).is_homogeneous())
        self.assertEqual(p.degree(), 3)

    def test_components_partition_the_terms(self):
        G = make_group([4, 2])
        rng = random.Random(4)
        p = GradedPoly.linear(G, {g: rng.randint(-3, 3) for g in G.elements}) ** 2
        total = GradedPoly.zero(G)
        for h, part in p.components().items():
            self.assertEqual(part, p.graded_component(h))
            for monomial, _ in part.monomials():
                self.assertEqual(monomial.grade, h)
            total = total + part
        self.assertEqual(total, p)

    def test_substitute(self):
        G = self.G
        p = x(G, 0) ** 2 - 2 * x(G, 1) * x(G, 3)
        values = {(0,): 1, (1,): 2, (2,): 3, (3,): 4}
        self.assertEqual(p.substitute(values), 1 - 16)
        with self.assertRaises(MissingVariableError):
            p.substitute({(0,): 1})

    def test_cyclotomic_coefficients(self):
        G = self.G
        ring = get_ring(4)
        i = ring.root_of_unity(1)
        p = GradedPoly.linear(G, {g: i ** g[0] for g in G.elements}, ring)
        q = GradedPoly.linear(G, {g: (-i) ** g[0] for g in G.elements}, ring)
        product = (p * q).to_integer()
        self.assertTrue(product.is_homogeneous(2))
        self.assertEqual(product.substitute({(0,): 1, (1,): 0, (2,): 0, (3,): 0}), 1)
        with self.assertRaises(IntegralityError):
            p.to_integer()

    def test_ring_mismatch(self):
        G = self.G
        with self.assertRaises(RingMismatchError):
            GradedPoly.constant(G, 1, get_ring(4)) + GradedPoly.constant(G, 1)


class TestRendering(unittest.TestCase):
    def test_grlex_format(self):
        G = make_group([4])
        z0 = x(G, 0) ** 2 + x(G, 2) ** 2 - 2 * x(G, 1) * x(G, 3)
        self.assertEqual(z0.format(), "x_0^2 - 2*x_1*x_3 + x_2^2")
        self.assertEqual(str(GradedPoly.zero(G)), "0")
        self.assertEqual((-x(G, 3)).format("y"), "-y_3")

    def test_variable_names_follow_variable_index(self):
        G = make_group([8, 2])
        self.assertEqual(x(G, 1, 1).format(), "x_9")

    def test_to_sympy(self):
        G = make_group([4])
        p = (x(G, 0) + x(G, 2)) ** 2 - (x(G, 1) + x(G, 3)) ** 2
        x0, x1, x2, x3 = sympy.symbols("x_0 x_1 x_2 x_3")
        self.assertEqual(sympy.expand(p.to_sympy() - ((x0 + x2) ** 2 - (x1 + x3) ** 2)), 0)


if __name__ == '__main__':
    unittest.main()
