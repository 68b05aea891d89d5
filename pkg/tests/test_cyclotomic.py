"""
Tests for exact cyclotomic integer arithmetic
"""
import os
import random
import sys
import unittest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from groupdet.core.cyclotomic import Cyclo, CycloRing, cyclotomic_polynomial, get_ring
from groupdet.core.errors import RingMismatchError


class TestCyclotomicPolynomial(unittest.TestCase):
    def test_known_polynomials(self):
        self.assertEqual(cyclotomic_polynomial(1), (-1, 1))
        self.assertEqual(cyclotomic_polynomial(2), (1, 1))
        self.assertEqual(cyclotomic_polynomial(4), (1, 0, 1))
        self.assertEqual(cyclotomic_polynomial(6), (1, -1, 1))
        self.assertEqual(cyclotomic_polynomial(8), (1, 0, 0, 0, 1))
        self.assertEqual(cyclotomic_polynomial(12), (1, 0, -1, 0, 1))

    def test_degree_is_totient(self):
        from sympy import totient
        for n in range(1, 31):
            self.assertEqual(len(cyclotomic_polynomial(n)) - 1, totient(n))

    def test_rejects_zero(self):
        with self.assertRaises(ValueError):
            cyclotomic_polynomial(0)


class TestRing(unittest.TestCase):
    def test_zeta_has_order_n(self):
        for n in (1, 2, 3, 4, 5, 8, 12, 16):
            ring = get_ring(n)
            zeta = ring.root_of_unity(1)
            self.assertEqual(zeta ** n, 1)
            self.assertEqual(ring.root_of_unity(n + 3), ring.root_of_unity(3))

    def test_root_is_a_zero_of_phi(self):
        for n in (3, 8, 9, 12):
            ring = get_ring(n)
            self.assertTrue(ring.evaluate(ring.modulus, ring.root_of_unity(1)).is_zero())

    def test_sum_of_all_roots_vanishes(self):
        for n in (2, 4, 6, 8):
            ring = get_ring(n)
            self.assertTrue(ring.from_power_counts([1] * n).is_zero())

    def test_shared_instances(self):
        self.assertIs(get_ring(8), get_ring(8))
        self.assertEqual(CycloRing(8), get_ring(8))

    def test_invalid_order(self):
        with self.assertRaises(ValueError):
            CycloRing(0)


class TestArithmetic(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(7)
        self.ring = get_ring(8)

    def _random(self) -> Cyclo:
        return Cyclo(self.ring, [self.rng.randint(-5, 5) for _ in range(self.ring.degree)])

    def test_ring_axioms(self):
        for _ in range(50):
            a, b, c = self._random(), self._random(), self._random()
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * b, b * a)
            self.assertEqual(a - a, 0)

    def test_integer_coercion(self):
        a = self._random()
        self.assertEqual(a + 3, 3 + a)
        self.assertEqual(2 * a, a + a)
        self.assertEqual(5 - a, -(a - 5))
        self.assertEqual(self.ring.from_int(7), 7)
        self.assertEqual(hash(self.ring.from_int(7)), hash(7))

    def test_gaussian_norm(self):
        ring = get_ring(4)
        i = ring.root_of_unity(1)
        self.assertEqual(i * i, -1)
        self.assertEqual((1 + i).norm_squared(), 2)
        self.assertEqual((3 + 2 * i).norm_squared(), 13)

    def test_conjugate(self):
        zeta = self.ring.root_of_unity(1)
        self.assertEqual(zeta.conjugate(), self.ring.root_of_unity(7))
        for _ in range(20):
            a = self._random()
            self.assertEqual(a.conjugate().conjugate(), a)

    def test_as_integer(self):
        self.assertEqual(self.ring.from_int(-4).as_integer(), -4)
        self.assertIsNone(self.ring.root_of_unity(1).as_integer())

    def test_ring_mismatch(self):
        with self.assertRaises(RingMismatchError):
            get_ring(4).one() + get_ring(8).one()

    def test_negative_power_rejected(self):
        with self.assertRaises(ValueError):
            self.ring.one() ** -1


class TestRendering(unittest.TestCase):
    def test_str(self):
        ring = get_ring(8)
        self.assertEqual(str(ring.zero()), "0")
        self.assertEqual(str(ring.reduce([3, -2, 0, 1])), "3 - 2*z + z^3")
        self.assertEqual(str(ring.reduce([0, -1])), "-z")

    def test_parse_round_trip(self):
        rng = random.Random(19)
        for n in (4, 8, 12):
            ring = get_ring(n)
            for _ in range(25):
                a = Cyclo(ring, [rng.randint(-9, 9) for _ in range(ring.degree)])
                self.assertEqual(ring.parse(str(a)), a)

    def test_parse_reduces(self):
        ring = get_ring(4)
        self.assertEqual(ring.parse("z^2"), -1)
        self.assertEqual(ring.parse("1 + z^4"), 2)

    def test_parse_rejects_garbage(self):
        with self.assertRaises(ValueError):
            get_ring(4).parse("1 + y")
        with self.assertRaises(ValueError):
            get_ring(4).parse("")


if __name__ == '__main__':
    unittest.main()
