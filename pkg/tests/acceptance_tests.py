#!/usr/bin/env python
# Exhaustive checks over every box up to the sizes named in each test.
# Slow: run on their own, e.g. python tests/acceptance_tests.py -v

import itertools
import os
import random
import sys
import unittest
parentDir = os.path.join(os.path.dirname(__file__), "../")
sys.path.insert(0, parentDir)

from fractions import Fraction

from hypothesis import given, settings, strategies as st
from sympy import Poly, QQ

from qhalpha import QuantumRing, RingParams
from qhalpha import deform, exhibits, schur_oracle, seidel
from qhalpha.partitions import BoxBound, EMPTY, partitions_in_box, add_vertical_strips
from qhalpha.QuantumRing import is_single_term, rescale


def boxes(max_n):
    return [BoxBound(m, n - m) for n in range(2, max_n + 1) for m in range(1, n)]


class OracleEquivalenceTest(unittest.TestCase):
    def test_pieri_matches_normal_form(self):
        for box in boxes(7):
            cap = max(3 * box.n, 2 * box.m * box.k)
            for alpha in (0, 1, Fraction(7, 3)):
                params = RingParams(box.m, box.k, alpha)
                ring = QuantumRing.from_params(params)
                for lam, mu in itertools.combinations_with_replacement(ring.partitions(), 2):
                    self.assertEqual(ring.multiply(ring.sigma(lam), ring.sigma(mu)),
                                     schur_oracle.product_normal_form(lam, mu, params, cap),
                                     '{} * {} in {}'.format(lam, mu, params))


class StructureTheoremsTest(unittest.TestCase):
    def test_giambelli(self):
        for box in boxes(7):
            ring = QuantumRing(box.m, box.k, 1)
            for lam in ring.partitions():
                self.assertTrue(ring.giambelli_check(lam))

    def test_seidel_laws(self):
        for box in boxes(9):
            for lam in partitions_in_box(box):
                self.assertEqual(seidel.shift(lam, box.n, box), lam)
                self.assertEqual(2 * seidel.orbit(lam, box).weight_sum, box.k * box.m * box.n)

    def test_commutativity_and_associativity(self):
        rng = random.Random(20)
        for box in boxes(7):
            ring = QuantumRing(box.m, box.k, 1)
            parts = ring.partitions()
            for lam, mu in itertools.combinations(parts, 2):
                self.assertEqual(ring.multiply(ring.sigma(lam), ring.sigma(mu)),
                                 ring.multiply(ring.sigma(mu), ring.sigma(lam)))
            if box.n > 6:
                continue
            for _ in range(200):
                x, y, z = [ring.sigma(rng.choice(parts)) for _ in range(3)]
                self.assertEqual(ring.multiply(ring.multiply(x, y), z),
                                 ring.multiply(x, ring.multiply(y, z)))


class PositivityTest(unittest.TestCase):
    def test_nonnegative_alpha(self):
        for box in boxes(7):
            for alpha in (0, 1, Fraction(5, 2)):
                ring = QuantumRing(box.m, box.k, alpha)
                self.assertIsNone(ring.positivity_witness(), str(ring.params))

    def test_negative_alpha(self):
        for box in boxes(7):
            ring = QuantumRing(box.m, box.k, -1)
            self.assertEqual(ring.multiply(ring.sigma((1,) * box.m), ring.sigma((box.k,))),
                             ring.sigma(EMPTY, d=1, coeff=-1))
            self.assertIsNotNone(ring.positivity_witness())

    def test_rescaling(self):
        for box in boxes(6):
            ring1, ring3 = QuantumRing(box.m, box.k, 1), QuantumRing(box.m, box.k, 3)
            for lam, mu in itertools.product(ring1.partitions(), repeat=2):
                self.assertEqual(rescale(ring1.multiply(ring1.sigma(lam), ring1.sigma(mu)), 3),
                                 ring3.multiply(ring3.sigma(lam), ring3.sigma(mu)))


class CertificateTest(unittest.TestCase):
    def test_positive_branch(self):
        for box in boxes(8):
            params = RingParams(box.m, box.k, 1)
            report = deform.certify_positive_branch(params, jobs=4)
            self.assertTrue(report.verified, str(params))
            self.assertEqual([(r.lam, r.mu) for r in report.records],
                             deform.admissible_pairs(params))

    def test_classical_branch(self):
        for box in boxes(7):
            report = deform.certify_classical_branch(RingParams(box.m, box.k, 0), jobs=4)
            self.assertTrue(report.verified, str(report.failures()[:3]))

    def test_deformation_instance(self):
        params = RingParams(2, 2, 1)
        for t in (Fraction(1, 4), 1, 3):
            report = deform.check_nonnegative(deform.DeformationCoeffs(params, {((2, 2), ()): t}))
            self.assertIn(((1, 1), (1, 1), (), 1, -t), report.violations)
            # tau_1 tau_21 = tau_22 + (1 - t) q, which comes first in canonical order
            first = ((1,), (2, 1), (), 1, 1 - t) if t > 1 else ((1, 1), (1, 1), (), 1, -t)
            self.assertEqual(report.violations[0], first)
        for t in (Fraction(-1, 4), -1, -3):
            report = deform.check_nonnegative(deform.DeformationCoeffs(params, {((2, 2), ()): t}))
            self.assertIn(((2, 2), (2, 2), (2, 2), 1, 2 * t), report.violations)


class SeidelIdentitiesTest(unittest.TestCase):
    def test_shift_by_chern_and_special_classes(self):
        for box in boxes(7):
            for alpha in (1, Fraction(5, 2), Fraction(1, 3)):
                ring = QuantumRing(box.m, box.k, alpha)
                for lam in ring.partitions():
                    c = ring.pieri_chern(box.m, lam)
                    self.assertIsNotNone(is_single_term(c), '{} in {}'.format(lam, ring.params))
                    d = seidel.shift_exponent(lam, 1, box)
                    self.assertEqual(c, ring.sigma(seidel.shift(lam, 1, box), d=d,
                                                   coeff=alpha ** d))
                    t = ring.pieri_special(box.k, lam)
                    self.assertIsNotNone(is_single_term(t), '{} in {}'.format(lam, ring.params))
                    down = seidel.shift(lam, -1, box)
                    e = (box.k + lam.weight - down.weight) // box.n
                    self.assertEqual(t, ring.sigma(down, d=e, coeff=alpha ** e))

    def test_separating_shift(self):
        for box in boxes(8):
            parts = partitions_in_box(box)
            for lam, mu in itertools.product(parts, repeat=2):
                if lam.weight <= mu.weight:
                    continue
                found = seidel.find_separating_shift(lam, mu, box)
                self.assertTrue(0 < found.p < box.n)
                self.assertLess(found.lambda_weight, found.mu_weight)


class SymmetricFunctionTest(unittest.TestCase):
    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                    min_size=10, max_size=10))
    def test_vertical_strip_rule(self, values):
        h = schur_oracle.RationalSequence(values)
        e = schur_oracle.dual_sequence(h, 10)
        for lam in partitions_in_box(BoxBound(6, 6)):
            if lam.weight > 6:
                continue
            for p in range(1, 5):
                strips = add_vertical_strips(lam, p, lam.length + p)
                self.assertEqual(e[p] * schur_oracle.delta(lam, h),
                                 sum((schur_oracle.delta(mu, h) for mu in strips), Fraction(0)))

    def test_q_multiplication_shifts_normal_forms(self):
        for box in boxes(6):
            for alpha in (0, 1):
                params = RingParams(box.m, box.k, alpha)
                gens = schur_oracle.generators(params)
                q = Poly(gens[-1], *gens, domain=QQ)
                for degree in range(2 * params.n + 1):
                    for monom in schur_oracle.monomials(params, degree):
                        f = schur_oracle.make_poly({monom: 1}, params)
                        reduced = schur_oracle.normal_form(f, params)
                        self.assertEqual(schur_oracle.normal_form(q * f, params),
                                         reduced.q_shift(1), '{} in {}'.format(monom, params))


class ExhibitsTest(unittest.TestCase):
    def test_lg24(self):
        self.assertEqual(exhibits.lg24_region_check(), [])
        rng = random.Random(24)
        for _ in range(50):
            a = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            b = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            self.assertTrue(exhibits.lg24_associativity(a, b))
        self.assertEqual(exhibits.lg24_table(1, 1)[(3, 3)], {(2, 0): 1})

    def test_flag_orbits(self):
        self.assertEqual(exhibits.flag_orbit_length_sum((1, 2, 3, 4, 5, 6), 6), 35)
        self.assertEqual(exhibits.flag_orbit_length_sum((3, 2, 1, 6, 5, 4), 6), 55)


if __name__ == '__main__':
    unittest.main()
