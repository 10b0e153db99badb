import os
import unittest
from itertools import combinations

import numpy as np

from coxsph import typea
from coxsph.examples import load
from coxsph.polyring import Poly
from coxsph.polyring import SplitSet
from coxsph.polyring import SplitExpansion
from coxsph.polyring import PolynomialError
from coxsph.polyring import NotSplitSymmetricError
from coxsph.polyring import TooManyPartsError
from coxsph.polyring import demazurePi
from coxsph.polyring import keyPolynomial
from coxsph.polyring import keyViaKohnert
from coxsph.polyring import keyExpand
from coxsph.polyring import schur
from coxsph.polyring import dSchur
from coxsph.polyring import isSplitSymmetric
from coxsph.polyring import splitExpand
from coxsph.polyring import splitExpandOracle
from coxsph.polyring import isDMultiplicityFree
from coxsph.polyring import partitionsFitting
from coxsph.polyring import staircaseTest
from coxsph.polyring import DescentQueryError

SLOW = bool(os.environ.get('COXSPH_SLOW'))

class TestPoly(unittest.TestCase):

    def test_arithmetic(self):
        x1, x2 = Poly.variable(1, 2), Poly.variable(2, 2)
        f = (x1 + x2) * (x1 + x2)
        self.assertEqual(f.coefficient((1, 1)), 2)
        self.assertEqual(len(f), 3)
        self.assertEqual(str(f), 'x1^2 + 2 * x1 x2 + x2^2')
        self.assertEqual(str(x1 - 3 * x2), 'x1 - 3 * x2')
        self.assertEqual(str(-x1), '-x1')
        self.assertEqual(str(Poly.zero(2)), '0')
        self.assertFalse(f - f)
        self.assertEqual(f.degree(), 2)
        self.assertEqual(Poly.one(2) * f, f)
        self.assertEqual(hash(f), hash((x1 + x2) * (x2 + x1)))

    def test_leadingExponents(self):
        f = Poly(3, {(2, 0, 0): 1, (0, 1, 1): 4, (0, 0, 2): -1})
        self.assertEqual(f.leadingExponent(), (2, 0, 0))
        self.assertEqual(f.revlexLeadingExponent(), (0, 0, 2))
        self.assertRaises(PolynomialError, lambda: Poly.zero(3).leadingExponent())

    def test_variables(self):
        f = Poly.monomial((2, 1, 0))
        self.assertEqual(f.swapVariables(2), Poly.monomial((2, 0, 1)))
        self.assertEqual(f.extend(4), Poly.monomial((2, 1, 0, 0)))
        self.assertRaises(PolynomialError, lambda: f.swapVariables(3))
        self.assertRaises(PolynomialError, lambda: f.extend(2))
        self.assertRaises(PolynomialError, lambda: f + Poly.one(2))

class TestKeyPolynomials(unittest.TestCase):

    def test_demazure(self):
        self.assertEqual(str(demazurePi(1, Poly.monomial((2, 0)))), 'x1^2 + x1 x2 + x2^2')
        self.assertEqual(demazurePi(1, Poly.monomial((1, 1))), Poly.monomial((1, 1)))
        self.assertEqual(demazurePi(1, Poly.monomial((0, 1))), Poly.zero(2))
        self.assertEqual(demazurePi(1, Poly.monomial((0, 2))), -Poly.monomial((1, 1)))

    def test_keys(self):
        self.assertEqual(str(keyPolynomial((0, 2))), 'x1^2 + x1 x2 + x2^2')
        self.assertEqual(keyPolynomial((2, 1, 0)), Poly.monomial((2, 1, 0)))
        self.assertEqual(keyPolynomial((0, 0, 1)),
                         Poly.variable(1, 3) + Poly.variable(2, 3) + Poly.variable(3, 3))
        self.assertRaises(PolynomialError, lambda: keyPolynomial((1, -1)))

    def test_kohnert(self):
        for alpha in typea.compositions(3, 2):
            self.assertEqual(keyViaKohnert(alpha), keyPolynomial(alpha), alpha)
        self.assertEqual(keyViaKohnert((1, 0, 2, 1)), keyPolynomial((1, 0, 2, 1)))

    def test_keyExpand(self):
        g = keyPolynomial((1, 2, 0, 1)) + keyPolynomial((2, 2, 0, 0))
        self.assertEqual(keyExpand(g), {(1, 2, 0, 1): 1, (2, 2, 0, 0): 1})
        product = keyPolynomial((0, 1)) * keyPolynomial((0, 1))
        self.assertEqual(keyExpand(product), {(0, 2): 1, (1, 1): 1})

class TestKeyProperties(unittest.TestCase):

    def randomPolynomial(self, rng, n, degree=6, terms=6):
        poly = {}
        while len(poly) < terms:
            exponent = tuple(int(a) for a in rng.integers(0, degree + 1, size=n))
            if sum(exponent) <= degree:
                poly[exponent] = int(rng.integers(1, 6)) * (1 if rng.random() < 0.5 else -1)
        return Poly(n, poly)

    def test_demazureIdempotent(self):
        rng = np.random.default_rng(11)
        for n in [2, 3, 4, 5]:
            for _ in range(6):
                f = self.randomPolynomial(rng, n)
                for j in range(1, n):
                    once = demazurePi(j, f)
                    self.assertEqual(demazurePi(j, once), once, (n, j))

    def test_kohnertAgrees(self):
        for alpha in typea.compositions(4, 2):
            self.assertEqual(keyViaKohnert(alpha), keyPolynomial(alpha), alpha)

    @unittest.skipUnless(SLOW, 'set COXSPH_SLOW to run')
    def test_kohnertAgreesFiveParts(self):
        for alpha in typea.compositions(5, 8):
            if sum(alpha) <= 8:
                self.assertEqual(keyViaKohnert(alpha), keyPolynomial(alpha), alpha)

    def test_factorization(self):
        for alpha in typea.compositions(3, 2):
            key = keyPolynomial(alpha)
            for r in [1, 2, 3]:
                lifted = tuple(part + r for part in alpha)
                self.assertEqual(keyPolynomial(lifted), Poly.monomial((r,) * 3) * key, (alpha, r))

    def test_keyExpandRandomSums(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            expected = {}
            for _ in range(3):
                alpha = tuple(int(part) for part in rng.integers(0, 3, size=4))
                expected[alpha] = expected.get(alpha, 0) + int(rng.integers(1, 4))
            g = Poly.zero(4)
            for alpha, c in expected.items():
                g = g + c * keyPolynomial(alpha)
            self.assertEqual(keyExpand(g), expected)

class TestSplitProperties(unittest.TestCase):

    def splitsContaining(self, alpha):
        n = len(alpha)
        descents = typea.compositionDescents(alpha)
        for k in range(n):
            for D in combinations(range(1, n), k):
                if descents <= set(D):
                    yield SplitSet(n, D)

    def assertKMTheorem(self, n, maxPart):
        for alpha in typea.compositions(n, maxPart):
            self.assertEqual(isDMultiplicityFree(keyPolynomial(alpha), SplitSet.full(n)),
                             typea.avoidsKM(alpha), alpha)

    def test_multiplicityFreeKeys(self):
        self.assertKMTheorem(3, 4)
        self.assertKMTheorem(4, 3)

    @unittest.skipUnless(SLOW, 'set COXSPH_SLOW to run')
    def test_multiplicityFreeKeysFiveParts(self):
        self.assertKMTheorem(5, 4)

    def test_sufficientConditions(self):
        for alpha in typea.compositions(4, 3):
            if not typea.avoidsKM(alpha):
                continue
            distinct = len(set(alpha)) == len(alpha)
            if not distinct and typea.containsCompPattern(alpha, (0, 0, 1, 1)):
                continue
            split = SplitSet(4, tuple(typea.compositionDescents(alpha)))
            self.assertTrue(isDMultiplicityFree(keyPolynomial(alpha), split), alpha)

    def test_nonnegative(self):
        for perm in typea.permutations(4):
            for lam in [(4, 3, 2, 1), (2, 1, 1, 0), (3, 3, 1, 0)]:
                alpha = typea.wActOnPartition(perm, lam)
                key = keyPolynomial(alpha)
                for split in self.splitsContaining(alpha):
                    for _, c in splitExpand(key, split).items():
                        self.assertGreater(c, 0, (alpha, split.D))

    def test_schurSplitting(self):
        for total in range(1, 6):
            for mu in partitionsFitting(total, 4):
                f = schur(mu, 4)
                for a in [1, 2, 3]:
                    expansion = splitExpand(f, SplitSet(4, (a,)))
                    self.assertTrue(all(c > 0 for _, c in expansion.items()), (mu, a))
                    self.assertEqual(expansion.reconstruct(), f)

    def test_peelingAgreesWithLinearSolve(self):
        rng = np.random.default_rng(3)
        for _ in range(15):
            alpha = tuple(int(part) for part in rng.integers(0, 3, size=4))
            splits = list(self.splitsContaining(alpha))
            split = splits[int(rng.integers(0, len(splits)))]
            f = keyPolynomial(alpha)
            self.assertEqual(splitExpandOracle(f, split), splitExpand(f, split), (alpha, split.D))

class TestSchur(unittest.TestCase):

    def test_schur(self):
        s21 = schur((2, 1), 3)
        self.assertEqual(s21.coefficient((1, 1, 1)), 2)
        self.assertEqual(s21.coefficient((2, 1, 0)), 1)
        self.assertEqual(len(s21), 7)
        self.assertEqual(schur((2, 1, 0, 0), 3), s21)
        self.assertEqual(schur((), 2), Poly.one(2))
        self.assertEqual(schur((1,), 3), keyPolynomial((0, 0, 1)))
        self.assertRaises(TooManyPartsError, lambda: schur((1, 1, 1), 2))
        self.assertRaises(PolynomialError, lambda: schur((1, 2), 2))

    def test_schurIsKeyOfReversedPartition(self):
        self.assertEqual(schur((2, 1), 3), keyPolynomial((0, 1, 2)))
        self.assertEqual(schur((3, 1), 2), keyPolynomial((1, 3)))

    def test_partitionsFitting(self):
        self.assertEqual(list(partitionsFitting(3, 2)), [(3, 0), (2, 1)])
        self.assertEqual(list(partitionsFitting(0, 2)), [(0, 0)])
        self.assertEqual(len(list(partitionsFitting(4, 4))), 5)

class TestSplitExpansions(unittest.TestCase):

    def test_splitSet(self):
        split = SplitSet(5, (4, 2, 2))
        self.assertEqual(split.D, (2, 4))
        self.assertEqual(split.blocks, [(0, 2), (2, 4), (4, 5)])
        self.assertEqual(split.blockSizes, (2, 2, 1))
        self.assertEqual(SplitSet.full(3).D, (1, 2))
        self.assertRaises(PolynomialError, lambda: SplitSet(3, (3,)))
        self.assertRaises(PolynomialError, lambda: SplitSet(0))

    def test_dSchur(self):
        split = SplitSet(4, (2,))
        f = dSchur(((1,), (1,)), split)
        self.assertEqual(f, (Poly.variable(1, 4) + Poly.variable(2, 4)) *
                            (Poly.variable(3, 4) + Poly.variable(4, 4)))
        self.assertRaises(PolynomialError, lambda: dSchur(((1,),), split))

    def test_splitSymmetric(self):
        split = SplitSet(4, (2,))
        self.assertTrue(isSplitSymmetric(keyPolynomial((1, 2, 0, 1)), split))
        self.assertFalse(isSplitSymmetric(keyPolynomial((2, 1, 0, 1)), split))
        self.assertRaises(NotSplitSymmetricError,
                          lambda: splitExpand(keyPolynomial((2, 1, 0, 1)), split))

    def test_sumOfKeys(self):
        g = keyPolynomial((1, 2, 0, 1)) + keyPolynomial((2, 2, 0, 0))
        split = SplitSet(4, (2,))
        expansion = splitExpand(g, split)
        self.assertEqual(expansion.coefficients, {((2, 1), (1, 0)): 1, ((2, 2), (0, 0)): 1})
        self.assertEqual(expansion[(2, 1), (1,)], 1)
        self.assertEqual(expansion[(1, 1), (1, 1)], 0)
        self.assertTrue(expansion.isMultiplicityFree())
        self.assertEqual(expansion.reconstruct(), g)
        self.assertEqual(splitExpandOracle(g, split), expansion)

    def test_fullSplitGivesMonomials(self):
        f = keyPolynomial((0, 0, 1, 1))
        expansion = splitExpand(f, SplitSet.full(4))
        self.assertEqual(len(expansion), len(f))
        self.assertTrue(expansion.isMultiplicityFree())

    def test_emptySplitGivesSchur(self):
        f = schur((2, 1), 3) + 3 * schur((3,), 3)
        expansion = splitExpand(f, SplitSet(3))
        self.assertEqual(expansion.coefficients, {((2, 1, 0),): 1, ((3, 0, 0),): 3})
        self.assertFalse(expansion.isMultiplicityFree())

    def test_knownExpansions(self):
        data = load('keyExpansions')
        for example in data['expansions']:
            alpha = tuple(example['alpha'])
            split = SplitSet(len(alpha), tuple(example['D']))
            expansion = splitExpand(keyPolynomial(alpha), split)
            if 'terms' in example:
                self.assertEqual(len(expansion), example['terms'], alpha)
            for term in example.get('coefficients', []):
                lambdas = tuple(tuple(lam) for lam in term['lambdas'])
                self.assertEqual(expansion[lambdas], term['coeff'], (alpha, lambdas))
            self.assertEqual(expansion.isMultiplicityFree(), example['multiplicityFree'], alpha)
            self.assertEqual(expansion.reconstruct(), keyPolynomial(alpha))

    def test_linearSolve(self):
        for alpha, D in [((1, 5, 2, 4, 3), (2, 4)), ((0, 0, 0, 2, 1, 0), (1, 2, 4, 5)),
                         ((0, 2, 1), (2,))]:
            split = SplitSet(len(alpha), D)
            f = keyPolynomial(alpha)
            self.assertEqual(splitExpandOracle(f, split), splitExpand(f, split), alpha)

    def test_scaling(self):
        # Prepending parts equal to 3 leaves the coefficient unchanged
        base = (0, 0, 0, 2, 1, 0)
        baseSplit = SplitSet(6, (1, 2, 4, 5))
        lam = ((1,), (1,), (1, 0), (0,), (0,))
        coefficient = splitExpand(keyPolynomial(base), baseSplit)[lam]
        self.assertEqual(coefficient, 2)
        for f in [1, 2]:
            alpha = (3,) * f + base
            D = tuple(range(1, f + 3)) + (f + 4, f + 5)
            expansion = splitExpand(keyPolynomial(alpha), SplitSet(6 + f, D))
            self.assertEqual(expansion[((3,),) * f + lam], coefficient, f)

    def test_serialization(self):
        split = SplitSet(5, (2, 4))
        expansion = splitExpand(keyPolynomial((1, 5, 2, 4, 3)), split)
        obj = expansion.toObject()
        self.assertEqual(obj['D'], [2, 4])
        self.assertEqual(obj['n'], 5)
        self.assertEqual(len(obj['terms']), 17)
        self.assertEqual(SplitExpansion.fromObject(obj), expansion)
        self.assertEqual(SplitExpansion(split, {((2, 0), (0, 0), (0,)): 0}).coefficients, {})

class TestStaircase(unittest.TestCase):

    def test_staircase(self):
        self.assertFalse(staircaseTest((2, 4, 5, 3, 1), {1, 3}))
        self.assertTrue(staircaseTest((3, 4, 2, 1), {1, 2}))
        self.assertRaises(DescentQueryError, lambda: staircaseTest((2, 4, 5, 3, 1), {2}))
        self.assertTrue(issubclass(DescentQueryError, PolynomialError))

    def test_multiplicityFree(self):
        self.assertFalse(isDMultiplicityFree(keyPolynomial((1, 5, 2, 4, 3)), SplitSet(5, (2, 4))))
        self.assertTrue(isDMultiplicityFree(keyPolynomial((2, 2, 0, 0)), SplitSet(4, (2,))))

if __name__ == '__main__':
    unittest.main()
