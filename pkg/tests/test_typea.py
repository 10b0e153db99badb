import unittest
from coxsph import typea
from coxsph.typea import PermutationError
from coxsph.typea import NotBigrassmannianError

class TestPermutations(unittest.TestCase):

    def test_codes(self):
        self.assertEqual(typea.code((3, 4, 1, 2)), (2, 2, 0, 0))
        self.assertEqual(typea.code((2, 4, 5, 3, 1)), (1, 2, 2, 1, 0))
        self.assertEqual(typea.permFromCode((2, 2, 0, 0)), (3, 4, 1, 2))
        self.assertEqual(typea.permFromCode((0, 0, 0, 2, 1)), (1, 2, 3, 6, 5, 4))
        self.assertEqual(typea.permFromCode(()), ())
        for perm in typea.permutations(4):
            self.assertEqual(typea.permFromCode(typea.code(perm)), perm)
        self.assertRaises(PermutationError, lambda: typea.permFromCode((1, -1)))

    def test_descents(self):
        w = (2, 4, 5, 3, 1)
        self.assertEqual(typea.descents(w), frozenset({3, 4}))
        self.assertEqual(typea.leftDescents(w), frozenset({1, 3}))
        self.assertEqual(typea.inversions(w), 6)
        self.assertEqual(typea.inversePermutation(w), (5, 1, 4, 2, 3))

    def test_words(self):
        self.assertEqual(typea.permutationFromWord((1, 2, 1, 3, 2)), (3, 4, 2, 1))
        self.assertEqual(typea.permutationFromWord((1,), 3), (2, 1, 3))
        self.assertTrue(typea.isReducedWord((1, 2, 1)))
        self.assertFalse(typea.isReducedWord((1, 2, 2)))
        self.assertRaises(PermutationError, lambda: typea.permutationFromWord((3,), 3))

    def test_canonicalWord(self):
        self.assertEqual(typea.canonicalWord((3, 4, 2, 1)), (2, 1, 3, 2, 3))
        for perm in typea.permutations(4):
            word = typea.canonicalWord(perm)
            self.assertEqual(len(word), typea.inversions(perm))
            self.assertEqual(typea.permutationFromWord(word, 4), perm)

    def test_rotheDiagram(self):
        w = (3, 4, 1, 2)
        self.assertEqual(typea.rotheDiagram(w), {(1, 1), (1, 2), (2, 1), (2, 2)})
        for perm in typea.permutations(4):
            self.assertEqual(len(typea.rotheDiagram(perm)), typea.inversions(perm))

    def test_patterns(self):
        self.assertTrue(typea.containsPermPattern((5, 3, 2, 4, 1), (3, 2, 1)))
        self.assertFalse(typea.containsPermPattern((1, 2, 3), (2, 1)))
        self.assertFalse(typea.isSmooth((3, 4, 1, 2)))
        self.assertTrue(typea.isSmooth((2, 1, 4, 3)))
        self.assertTrue(typea.isToricPattern((2, 1, 4, 3)))
        self.assertFalse(typea.isToricPattern((3, 2, 1)))
        self.assertEqual(typea.standardize((10, 3, 7)), (3, 1, 2))

    def test_dominant(self):
        self.assertTrue(typea.isDominant((3, 4, 1, 2)))
        self.assertFalse(typea.isDominant((1, 3, 2)))

    def test_bigrassmannian(self):
        w = (3, 4, 1, 2)
        self.assertTrue(typea.isBigrassmannian(w))
        self.assertEqual(typea.bigrassmannianShape(w), (2, 2))
        self.assertTrue(typea.bigrassmannianSpherical(w))
        w = typea.permFromCode((0, 3, 3, 0))
        self.assertTrue(typea.isBigrassmannian(w))
        self.assertEqual(typea.bigrassmannianShape(w), (2, 3))
        self.assertFalse(typea.bigrassmannianSpherical(w))
        self.assertRaises(NotBigrassmannianError, lambda: typea.bigrassmannianShape((3, 2, 1)))

    def test_actions(self):
        self.assertEqual(typea.wActOnPartition((2, 4, 5, 3, 1), (5, 4, 3, 2, 1)), (1, 5, 2, 4, 3))
        self.assertEqual(typea.staircase(4), (4, 3, 2, 1))
        self.assertEqual(typea.shiftPermutation((2, 1), 2), (1, 2, 4, 3))
        self.assertEqual(typea.shiftPermutation((2, 1), 1, n=5), (1, 3, 2, 4, 5))

class TestCompositions(unittest.TestCase):

    def test_compositionDescents(self):
        self.assertEqual(typea.compositionDescents((1, 5, 2, 4, 3)), frozenset({2, 4}))
        self.assertEqual(typea.compositionDescents((0, 0, 1, 1)), frozenset())
        self.assertTrue(typea.isPartition((3, 3, 1, 0)))

    def test_compositionPatterns(self):
        self.assertTrue(typea.containsCompPattern((3, 1, 4, 2, 2), (0, 1, 1)))
        self.assertFalse(typea.containsCompPattern((3, 1, 4, 2, 2), (0, 2, 2)))
        self.assertFalse(typea.avoidsKM((0, 1, 2)))
        self.assertTrue(typea.avoidsKM((2, 1, 0)))

    def test_upOne(self):
        self.assertEqual(typea.upOne((0, 2, 1), 2), (0, 3, 1))
        self.assertRaises(PermutationError, lambda: typea.upOne((0, 2, 1), 3))
        candidates = dict(typea.upOneCandidates((0, 2, 1), {2}))
        self.assertEqual(candidates, {2: (0, 3, 1)})

    def test_enumerations(self):
        self.assertEqual(list(typea.distinctPartitions(2, 2)), [(2, 1), (2, 0), (1, 0)])
        self.assertEqual(len(list(typea.compositions(3, 2))), 27)

if __name__ == '__main__':
    unittest.main()
