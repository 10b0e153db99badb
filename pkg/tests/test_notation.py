import unittest
from coxsph.coxeter import CartanType, InvalidCartanTypeError, buildSystem
from coxsph.words import InvalidLetterError, evaluate
from coxsph.typea import PermutationError
from coxsph.polyring import SplitSet, keyPolynomial, splitExpand, schur
from coxsph.notation import ParserNotation
from coxsph.notation import NotationError
from coxsph.notation import parseCartanType
from coxsph.notation import parseWord
from coxsph.notation import parsePermutation
from coxsph.notation import parseComposition
from coxsph.notation import parseNodeSet
from coxsph.notation import parseElement
from coxsph.notation import formatWord
from coxsph.notation import formatPermutation
from coxsph.notation import formatComposition
from coxsph.notation import formatNodeSet
from coxsph.notation import formatPolynomial
from coxsph.notation import formatExpansion
from coxsph.notation import formatElement

class TestParserNotation(unittest.TestCase):

    def test_invalidArguments(self):
        func = lambda: ParserNotation(grammarPath='foo')
        self.assertRaises(Exception, func)

        func = lambda: ParserNotation(root='sequence_faile')
        self.assertRaises(Exception, func)

    def test_parseSequence(self):
        parser = ParserNotation()
        parse = parser.parse('s2 s1')
        self.assertEqual(parse.rule_name, 'sequence')
        tokens = next(child for child in parse if child.rule_name == 'tokens')
        self.assertEqual(tokens.rule_name, 'tokens')
        self.assertEqual(len(tokens), 2)
        self.assertEqual(tokens[0].value, 's2')
        self.assertEqual(tokens[1].value, ' s1')

    def test_parseBracketed(self):
        parser = ParserNotation()
        parse = parser.parse('(1,5)')
        self.assertIn('bracketed', [child.rule_name for child in parse])

    def test_parseCartan(self):
        parser = ParserNotation(root='cartan')
        parse = parser.parse('I2(5)')
        self.assertEqual(parse.rule_name, 'cartan')

    def test_noMatch(self):
        parser = ParserNotation()
        self.assertRaises(NotationError, lambda: parser.parse('2 x 3'))
        parser = ParserNotation(root='cartan')
        self.assertRaises(NotationError, lambda: parser.parse('e8'))

class TestParsing(unittest.TestCase):

    def test_cartanTypes(self):
        self.assertEqual(parseCartanType('A4'), CartanType('A', 4))
        self.assertEqual(parseCartanType('E8'), CartanType('E8'))
        self.assertEqual(parseCartanType('I2(5)'), CartanType('I2', gonality=5))
        self.assertEqual(parseCartanType('I2( 3 )'), CartanType('A', 2))
        self.assertEqual(parseCartanType('D12').rank, 12)
        self.assertRaises(InvalidCartanTypeError, lambda: parseCartanType('H3'))
        self.assertRaises(NotationError, lambda: parseCartanType('B'))
        self.assertRaises(NotationError, lambda: parseCartanType(3))

    def test_words(self):
        expected = (2, 3, 4, 2)
        for text in ['s2 s3 s4 s2', '2 3 4 2', '2,3,4,2', '2342', ' s2s3s4s2 ', '[2, 3, 4, 2]']:
            self.assertEqual(parseWord(text), expected, text)
        self.assertEqual(parseWord(''), ())
        self.assertEqual(parseWord('10 2'), (10, 2))
        self.assertRaises(NotationError, lambda: parseWord('s2 3'))
        self.assertRaises(InvalidLetterError, lambda: parseWord('5', buildSystem('A3')))

    def test_permutations(self):
        self.assertEqual(parsePermutation('24531'), (2, 4, 5, 3, 1))
        self.assertEqual(parsePermutation('2 4 5 3 1'), (2, 4, 5, 3, 1))
        self.assertEqual(parsePermutation('(10,1,2,3,4,5,6,7,8,9)')[0], 10)
        self.assertRaises(PermutationError, lambda: parsePermutation('2453'))
        self.assertRaises(NotationError, lambda: parsePermutation('s2 s1'))

    def test_compositionsAndNodeSets(self):
        self.assertEqual(parseComposition('(1,5,2,4,3)'), (1, 5, 2, 4, 3))
        self.assertEqual(parseComposition('0 0 0 2 1 0'), (0, 0, 0, 2, 1, 0))
        self.assertEqual(parseNodeSet('{1,2,4}'), frozenset({1, 2, 4}))
        self.assertEqual(parseNodeSet('2,3,4,5,7,8'), frozenset({2, 3, 4, 5, 7, 8}))
        self.assertEqual(parseNodeSet(''), frozenset())
        self.assertEqual(parseNodeSet('{}'), frozenset())

    def test_elements(self):
        A4 = buildSystem('A4')
        w = parseElement(A4, '24531')
        self.assertEqual(A4.oneLine(w), (2, 4, 5, 3, 1))
        self.assertEqual(parseElement(A4, 's3 s1 s2 s3 s4 s3'), w)
        self.assertEqual(parseElement(A4, '312343'), w)
        E8 = buildSystem('E8')
        word = (2, 3, 4, 2, 3, 4, 5, 4, 2, 3, 1, 4, 5, 7, 8, 7, 6, 7, 8)
        self.assertEqual(parseElement(E8, ' '.join(map(str, word))), evaluate(E8, word))

class TestFormatting(unittest.TestCase):

    def test_sequences(self):
        self.assertEqual(formatWord((2, 1, 3)), 's2 s1 s3')
        self.assertEqual(formatWord(()), '')
        self.assertEqual(formatPermutation((2, 4, 5, 3, 1)), '24531')
        self.assertEqual(formatPermutation(tuple(range(10, 0, -1))), '10,9,8,7,6,5,4,3,2,1')
        self.assertEqual(formatComposition((0, 2)), '(0,2)')
        self.assertEqual(formatNodeSet({4, 1, 2}), '{1,2,4}')
        self.assertEqual(formatNodeSet(()), '{}')

    def test_polynomials(self):
        self.assertEqual(formatPolynomial(keyPolynomial((0, 2))), 'x1^2 + x1 x2 + x2^2')

    def test_expansion(self):
        f = schur((2, 1), 3) + 2 * schur((3,), 3)
        text = formatExpansion(splitExpand(f, SplitSet(3)))
        self.assertEqual(text, '2 * s[(3)] + s[(2,1)]')
        g = keyPolynomial((1, 2, 0, 1)) + keyPolynomial((2, 2, 0, 0))
        text = formatExpansion(splitExpand(g, SplitSet(4, (2,))))
        self.assertEqual(text, 's[(2,2),()] + s[(2,1),(1)]')

    def test_elements(self):
        A4 = buildSystem('A4')
        self.assertEqual(formatElement(A4, A4.fromOneLine((2, 4, 5, 3, 1))), '24531')
        B3 = buildSystem('B3')
        self.assertEqual(formatElement(B3, evaluate(B3, (3, 2))), 's3 s2')
        self.assertEqual(formatElement(B3, B3.identity()), '')

if __name__ == '__main__':
    unittest.main()
