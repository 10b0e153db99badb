import re
from typing import FrozenSet, Sequence, Tuple

from arpeggio import PTNodeVisitor
from arpeggio import visit_parse_tree as visitParseTree

from ..coxeter import CartanType, CoxeterSystem, Element
from .. import typea
from ..words import checkLetters, evaluate, reducedWords
from .parser import ParserNotation, NotationError

class VisitorNotation(PTNodeVisitor):
    """Visitor class turning a notation parse tree into domain values.
    Sequences come out as lists of raw tokens such as ``'s2'`` or ``'24'``;
    the module functions below decide how to read them."""

    def visit_cartan(self, node, children):
        return next(child for child in children if isinstance(child, CartanType))

    def visit_cartan_type(self, node, children):
        return children[0]

    def visit_dihedral(self, node, children):
        return CartanType('I2', gonality=children.results['integer'][0])

    def visit_exceptional(self, node, children):
        return CartanType(node.value)

    def visit_classical(self, node, children):
        family = children.results['family'][0]
        rank = children.results['integer'][0]
        return CartanType(family, rank)

    def visit_family(self, node, children):
        return node.value

    def visit_integer(self, node, children):
        return int(node.value)

    def visit_sequence(self, node, children):
        return next((child for child in children if isinstance(child, list)), [])

    def visit_bracketed(self, node, children):
        return next((child for child in children if isinstance(child, list)), [])

    def visit_tokens(self, node, children):
        return list(children)

    def visit_token(self, node, children):
        return re.sub(r'[\s,]', '', node.value)

    def visit_opening(self, node, children):
        return None

    def visit_closing(self, node, children):
        return None

    def visit_ws(self, node, children):
        return None

_PARSERS = {}

def _parse(text: str, root: str):
    if not isinstance(text, str):
        raise NotationError(f'Expected a string, got {text!r}')
    if root not in _PARSERS:
        _PARSERS[root] = ParserNotation(root=root)
    parse = _PARSERS[root].parse(text)
    return visitParseTree(parse, VisitorNotation())

def _integers(text: str, allowPrefix: bool = False) -> Tuple[int, ...]:
    """Read a sequence. A single unseparated run of digits is read digit by
    digit, so multi-digit entries need separators."""
    tokens = _parse(text, 'sequence')
    prefixed = [token.startswith('s') for token in tokens]
    if any(prefixed) and not allowPrefix:
        raise NotationError(f'Unexpected letter prefix in {text!r}')
    if any(prefixed) and not all(prefixed):
        raise NotationError(f'Mixed prefixed and bare letters in {text!r}')
    if len(tokens) == 1 and not prefixed[0]:
        return tuple(int(digit) for digit in tokens[0])
    return tuple(int(token.lstrip('s')) for token in tokens)

def parseCartanType(text: str) -> CartanType:
    """Read a Cartan type

    >>> parseCartanType('I2(5)')
    CartanType(family='I2', rank=2, gonality=5)
    >>> str(parseCartanType(' B3 '))
    'B3'
    """
    return _parse(text, 'cartan')

def parseWord(text: str, system: CoxeterSystem = None) -> Tuple[int, ...]:
    """Read a word: ``s2 s3 s4``, ``2 3 4``, ``2,3,4`` or ``234``

    >>> parseWord('s2 s1 s3 s2')
    (2, 1, 3, 2)
    >>> parseWord('23123')
    (2, 3, 1, 2, 3)
    """
    word = _integers(text, allowPrefix=True)
    if system is not None:
        checkLetters(system, word)
    return word

def parsePermutation(text: str) -> Tuple[int, ...]:
    """Read a permutation in one-line notation

    >>> parsePermutation('24531')
    (2, 4, 5, 3, 1)
    >>> parsePermutation('10,1,2,3,4,5,6,7,8,9')[0]
    10
    """
    return typea.checkPermutation(_integers(text))

def parseComposition(text: str) -> Tuple[int, ...]:
    """Read a weak composition

    >>> parseComposition('(1,5,2,4,3)')
    (1, 5, 2, 4, 3)
    """
    return _integers(text)

def parseNodeSet(text: str) -> FrozenSet[int]:
    """Read a set of nodes; the empty string is the empty set

    >>> sorted(parseNodeSet('{1,2,4}'))
    [1, 2, 4]
    """
    return frozenset(_integers(text))

def parseElement(system: CoxeterSystem, text: str) -> Element:
    """Read an element, either as a word or, for type A_n, as a one-line
    permutation of 1..n+1. A digit run of length n+1 that is a permutation
    always contains the letter n+1, which is not a node, so the two
    readings never compete."""
    values = _integers(text, allowPrefix=True)
    isPrefixed = 's' in text
    if system.cartanType.family == 'A' and not isPrefixed \
            and sorted(values) == list(range(1, system.rank + 2)):
        return system.fromOneLine(values)
    return evaluate(system, values)

def formatWord(word: Sequence[int]) -> str:
    """
    >>> formatWord((2, 1, 3, 2))
    's2 s1 s3 s2'
    """
    return ' '.join(f's{letter}' for letter in word)

def formatPermutation(w: Sequence[int]) -> str:
    """One-line notation, without separators for at most nine entries

    >>> formatPermutation((2, 4, 5, 3, 1))
    '24531'
    """
    if len(w) <= 9:
        return ''.join(str(value) for value in w)
    return ','.join(str(value) for value in w)

def formatComposition(alpha: Sequence[int]) -> str:
    """
    >>> formatComposition((1, 5, 2, 4, 3))
    '(1,5,2,4,3)'
    """
    return '(' + ','.join(str(part) for part in alpha) + ')'

def formatNodeSet(nodes) -> str:
    return '{' + ','.join(str(node) for node in sorted(nodes)) + '}'

def formatPolynomial(f) -> str:
    return str(f)

def formatExpansion(expansion) -> str:
    """D-Schur expansion as a sum of s_{lambda^1, ..., lambda^k} terms"""
    terms = []
    for lambdas, coefficient in expansion.items():
        label = ','.join(formatComposition(tuple(p for p in lam if p > 0)) for lam in lambdas)
        terms.append(f's[{label}]' if coefficient == 1 else f'{coefficient} * s[{label}]')
    return ' + '.join(terms) if terms else '0'

def formatElement(system: CoxeterSystem, w: Element) -> str:
    """One-line notation in type A, a reduced word otherwise"""
    if system.cartanType.family == 'A':
        return formatPermutation(system.oneLine(w))
    return formatWord(next(reducedWords(system, w)))
