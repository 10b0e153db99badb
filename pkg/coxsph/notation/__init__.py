from .parser import *
from .converter import *

__all__ = [
    'NotationError',
    'IncompleteParseError',
    'EmptyParseError',
    'ParserNotation',
    'VisitorNotation',
    'parseCartanType',
    'parseWord',
    'parsePermutation',
    'parseComposition',
    'parseNodeSet',
    'parseElement',
    'formatWord',
    'formatPermutation',
    'formatComposition',
    'formatNodeSet',
    'formatPolynomial',
    'formatExpansion',
    'formatElement'
]
