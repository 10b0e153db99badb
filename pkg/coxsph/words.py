# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         words.py
# Purpose:      words in the simple reflections and Bruhat order
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
Words are plain tuples of node labels, read left to right as products of
simple reflections:

>>> from coxsph.coxeter import buildSystem
>>> A4 = buildSystem('A4')
>>> A4.oneLine(evaluate(A4, (3, 1, 2, 3, 4, 3)))
(2, 4, 5, 3, 1)
>>> reducedWordCount(A4, A4.fromOneLine((4, 3, 2, 1, 5)))
16
"""
import logging
from itertools import combinations
from typing import Iterator, Optional, Sequence, Tuple

from .coxeter import CoxeterSystem, Element

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]

class WordError(Exception):
    pass

class InvalidLetterError(WordError):
    """Raised when a letter is not a node of the system"""
    pass

class NotReducedError(WordError):
    """Raised when a reduced word was required"""
    pass

def checkLetters(system: CoxeterSystem, word: Sequence[int]) -> Word:
    letters = tuple(word)
    for letter in letters:
        if isinstance(letter, bool) or not isinstance(letter, int) \
                or not 1 <= letter <= system.rank:
            raise InvalidLetterError(
                f'Letter {letter!r} is not a node of {system.cartanType} (1..{system.rank})')
    return letters

def evaluate(system: CoxeterSystem, word: Sequence[int]) -> Element:
    """The product s_{i1} s_{i2} ... s_{ik}"""
    w = system.identity()
    for letter in checkLetters(system, word):
        w = system.rightMultiply(w, letter)
    return w

def isReduced(system: CoxeterSystem, word: Sequence[int]) -> bool:
    w = system.identity()
    for letter in checkLetters(system, word):
        x = system.rightMultiply(w, letter)
        if x.length < w.length:
            return False
        w = x
    return True

def reducedWords(system: CoxeterSystem, w: Element) -> Iterator[Word]:
    """Iterate over Red(w) in lexicographic order.

    The first letter of a reduced word is a left descent, so Red(w) is the
    union over j in J(w) of ``j`` followed by Red(s_j w). Taking j in
    increasing order yields the words lexicographically. Descents and
    quotients are memoized per element for the duration of one traversal.
    """
    steps = {}

    def branches(x):
        if x not in steps:
            steps[x] = [(j, system.leftMultiply(j, x))
                        for j in sorted(system.leftDescents(x))]
        return steps[x]

    def walk(x):
        if x.length == 0:
            yield ()
            return
        for j, rest in branches(x):
            for tail in walk(rest):
                yield (j,) + tail

    system.length(w)
    return walk(w)

def reducedWordCount(system: CoxeterSystem, w: Element) -> int:
    """#Red(w), without materializing any word"""
    counts = {}
    system.length(w)

    def count(x):
        if x.length == 0:
            return 1
        if x not in counts:
            counts[x] = sum(count(system.rightMultiply(x, i))
                            for i in system.rightDescents(x))
        return counts[x]

    return count(w)

def bruhatLeq(system: CoxeterSystem, u: Element, v: Element) -> bool:
    """Strong Bruhat order, by descent recursion.

    For a left descent s of v: if s is also a left descent of u then
    u <= v iff su <= sv, and otherwise u <= v iff u <= sv.
    """
    system.length(u)
    system.length(v)
    while True:
        if u.length > v.length:
            return False
        if u.length == 0:
            return True
        if u.length == v.length:
            return u == v
        j = min(system.leftDescents(v))
        if j in system.leftDescents(u):
            u = system.leftMultiply(j, u)
        v = system.leftMultiply(j, v)

def hasSubword(word: Sequence[int], sub: Sequence[int]) -> bool:
    """True if ``sub`` is a (not necessarily contiguous) subsequence of ``word``

    >>> hasSubword((1, 2, 3, 2), (1, 2, 2))
    True
    >>> hasSubword((1, 2, 3), (3, 1))
    False
    """
    letters = iter(word)
    return all(any(letter == x for x in letters) for letter in sub)

def subwordBruhatLeq(system: CoxeterSystem, u: Element, v: Element) -> bool:
    """Bruhat order through the subword property: u <= v iff a fixed reduced
    word of v has a subword that is a reduced word of u. Exponential; used
    as an oracle for :func:`bruhatLeq`."""
    word = next(reducedWords(system, v))
    for positions in combinations(range(len(word)), u.length):
        if evaluate(system, [word[p] for p in positions]) == u:
            return True
    return False

def distinctLetterWord(system: CoxeterSystem, w: Element) -> Optional[Word]:
    """A reduced word of w with pairwise distinct letters, or None.

    Every reduced word uses every letter of the support, so such a word
    exists exactly when l(w) equals the size of the support.
    """
    if system.length(w) != len(system.support(w)):
        return None
    return next(reducedWords(system, w))
