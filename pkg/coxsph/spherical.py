# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         spherical.py
# Purpose:      I-spherical elements, witnesses and censuses
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
Let w be an element and I a subset of its left descents J(w). A reduced word
R of w is an *I-witness* if

* (once) every node outside I occurs at most once in R, and
* (budget) for every connected component C of the diagram induced on I, the
  letters of R lying in C number at most l(w0(C)) + #C.

w is *I-spherical* when an I-witness exists, and *maximally spherical* when
it is J(w)-spherical. Witnesses are searched depth first, building the word
from the right along right descents and carrying the remaining budgets;
failed states are remembered so that a whole census can share them.

>>> from coxsph.coxeter import buildSystem
>>> A4 = buildSystem('A4')
>>> w = A4.fromOneLine((2, 4, 5, 3, 1))
>>> sorted(A4.leftDescents(w))
[1, 3]
>>> isISpherical(A4, w, {1, 3})
False
>>> isMaximallySpherical(A4, A4.inverse(w))
True
"""
import logging
from collections import Counter
from dataclasses import dataclass
from math import comb
from multiprocessing import Pool
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from progress.bar import Bar

from . import config
from . import typea
from .coxeter import CoxeterSystem, Element, ComponentDecomposition, buildSystem
from .words import Word, checkLetters, evaluate

logger = logging.getLogger(__name__)

class SphericalQueryError(Exception):
    """Raised when I is not contained in J(w). This signals an invalid query,
    not a negative answer."""
    pass

@dataclass(frozen=True)
class WitnessCertificate:
    """A reduced word together with the letter counts that certify the
    once and budget conditions"""
    word: Word
    perNodeCounts: Dict[int, int]
    perComponentCounts: Tuple[int, ...]
    decomposition: ComponentDecomposition

    def toObject(self) -> dict:
        return {
            'word': list(self.word),
            'perNodeCounts': {str(k): v for k, v in sorted(self.perNodeCounts.items())},
            'perComponentCounts': list(self.perComponentCounts),
            'components': [list(c) for c in self.decomposition.components],
            'budgets': list(self.decomposition.budgets)
        }

def checkQuery(system: CoxeterSystem, w: Element, I: Iterable[int]) -> FrozenSet[int]:
    I = frozenset(I)
    descents = system.leftDescents(w)
    if not I <= descents:
        raise SphericalQueryError(
            f'I = {sorted(I)} is not contained in J(w) = {sorted(descents)}')
    return I

def letterCounts(system: CoxeterSystem, word: Sequence[int],
                 decomposition: ComponentDecomposition) -> Tuple[Counter, Tuple[int, ...]]:
    nodeCounts = Counter(word)
    componentCounts = tuple(sum(nodeCounts[node] for node in component)
                            for component in decomposition.components)
    return nodeCounts, componentCounts

def satisfiesConditions(system: CoxeterSystem, word: Sequence[int], I: Iterable[int]) -> bool:
    """The once and budget conditions for I, regardless of whether I lies in J(w)"""
    I = frozenset(I)
    decomposition = system.decomposeSubset(I)
    nodeCounts, componentCounts = letterCounts(system, word, decomposition)
    if any(count > 1 for node, count in nodeCounts.items() if node not in I):
        return False
    return all(count <= budget for count, budget
               in zip(componentCounts, decomposition.budgets))

def verifyWitness(system: CoxeterSystem, w: Element, I: Iterable[int],
                  word: Sequence[int]) -> bool:
    """True if ``word`` is a reduced word of w satisfying the once and budget conditions.

    The verdict is a plain recount over the word and does not depend on
    how the word was found.

    Raises:
        SphericalQueryError: if I is not contained in J(w)
    """
    I = checkQuery(system, w, I)
    word = checkLetters(system, word)
    if len(word) != system.length(w) or evaluate(system, word) != w:
        return False
    return satisfiesConditions(system, word, I)

def certificate(system: CoxeterSystem, w: Element, I: Iterable[int],
                word: Sequence[int]) -> WitnessCertificate:
    decomposition = system.decomposeSubset(I)
    nodeCounts, componentCounts = letterCounts(system, word, decomposition)
    return WitnessCertificate(tuple(word), dict(nodeCounts), componentCounts, decomposition)

class WitnessSearch():
    """Depth-first witness search for a fixed system.

    Attributes:
        system (CoxeterSystem): the system
        failures (set): states ``(I, x, budgets)`` known to admit no
            completion; shared by every query made through this object
    """

    def __init__(self, system: CoxeterSystem) -> None:
        self.system = system
        self.failures = set()

    def find(self, w: Element, I: Iterable[int]) -> Optional[Word]:
        """An I-witness of w, or None"""
        system = self.system
        I = checkQuery(system, w, I)
        decomposition = system.decomposeSubset(I)
        outside = tuple(j for j in system.nodeLabels if j not in I)
        slot = {}
        for position, j in enumerate(outside):
            slot[j] = position
        for index, component in enumerate(decomposition.components):
            for j in component:
                slot[j] = len(outside) + index
        budgets = tuple([1] * len(outside)) + decomposition.budgets

        word = self._search(I, w, budgets, slot, len(outside))
        return None if word is None else tuple(word)

    def _search(self, I, x, budgets, slot, nOutside):
        # The word is returned left to right: x = (x s_i) s_i
        system = self.system
        if x.length == 0:
            return []

        # Component budgets beyond l(x) can never be exhausted
        budgets = budgets[:nOutside] + tuple(min(b, x.length) for b in budgets[nOutside:])
        key = (I, x, budgets)
        if key in self.failures:
            return None
        if x.length > sum(budgets) or not self._supportFits(x, budgets, slot):
            self.failures.add(key)
            return None

        for i in sorted(system.rightDescents(x)):
            position = slot[i]
            if budgets[position] == 0:
                continue
            remaining = budgets[:position] + (budgets[position] - 1,) + budgets[position + 1:]
            word = self._search(I, system.rightMultiply(x, i), remaining, slot, nOutside)
            if word is not None:
                word.append(i)
                return word

        self.failures.add(key)
        return None

    def _supportFits(self, x, budgets, slot) -> bool:
        # Every letter of the support occurs in every reduced word of x
        needed = Counter(slot[j] for j in self.system.support(x))
        return all(budgets[position] >= count for position, count in needed.items())

def findWitness(system: CoxeterSystem, w: Element, I: Iterable[int],
                search: WitnessSearch = None) -> Optional[Word]:
    if search is None:
        search = WitnessSearch(system)
    return search.find(w, I)

def isISpherical(system: CoxeterSystem, w: Element, I: Iterable[int],
                 search: WitnessSearch = None) -> bool:
    """True if some reduced word of w is an I-witness.

    Raises:
        SphericalQueryError: if I is not contained in J(w)
    """
    return findWitness(system, w, I, search) is not None

def sphericalCertificate(system: CoxeterSystem, w: Element, I: Iterable[int],
                         search: WitnessSearch = None) -> Optional[WitnessCertificate]:
    """A :class:`WitnessCertificate` when w is I-spherical, None otherwise"""
    word = findWitness(system, w, I, search)
    if word is None:
        return None
    return certificate(system, w, I, word)

def isMaximallySpherical(system: CoxeterSystem, w: Element,
                         search: WitnessSearch = None) -> bool:
    return isISpherical(system, w, system.leftDescents(w), search)

def isToric(system: CoxeterSystem, w: Element, search: WitnessSearch = None) -> bool:
    """The case I = {}: a reduced word with pairwise distinct letters"""
    return isISpherical(system, w, frozenset(), search)

# Censuses

def _censusShard(cartanType, elements):
    system = buildSystem(cartanType)
    search = WitnessSearch(system)
    return [(w, findWitness(system, w, system.leftDescents(w), search)) for w in elements]

def censusWitnesses(system: CoxeterSystem, processes: int = 1, showProgress: bool = False,
                    cap: int = None) -> List[Tuple[Element, Optional[Word]]]:
    """Every element paired with a J(w)-witness (or None), in enumeration
    order.

    Args:
        processes (int, optional): worker processes; shards get their own
            failure tables. ``None`` uses one per core. Defaults to 1.
        showProgress (bool, optional): show a progress bar
        cap (int, optional): enumeration cap, defaults to the configured one

    Raises:
        EnumerationCapError: if the group is larger than the cap
    """
    elements = system.enumerate(cap=cap)
    bar = Bar('Census', suffix='%(index)d/%(max)d - ETA: %(eta)ds',
              max=len(elements)) if showProgress else None

    if processes == 1:
        search = WitnessSearch(system)
        results = []
        for w in elements:
            results.append((w, findWitness(system, w, system.leftDescents(w), search)))
            if bar is not None:
                bar.next()
        logger.debug('Census of %s kept %d failed states', system.cartanType, len(search.failures))
    else:
        shardSize = config.getSettings().get('shardSize', 256)
        shards = [elements[k:k + shardSize] for k in range(0, len(elements), shardSize)]
        logger.debug('Census of %s in %d shards', system.cartanType, len(shards))
        results = []
        with Pool(processes) as pool:
            jobs = [pool.apply_async(_censusShard, (system.cartanType, shard))
                    for shard in shards]
            for job, shard in zip(jobs, shards):
                results.extend(job.get())
                if bar is not None:
                    for _ in shard:
                        bar.next()
    if bar is not None:
        bar.finish()
    return results

def nonsphericalCensus(system: CoxeterSystem, processes: int = 1,
                       showProgress: bool = False, cap: int = None) -> List[Element]:
    """All elements that are not maximally spherical, in enumeration order

    Raises:
        EnumerationCapError: if the group is larger than the cap
    """
    return [w for w, witness in censusWitnesses(system, processes, showProgress, cap)
            if witness is None]

# Closed forms

def w0SphericalityClosedForm(system: CoxeterSystem, I: Iterable[int]) -> bool:
    """Whether w0 is I-spherical.

    In type A_{n-1} with n >= 5 this holds exactly for I = [1, n-1],
    [2, n-1] and [1, n-2]; smaller type A cases are decided by search. In
    every other type it holds exactly for I = S.
    """
    I = frozenset(I)
    for node in I:
        system._checkNode(node)
    S = frozenset(system.nodeLabels)
    if system.cartanType.family == 'A':
        n = system.rank + 1
        if n <= 4:
            return isISpherical(system, system.longestElement(), I)
        allowed = [frozenset(range(1, n)), frozenset(range(2, n)), frozenset(range(1, n - 1))]
        return I in allowed
    return I == S

def w0Classification(system: CoxeterSystem) -> List[FrozenSet[int]]:
    """Every I for which w0 is I-spherical, by search"""
    w0 = system.longestElement()
    search = WitnessSearch(system)
    subsets = []
    nodes = system.nodeLabels
    for mask in range(2 ** len(nodes)):
        I = frozenset(j for k, j in enumerate(nodes) if mask >> k & 1)
        if isISpherical(system, w0, I, search):
            subsets.append(I)
    return subsets

def dihedralClassification(system: CoxeterSystem, w: Element) -> bool:
    """Maximal sphericality in a rank-two group: l(w) <= 3 or w = w0"""
    if system.rank != 2:
        raise SphericalQueryError(f'{system.cartanType} is not a dihedral group')
    return system.length(w) <= 3 or w == system.longestElement()

# Type A

def verifyWitnessGL(w: Sequence[int], I: Iterable[int], word: Sequence[int]) -> bool:
    """The GL_n form of the witness conditions for a permutation w.

    With D = [n-1] - I = {d_1 < ... < d_k}, d_0 = 0 and d_{k+1} = n:

    * every s_{d_i} occurs at most once, and
    * #{letters strictly between d_{t-1} and d_t} is less than
      binomial(d_t - d_{t-1} + 1, 2) for every t.

    >>> verifyWitnessGL((3, 5, 2, 4, 6, 7, 8, 1), {1, 2, 4}, (1, 2, 1, 4, 3, 2, 4, 5, 6, 7))
    True
    """
    w = typea.checkPermutation(w)
    n = len(w)
    I = frozenset(I)
    descents = typea.leftDescents(w)
    if not I <= descents:
        raise SphericalQueryError(
            f'I = {sorted(I)} is not contained in J(w) = {sorted(descents)}')
    word = tuple(word)
    if any(not 1 <= letter < n for letter in word):
        return False
    if len(word) != typea.inversions(w) or typea.permutationFromWord(word, n) != w:
        return False

    D = [d for d in range(1, n) if d not in I]
    counts = Counter(word)
    if any(counts[d] > 1 for d in D):
        return False
    cuts = [0] + D + [n]
    for low, high in zip(cuts, cuts[1:]):
        inside = sum(1 for letter in word if low < letter < high)
        if inside >= comb(high - low + 1, 2):
            return False
    return True

def canonicalWordIsWitness(system: CoxeterSystem, w: Sequence[int]) -> bool:
    """Whether the canonical reduced word of a permutation is a
    J(w)-witness"""
    element = system.fromOneLine(w)
    return verifyWitness(system, element, system.leftDescents(element),
                         typea.canonicalWord(w))
