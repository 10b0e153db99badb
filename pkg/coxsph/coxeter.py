# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         coxeter.py
# Purpose:      exact arithmetic in finite Coxeter groups
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
Finite Coxeter systems and their elements.

A :class:`CoxeterSystem` is built from a :class:`CartanType`. For the
crystallographic types the positive roots are generated by closing the simple
roots under the simple reflections, and every :class:`Element` is stored as
the signed permutation it induces on the indexed positive roots. Dihedral
groups :math:`I_2(n)` have no integral root basis, so their elements are
stored in a normal form ``(start letter, length)``.

>>> A3 = buildSystem(CartanType('A', 3))
>>> len(A3.positiveRoots)
6
>>> w0 = A3.longestElement()
>>> A3.length(w0)
6
>>> A3.oneLine(w0)
(4, 3, 2, 1)

Node labels follow the Bourbaki diagrams: :math:`B_n` is
``1-2-...-(n-1)=>n``, :math:`F_4` is ``1-2=>3-4`` and :math:`E_n` is the chain
``1-3-4-...-n`` with ``2`` attached to ``4``. The one exception is
:math:`D_4`, whose central node carries the label 3, so that the node set
``{1, 2, 4}`` consists of the three leaves.
"""
import math
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Tuple
import numpy as np

from . import config

logger = logging.getLogger(__name__)

FAMILIES = ('A', 'B', 'D', 'E6', 'E7', 'E8', 'F4', 'G2', 'I2')
FIXED_RANKS = {'E6': 6, 'E7': 7, 'E8': 8, 'F4': 4, 'G2': 2, 'I2': 2}
MIN_RANKS = {'A': 1, 'B': 2, 'D': 4}
EXCEPTIONAL_ORDERS = {
    'E6': 51840,
    'E7': 2903040,
    'E8': 696729600,
    'F4': 1152,
    'G2': 12
}

# Off-diagonal Cartan entries (a_ij, a_ji) for a bond of order m, i < j
CARTAN_BONDS = {3: (-1, -1), 4: (-1, -2), 6: (-1, -3)}

class CoxeterError(Exception):
    pass

class InvalidCartanTypeError(CoxeterError):
    """Raised for an unknown family or a rank or gonality that does not fit it"""
    pass

class SystemMismatchError(CoxeterError):
    """Raised when elements of different systems are combined"""
    pass

class EnumerationCapError(CoxeterError):
    """Raised when a group is too large to enumerate under the configured cap"""
    pass

@dataclass(frozen=True)
class CartanType:
    """The type of a finite irreducible Coxeter system.

    :math:`I_2(3)` is normalized to :math:`A_2`:

    >>> CartanType('I2', gonality=3)
    CartanType(family='A', rank=2, gonality=None)
    >>> str(CartanType('I2', gonality=5))
    'I2(5)'
    """
    family: str
    rank: int = None
    gonality: int = None

    def __post_init__(self):
        family, rank, gonality = self.family, self.rank, self.gonality
        if family not in FAMILIES:
            raise InvalidCartanTypeError(f'Unknown family: {family!r}')

        if family in FIXED_RANKS:
            if rank is None:
                rank = FIXED_RANKS[family]
            elif rank != FIXED_RANKS[family]:
                raise InvalidCartanTypeError(
                    f'{family} has rank {FIXED_RANKS[family]}, got {rank}')
        elif not isinstance(rank, int) or rank < MIN_RANKS[family]:
            raise InvalidCartanTypeError(
                f'{family} needs an integer rank of at least {MIN_RANKS[family]}, got {rank!r}')

        if family == 'I2':
            if not isinstance(gonality, int) or gonality < 3:
                raise InvalidCartanTypeError(f'I2 needs a gonality of at least 3, got {gonality!r}')
            if gonality == 3:
                family, gonality = 'A', None
        elif gonality is not None:
            raise InvalidCartanTypeError('Only I2 takes a gonality')

        object.__setattr__(self, 'family', family)
        object.__setattr__(self, 'rank', rank)
        object.__setattr__(self, 'gonality', gonality)

    def __str__(self):
        if self.family == 'I2':
            return f'I2({self.gonality})'
        elif self.family in FIXED_RANKS:
            return self.family
        else:
            return f'{self.family}{self.rank}'

    @property
    def isCrystallographic(self) -> bool:
        return self.family != 'I2'

def coxeterEdges(cartanType: CartanType) -> List[Tuple[int, int, int]]:
    """The bonds ``(i, j, m_ij)`` of the Coxeter diagram, with i < j and
    m_ij >= 3"""
    family, r = cartanType.family, cartanType.rank
    if family == 'A':
        return [(i, i + 1, 3) for i in range(1, r)]
    elif family == 'B':
        return [(i, i + 1, 3) for i in range(1, r - 1)] + [(r - 1, r, 4)]
    elif family == 'D':
        if r == 4:
            return [(1, 3, 3), (2, 3, 3), (3, 4, 3)]
        return [(i, i + 1, 3) for i in range(1, r - 1)] + [(r - 2, r, 3)]
    elif family in ('E6', 'E7', 'E8'):
        return [(1, 3, 3), (2, 4, 3)] + [(i, i + 1, 3) for i in range(3, r)]
    elif family == 'F4':
        return [(1, 2, 3), (2, 3, 4), (3, 4, 3)]
    elif family == 'G2':
        return [(1, 2, 6)]
    else:
        return [(1, 2, cartanType.gonality)]

def closeRoots(cartanMatrix: np.ndarray) -> List[Tuple[int, ...]]:
    """Generate the positive roots in the simple-root basis by closing the
    simple roots under the simple reflections. The simple roots come first."""
    r = cartanMatrix.shape[0]
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = list(simple)
    seen = set(roots)
    queue = deque(roots)
    while queue:
        beta = queue.popleft()
        vector = np.array(beta)
        for i in range(r):
            if beta == simple[i]:
                continue
            gamma = vector.copy()
            gamma[i] -= int(cartanMatrix[i].dot(vector))
            gamma = tuple(int(x) for x in gamma)
            if gamma not in seen:
                seen.add(gamma)
                roots.append(gamma)
                queue.append(gamma)
    return roots

@dataclass(frozen=True)
class Element:
    """An element of a finite Coxeter group.

    For crystallographic types ``data[k]`` is ``+(m+1)`` when the element
    sends the k-th positive root to the m-th positive root and ``-(m+1)``
    when it sends it to minus the m-th root. For :math:`I_2(n)`, ``data`` is
    ``(start, length)`` with the identity stored as ``(0, 0)`` and the
    longest element as ``(1, n)``.
    """
    cartanType: CartanType
    data: Tuple[int, ...]
    length: int = field(compare=False)

    def __repr__(self):
        return f'<coxsph.Element {self.cartanType} length={self.length}>'

@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components of the subdiagram induced on a node set, with the
    budget ``l(w0) + #vertices`` of every component"""
    subset: FrozenSet[int]
    components: Tuple[Tuple[int, ...], ...]
    budgets: Tuple[int, ...]

    def componentIndex(self, node: int):
        for index, component in enumerate(self.components):
            if node in component:
                return index
        return None

    def toObject(self) -> dict:
        return {
            'subset': sorted(self.subset),
            'components': [list(c) for c in self.components],
            'budgets': list(self.budgets)
        }

class CoxeterSystem():
    """A finite Coxeter system with its root data.

    Attributes:
        cartanType (CartanType): the type
        rank (int): number of simple reflections
        coxeterMatrix (numpy.ndarray): the matrix of orders m_ij
        cartanMatrix (numpy.ndarray): the Cartan matrix, ``None`` for I2
        positiveRoots (list): positive roots in the simple-root basis
            (crystallographic types only)
        nodeLabels (list): the labels 1..r of the Dynkin nodes
    """

    def __init__(self, cartanType: CartanType) -> None:
        self.cartanType = cartanType
        self.rank = cartanType.rank
        self.nodeLabels = list(range(1, self.rank + 1))
        self.edges = coxeterEdges(cartanType)

        r = self.rank
        self.coxeterMatrix = 2 * np.ones((r, r), dtype=int) - np.eye(r, dtype=int)
        for i, j, m in self.edges:
            self.coxeterMatrix[i - 1, j - 1] = m
            self.coxeterMatrix[j - 1, i - 1] = m

        self.cartanMatrix = None
        self.positiveRoots = []
        if cartanType.isCrystallographic:
            self.cartanMatrix = cartanFromCoxeter(self.coxeterMatrix)
            self.positiveRoots = closeRoots(self.cartanMatrix)
            self._rootIndex = {root: k for k, root in enumerate(self.positiveRoots)}
            self._rootSupports = [frozenset(i + 1 for i, c in enumerate(root) if c != 0)
                                  for root in self.positiveRoots]
            self._reflections = [self._reflectionTable(i) for i in range(r)]
            logger.debug('Built %s with %d positive roots', cartanType, len(self.positiveRoots))

        self._longest = None
        self._budgets = {}

    def __repr__(self):
        return f'<coxsph.CoxeterSystem {self.cartanType}>'

    def _reflectionTable(self, i: int) -> Tuple[int, ...]:
        images = []
        vectorRow = self.cartanMatrix[i]
        for k, beta in enumerate(self.positiveRoots):
            if k == i:
                images.append(-(k + 1))
                continue
            gamma = list(beta)
            gamma[i] -= int(vectorRow.dot(np.array(beta)))
            images.append(self._rootIndex[tuple(gamma)] + 1)
        return tuple(images)

    # Basic elements

    def _check(self, *elements: Element) -> None:
        for w in elements:
            if w.cartanType != self.cartanType:
                raise SystemMismatchError(
                    f'Element of {w.cartanType} used in a system of type {self.cartanType}')

    def _checkNode(self, i: int) -> None:
        if not isinstance(i, (int, np.integer)) or not 1 <= i <= self.rank:
            raise CoxeterError(f'Node {i!r} is not in 1..{self.rank}')

    def identity(self) -> Element:
        if self.cartanType.isCrystallographic:
            return Element(self.cartanType, tuple(range(1, len(self.positiveRoots) + 1)), 0)
        return Element(self.cartanType, (0, 0), 0)

    def generator(self, i: int) -> Element:
        """The simple reflection s_i"""
        self._checkNode(i)
        if self.cartanType.isCrystallographic:
            return Element(self.cartanType, self._reflections[i - 1], 1)
        return Element(self.cartanType, (i, 1), 1)

    # Group law

    def multiply(self, u: Element, v: Element) -> Element:
        """The product uv (apply v first)"""
        self._check(u, v)
        if not self.cartanType.isCrystallographic:
            w = u
            for letter in self._dihedralWord(v):
                w = self.rightMultiply(w, letter)
            return w

        uData = u.data
        data = tuple(uData[abs(image) - 1] if image > 0 else -uData[abs(image) - 1]
                     for image in v.data)
        return Element(self.cartanType, data, sum(1 for x in data if x < 0))

    def rightMultiply(self, w: Element, i: int) -> Element:
        """The product w s_i"""
        self._checkNode(i)
        if self.cartanType.isCrystallographic:
            return self.multiply(w, self.generator(i))
        self._check(w)
        start, length = self._dihedralRightMultiply(w.data, i)
        return Element(self.cartanType, (start, length), length)

    def leftMultiply(self, i: int, w: Element) -> Element:
        """The product s_i w"""
        return self.multiply(self.generator(i), w)

    def inverse(self, w: Element) -> Element:
        self._check(w)
        if not self.cartanType.isCrystallographic:
            result = self.identity()
            for letter in reversed(self._dihedralWord(w)):
                result = self.rightMultiply(result, letter)
            return result
        data = [0] * len(w.data)
        for k, image in enumerate(w.data):
            data[abs(image) - 1] = (k + 1) if image > 0 else -(k + 1)
        return Element(self.cartanType, tuple(data), w.length)

    # Dihedral normal forms

    def _dihedralWord(self, w: Element) -> List[int]:
        start, length = w.data
        return [start if t % 2 == 0 else 3 - start for t in range(length)]

    def _dihedralRightMultiply(self, data: Tuple[int, int], j: int) -> Tuple[int, int]:
        n = self.cartanType.gonality
        start, length = data
        if length == 0:
            return (j, 1)
        if length == n:
            # Pick the reduced word of w0 that ends in s_j and drop that letter
            start = j if n % 2 == 1 else 3 - j
            return (start, n - 1)
        last = start if length % 2 == 1 else 3 - start
        if last == j:
            return (start, length - 1) if length > 1 else (0, 0)
        if length + 1 == n:
            return (1, n)
        return (start, length + 1)

    # Length and descents

    def length(self, w: Element) -> int:
        """Coxeter length; the number of positive roots sent to negative roots"""
        self._check(w)
        return w.length

    def leftDescents(self, w: Element) -> FrozenSet[int]:
        """J(w), the j with l(s_j w) < l(w)"""
        self._check(w)
        if not self.cartanType.isCrystallographic:
            start, length = w.data
            if length == 0:
                return frozenset()
            elif length == self.cartanType.gonality:
                return frozenset({1, 2})
            return frozenset({start})
        data = set(w.data)
        return frozenset(j for j in range(1, self.rank + 1) if -j in data)

    def rightDescents(self, w: Element) -> FrozenSet[int]:
        """The i with l(w s_i) < l(w)"""
        self._check(w)
        if not self.cartanType.isCrystallographic:
            start, length = w.data
            if length == 0:
                return frozenset()
            elif length == self.cartanType.gonality:
                return frozenset({1, 2})
            return frozenset({start if length % 2 == 1 else 3 - start})
        return frozenset(i + 1 for i in range(self.rank) if w.data[i] < 0)

    def support(self, w: Element) -> FrozenSet[int]:
        """The letters occurring in (any) reduced word of w"""
        self._check(w)
        if not self.cartanType.isCrystallographic:
            start, length = w.data
            if length == 0:
                return frozenset()
            elif length == 1:
                return frozenset({start})
            return frozenset({1, 2})
        letters = set()
        for k, image in enumerate(w.data):
            if image < 0:
                letters |= self._rootSupports[k]
        return frozenset(letters)

    def isCoxeterElement(self, w: Element) -> bool:
        """True if w has a reduced word using every generator exactly once"""
        return self.length(w) == self.rank and len(self.support(w)) == self.rank

    # Longest element and enumeration

    def longestElement(self) -> Element:
        if self._longest is None:
            if self.cartanType.isCrystallographic:
                w = self.identity()
                ascents = self._rightAscents(w)
                while ascents:
                    w = self.rightMultiply(w, min(ascents))
                    ascents = self._rightAscents(w)
                self._longest = w
            else:
                n = self.cartanType.gonality
                self._longest = Element(self.cartanType, (1, n), n)
        return self._longest

    def _rightAscents(self, w: Element) -> FrozenSet[int]:
        return frozenset(self.nodeLabels) - self.rightDescents(w)

    def groupOrder(self) -> int:
        family, r = self.cartanType.family, self.rank
        if family == 'A':
            return math.factorial(r + 1)
        elif family == 'B':
            return 2 ** r * math.factorial(r)
        elif family == 'D':
            return 2 ** (r - 1) * math.factorial(r)
        elif family == 'I2':
            return 2 * self.cartanType.gonality
        return EXCEPTIONAL_ORDERS[family]

    def enumerate(self, cap: int = None) -> List[Element]:
        """All elements, ordered by length (breadth-first from the identity).

        Raises:
            EnumerationCapError: if the group order exceeds the cap (by
                default the configured ``enumerationCap``)
        """
        if cap is None:
            cap = config.getSettings()['enumerationCap']
        order = self.groupOrder()
        if order > cap:
            raise EnumerationCapError(
                f'{self.cartanType} has {order} elements, above the enumeration cap of {cap}')

        identity = self.identity()
        elements = [identity]
        seen = {identity}
        queue = deque(elements)
        while queue:
            w = queue.popleft()
            for i in self.nodeLabels:
                x = self.rightMultiply(w, i)
                if x not in seen:
                    seen.add(x)
                    elements.append(x)
                    queue.append(x)
        logger.debug('Enumerated %d elements of %s', len(elements), self.cartanType)
        return elements

    # Subsets of nodes

    def decomposeSubset(self, subset: Iterable[int]) -> ComponentDecomposition:
        """Connected components of the diagram induced on ``subset``, with
        budgets ``l(w0) + #vertices`` per component.

        >>> E8 = buildSystem(CartanType('E8'))
        >>> E8.decomposeSubset({2, 3, 4, 5, 7, 8}).budgets
        (16, 5)
        """
        subset = frozenset(subset)
        for node in subset:
            self._checkNode(node)

        neighbours = {i: set() for i in subset}
        for i, j, _ in self.edges:
            if i in subset and j in subset:
                neighbours[i].add(j)
                neighbours[j].add(i)

        components = []
        remaining = set(subset)
        while remaining:
            start = min(remaining)
            component = {start}
            queue = deque([start])
            while queue:
                node = queue.popleft()
                for other in neighbours[node]:
                    if other not in component:
                        component.add(other)
                        queue.append(other)
            remaining -= component
            components.append(tuple(sorted(component)))

        budgets = tuple(self.longestLength(c) + len(c) for c in components)
        return ComponentDecomposition(subset, tuple(components), budgets)

    def longestLength(self, nodes: Iterable[int] = None) -> int:
        """Length of the longest element of the parabolic subgroup on
        ``nodes`` (the whole group by default)"""
        nodes = tuple(sorted(self.nodeLabels if nodes is None else nodes))
        if nodes not in self._budgets:
            self._budgets[nodes] = parabolicLongestLength(self.coxeterMatrix, nodes)
        return self._budgets[nodes]

    # Type A

    def oneLine(self, w: Element) -> Tuple[int, ...]:
        """One-line notation (w(1), ..., w(n)) of an element of type A"""
        self._check(w)
        self._checkTypeA()
        n = self.rank + 1
        perm = [0] * n
        for i in range(self.rank):
            image = w.data[i]
            root = self.positiveRoots[abs(image) - 1]
            nonzero = [k for k, c in enumerate(root) if c != 0]
            p, q = nonzero[0] + 1, nonzero[-1] + 2
            if image > 0:
                perm[i], perm[i + 1] = p, q
            else:
                perm[i], perm[i + 1] = q, p
        return tuple(perm)

    def fromOneLine(self, perm: Iterable[int]) -> Element:
        """The element of type A with the given one-line notation"""
        self._checkTypeA()
        perm = list(perm)
        n = self.rank + 1
        if sorted(perm) != list(range(1, n + 1)):
            raise CoxeterError(f'{tuple(perm)} is not a permutation of 1..{n}')

        # Sort by adjacent swaps: w s_a1 ... s_ak = id, so w = s_ak ... s_a1
        letters = []
        swapped = True
        while swapped:
            swapped = False
            for i in range(n - 1):
                if perm[i] > perm[i + 1]:
                    perm[i], perm[i + 1] = perm[i + 1], perm[i]
                    letters.append(i + 1)
                    swapped = True
        w = self.identity()
        for letter in reversed(letters):
            w = self.rightMultiply(w, letter)
        return w

    def _checkTypeA(self) -> None:
        if self.cartanType.family != 'A':
            raise CoxeterError(f'One-line notation needs type A, not {self.cartanType}')

def cartanFromCoxeter(coxeterMatrix: np.ndarray) -> np.ndarray:
    r = coxeterMatrix.shape[0]
    cartan = 2 * np.eye(r, dtype=int)
    for i in range(r):
        for j in range(i + 1, r):
            m = int(coxeterMatrix[i, j])
            if m == 2:
                continue
            if m not in CARTAN_BONDS:
                raise CoxeterError(f'Bond of order {m} is not crystallographic')
            cartan[i, j], cartan[j, i] = CARTAN_BONDS[m]
    return cartan

def parabolicLongestLength(coxeterMatrix: np.ndarray, nodes: Tuple[int, ...]) -> int:
    """l(w0) of the parabolic subgroup on ``nodes``, from its positive-root
    count. A single non-crystallographic bond of order m has l(w0) = m."""
    if len(nodes) == 0:
        return 0
    indices = [i - 1 for i in nodes]
    sub = coxeterMatrix[np.ix_(indices, indices)]
    bonds = {int(m) for m in sub.flatten()} - {1, 2}
    if bonds - set(CARTAN_BONDS):
        if len(nodes) != 2:
            raise CoxeterError(f'Unsupported non-crystallographic component on {nodes}')
        return int(sub[0, 1])
    return len(closeRoots(cartanFromCoxeter(sub)))

@lru_cache(maxsize=None)
def _buildSystem(cartanType: CartanType) -> CoxeterSystem:
    return CoxeterSystem(cartanType)

def buildSystem(cartanType) -> CoxeterSystem:
    """Build (or fetch the cached) system of a given type.

    Args:
        cartanType (CartanType or str): the type, or a string such as
            ``'B3'`` or ``'I2(5)'``

    Returns:
        CoxeterSystem: the system
    """
    if isinstance(cartanType, str):
        from .notation import parseCartanType
        cartanType = parseCartanType(cartanType)
    return _buildSystem(cartanType)
