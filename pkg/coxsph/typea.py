# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         typea.py
# Purpose:      permutations, codes, Rothe diagrams and patterns
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
Type A specifics. Permutations are tuples in one-line notation
``(w(1), ..., w(n))``; compositions and partitions are tuples of
nonnegative integers. A word ``s_{i1} ... s_{ik}`` is the composite of the
transpositions ``(i i+1)``, applied right to left, so right multiplication
by ``s_i`` swaps the entries in positions i and i+1.

>>> code((3, 4, 1, 2))
(2, 2, 0, 0)
>>> permFromCode((0, 0, 0, 2, 1))
(1, 2, 3, 6, 5, 4)
>>> canonicalWord((3, 4, 2, 1))
(2, 1, 3, 2, 3)
>>> wActOnPartition((2, 4, 5, 3, 1), (5, 4, 3, 2, 1))
(1, 5, 2, 4, 3)
"""
import logging
from itertools import combinations, permutations as _permutations
from typing import FrozenSet, Iterable, Iterator, Sequence, Set, Tuple

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]
Composition = Tuple[int, ...]
Partition = Tuple[int, ...]

# Patterns whose avoidance characterizes [n-1]-multiplicity-free keys
KM = ((0, 1, 2), (0, 0, 2, 2), (0, 0, 2, 1), (1, 0, 3, 2), (1, 0, 2, 2))

class PermutationError(Exception):
    pass

class NotBigrassmannianError(PermutationError):
    """Raised when a bigrassmannian permutation was required"""
    pass

def checkPermutation(w: Sequence[int]) -> Permutation:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise PermutationError(f'{w} is not a permutation of 1..{len(w)}')
    return w

def permutations(n: int) -> Iterator[Permutation]:
    """All permutations of 1..n in lexicographic order"""
    return _permutations(range(1, n + 1))

def inversePermutation(w: Sequence[int]) -> Permutation:
    w = checkPermutation(w)
    inverse = [0] * len(w)
    for position, value in enumerate(w, start=1):
        inverse[value - 1] = position
    return tuple(inverse)

def inversions(w: Sequence[int]) -> int:
    """Coxeter length of a permutation"""
    return sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])

def descents(w: Sequence[int]) -> FrozenSet[int]:
    """Right descents: positions i with w(i) > w(i+1)"""
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])

def leftDescents(w: Sequence[int]) -> FrozenSet[int]:
    """J(w): values j such that j+1 appears to the left of j"""
    return descents(inversePermutation(w))

def permutationFromWord(word: Sequence[int], n: int = None) -> Permutation:
    """One-line notation of s_{i1} ... s_{ik} in S_n (n defaults to the
    smallest size containing every letter)"""
    word = tuple(word)
    if n is None:
        n = max(word, default=0) + 1
    if any(not 1 <= letter < n for letter in word):
        raise PermutationError(f'Word {word} does not live in S_{n}')
    perm = list(range(1, n + 1))
    for letter in word:
        perm[letter - 1], perm[letter] = perm[letter], perm[letter - 1]
    return tuple(perm)

def isReducedWord(word: Sequence[int], n: int = None) -> bool:
    word = tuple(word)
    return inversions(permutationFromWord(word, n)) == len(word)

def code(w: Sequence[int]) -> Composition:
    """The code of w: c_i = #{j > i : w(j) < w(i)}, the row counts of the
    Rothe diagram"""
    w = checkPermutation(w)
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))

def permFromCode(alpha: Sequence[int]) -> Permutation:
    """The permutation w[alpha] with code alpha.

    It is built in S_N with N = len(alpha) + max(alpha), which always
    suffices, and trailing fixed points beyond len(alpha) are dropped.
    """
    alpha = tuple(alpha)
    if any(part < 0 for part in alpha):
        raise PermutationError(f'{alpha} has a negative part')
    N = len(alpha) + max(alpha, default=0)
    available = list(range(1, N + 1))
    perm = []
    for i in range(N):
        c = alpha[i] if i < len(alpha) else 0
        if c >= len(available):
            raise PermutationError(f'{alpha} is not a code')
        perm.append(available.pop(c))
    while len(perm) > len(alpha) and perm[-1] == len(perm):
        perm.pop()
    return tuple(perm)

def rotheDiagram(w: Sequence[int]) -> Set[Tuple[int, int]]:
    """The cells (i, j) with j < w(i) and i < w^{-1}(j)"""
    w = checkPermutation(w)
    inverse = inversePermutation(w)
    n = len(w)
    return {(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
            if j < w[i - 1] and i < inverse[j - 1]}

def canonicalWord(w: Sequence[int]) -> Tuple[int, ...]:
    """The canonical reduced word: row i of the Rothe diagram holds
    s_i, s_{i+1}, ... from left to right; rows are read top to bottom, each
    from right to left."""
    word = []
    for i, c in enumerate(code(w), start=1):
        word.extend(range(i + c - 1, i - 1, -1))
    return tuple(word)

def standardize(values: Sequence[int]) -> Tuple[int, ...]:
    """The permutation order-isomorphic to a sequence of distinct values"""
    ranks = {value: rank for rank, value in enumerate(sorted(values), start=1)}
    return tuple(ranks[value] for value in values)

def containsPermPattern(v: Sequence[int], u: Sequence[int]) -> bool:
    """True if some subsequence of v is order-isomorphic to u

    >>> containsPermPattern((5, 3, 2, 4, 1), (3, 2, 1))
    True
    >>> containsPermPattern((2, 4, 5, 3, 1), (3, 4, 1, 2))
    False
    """
    u = tuple(u)
    k = len(u)
    if k > len(v):
        return False
    for positions in combinations(range(len(v)), k):
        values = [v[p] for p in positions]
        if standardize(values) == u:
            return True
    return False

def avoidsPatterns(v: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(containsPermPattern(v, pattern) for pattern in patterns)

def isSmooth(w: Sequence[int]) -> bool:
    """Avoids 3412 and 4231"""
    return avoidsPatterns(w, [(3, 4, 1, 2), (4, 2, 3, 1)])

def isToricPattern(w: Sequence[int]) -> bool:
    """Avoids 321 and 3412"""
    return avoidsPatterns(w, [(3, 2, 1), (3, 4, 1, 2)])

def isDominant(w: Sequence[int]) -> bool:
    """The code of w is weakly decreasing"""
    c = code(w)
    return all(c[i] >= c[i + 1] for i in range(len(c) - 1))

def isBigrassmannian(w: Sequence[int]) -> bool:
    """Both w and its inverse have exactly one descent"""
    return len(descents(w)) == 1 and len(leftDescents(w)) == 1

def bigrassmannianShape(w: Sequence[int]) -> Tuple[int, int]:
    """The pair (a, b) such that the code of a bigrassmannian w is
    (0^f, b^a, 0^g)"""
    if not isBigrassmannian(w):
        raise NotBigrassmannianError(f'{tuple(w)} is not bigrassmannian')
    parts = [c for c in code(w) if c != 0]
    return len(parts), parts[0]

def bigrassmannianSpherical(w: Sequence[int]) -> bool:
    """Maximal sphericality of a bigrassmannian permutation in closed form:
    the code is (0^f, b, 0^g), (0^f, 1^a, 0^g) or (0^f, 2, 2, 0^g)"""
    a, b = bigrassmannianShape(w)
    return a == 1 or b == 1 or (a, b) == (2, 2)

def wActOnPartition(w: Sequence[int], lam: Sequence[int]) -> Composition:
    """w lambda = (lambda_{w^{-1}(1)}, ..., lambda_{w^{-1}(n)})"""
    lam = tuple(lam)
    inverse = inversePermutation(w)
    if len(lam) != len(inverse):
        raise PermutationError(f'{lam} and {tuple(w)} have different lengths')
    return tuple(lam[inverse[i] - 1] for i in range(len(lam)))

def staircase(n: int) -> Partition:
    return tuple(range(n, 0, -1))

def shiftPermutation(w: Sequence[int], f: int, n: int = None) -> Permutation:
    """The image of w under s_i -> s_{i+f}, inside S_n (default len(w) + f)"""
    n = len(w) + f if n is None else n
    shifted = tuple(range(1, f + 1)) + tuple(value + f for value in w)
    return shifted + tuple(range(len(shifted) + 1, n + 1))

# Compositions

def compositionDescents(alpha: Sequence[int]) -> FrozenSet[int]:
    """Positions i with alpha_i > alpha_{i+1}; the key polynomial of alpha is
    D-split-symmetric exactly when these lie in D"""
    return frozenset(i + 1 for i in range(len(alpha) - 1) if alpha[i] > alpha[i + 1])

def isPartition(alpha: Sequence[int]) -> bool:
    return all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1))

def _sign(x: int) -> int:
    return (x > 0) - (x < 0)

def containsCompPattern(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """True if indices j_1 < ... < j_k exist such that alpha restricted to
    them is order-isomorphic to beta and every pairwise gap is at least the
    corresponding gap of beta

    >>> containsCompPattern((3, 1, 4, 2, 2), (0, 1, 1))
    True
    >>> containsCompPattern((3, 1, 4, 2, 2), (0, 2, 2))
    False
    """
    alpha, beta = tuple(alpha), tuple(beta)
    k = len(beta)
    if k > len(alpha):
        return False
    pairs = list(combinations(range(k), 2))
    for positions in combinations(range(len(alpha)), k):
        values = [alpha[p] for p in positions]
        if all(_sign(values[s] - values[t]) == _sign(beta[s] - beta[t])
               and abs(values[s] - values[t]) >= abs(beta[s] - beta[t])
               for s, t in pairs):
            return True
    return False

def avoidsKM(alpha: Sequence[int]) -> bool:
    return not any(containsCompPattern(alpha, pattern) for pattern in KM)

def upOne(alpha: Sequence[int], j: int) -> Composition:
    """alpha with its j-th part (1-based) raised by one. Defined only when
    the raised part differs from every other part."""
    alpha = list(alpha)
    raised = alpha[j - 1] + 1
    if any(part == raised for i, part in enumerate(alpha) if i != j - 1):
        raise PermutationError(f'Raising part {j} of {tuple(alpha)} creates a repeated value')
    alpha[j - 1] = raised
    return tuple(alpha)

def upOneCandidates(alpha: Sequence[int], D: Iterable[int]) -> Iterator[Tuple[int, Composition]]:
    """Every admissible (j, alpha-up) whose descents stay inside D"""
    D = frozenset(D)
    for j in range(1, len(alpha) + 1):
        raised = alpha[j - 1] + 1
        if any(part == raised for i, part in enumerate(alpha) if i != j - 1):
            continue
        lifted = upOne(alpha, j)
        if compositionDescents(lifted) <= D:
            yield j, lifted

def distinctPartitions(n: int, maxPart: int) -> Iterator[Partition]:
    """Strictly decreasing sequences of n nonnegative parts, at most maxPart"""
    for parts in combinations(range(maxPart, -1, -1), n):
        yield tuple(parts)

def compositions(n: int, maxPart: int) -> Iterator[Composition]:
    """All weak compositions of length n with parts at most maxPart"""
    if n == 0:
        yield ()
        return
    for first in range(maxPart + 1):
        for rest in compositions(n - 1, maxPart):
            yield (first,) + rest
