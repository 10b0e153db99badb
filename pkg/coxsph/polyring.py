# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         polyring.py
# Purpose:      sparse polynomials, key polynomials and D-Schur expansions
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
Sparse integer polynomials in x_1, ..., x_n, stored as a map from exponent
vectors to nonzero coefficients. On top of them this module implements the
Demazure operators, key polynomials (by the Demazure recursion and by
Kohnert's rule), Schur polynomials and the expansion of split-symmetric
polynomials in the basis of D-Schur polynomials.

Take n = 4 and D = {2}, so that the variables split into the blocks
{x_1, x_2} and {x_3, x_4}:

>>> g = keyPolynomial((1, 2, 0, 1)) + keyPolynomial((2, 2, 0, 0))
>>> expansion = splitExpand(g, SplitSet(4, (2,)))
>>> sorted(expansion.coefficients.items())
[(((2, 1), (1, 0)), 1), (((2, 2), (0, 0)), 1)]
>>> sorted(keyExpand(g).items())
[((1, 2, 0, 1), 1), ((2, 2, 0, 0), 1)]
"""
import logging
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

import sympy

from . import typea

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]

class PolynomialError(Exception):
    pass

class NotSplitSymmetricError(PolynomialError):
    """Raised when a D-Schur expansion is requested for a polynomial that is
    not symmetric inside every block"""
    pass

class TooManyPartsError(PolynomialError):
    """Raised when a partition has more parts than there are variables"""
    pass

class DescentQueryError(PolynomialError):
    """Raised when a staircase test is asked for an I outside J(w)"""
    pass

class Poly():
    """An immutable sparse polynomial with integer coefficients.

    >>> x1, x2 = Poly.variable(1, 2), Poly.variable(2, 2)
    >>> str((x1 + x2) * (x1 + x2))
    'x1^2 + 2 * x1 x2 + x2^2'
    """

    __slots__ = ('nvars', 'terms', '_hash')

    def __init__(self, nvars: int, terms: Dict[Exponent, int] = None) -> None:
        self.nvars = nvars
        self.terms = {}
        self._hash = None
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != nvars or any(a < 0 for a in exponent):
                raise PolynomialError(f'Bad exponent {exponent} for {nvars} variables')
            if coefficient != 0:
                self.terms[exponent] = int(coefficient)

    @classmethod
    def zero(cls, nvars: int) -> 'Poly':
        return cls(nvars)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient: int = 1) -> 'Poly':
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: coefficient})

    @classmethod
    def one(cls, nvars: int) -> 'Poly':
        return cls.monomial((0,) * nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> 'Poly':
        return cls.monomial(tuple(int(k == i - 1) for k in range(nvars)))

    # Arithmetic

    def _checkCompatible(self, other: 'Poly') -> None:
        if not isinstance(other, Poly):
            raise PolynomialError(f'Cannot combine a polynomial with {other!r}')
        if other.nvars != self.nvars:
            raise PolynomialError(
                f'Polynomials in {self.nvars} and {other.nvars} variables cannot be combined')

    def __add__(self, other: 'Poly') -> 'Poly':
        self._checkCompatible(other)
        terms = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return Poly(self.nvars, terms)

    def __neg__(self) -> 'Poly':
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: 'Poly') -> 'Poly':
        return self + (-other)

    def __mul__(self, other) -> 'Poly':
        if isinstance(other, int):
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._checkCompatible(other)
        terms = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.nvars == other.nvars \
            and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return len(self.terms) > 0

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f'<coxsph.Poly nvars={self.nvars} terms={len(self.terms)}>'

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        text = ''
        for exponent, coefficient in self.items():
            variables = ' '.join(f'x{i}' if a == 1 else f'x{i}^{a}'
                                 for i, a in enumerate(exponent, start=1) if a > 0)
            magnitude = abs(coefficient)
            if not variables:
                term = str(magnitude)
            elif magnitude == 1:
                term = variables
            else:
                term = f'{magnitude} * {variables}'
            if not text:
                text = term if coefficient > 0 else f'-{term}'
            else:
                text += f' + {term}' if coefficient > 0 else f' - {term}'
        return text

    # Queries

    def items(self) -> List[Tuple[Exponent, int]]:
        """Terms sorted lex-descending"""
        return sorted(self.terms.items(), reverse=True)

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self.terms.get(tuple(exponent), 0)

    def leadingExponent(self) -> Exponent:
        """The lexicographically largest exponent (x_1 most significant)"""
        if not self.terms:
            raise PolynomialError('The zero polynomial has no leading exponent')
        return max(self.terms)

    def revlexLeadingExponent(self) -> Exponent:
        """The largest exponent when x_n is most significant"""
        if not self.terms:
            raise PolynomialError('The zero polynomial has no leading exponent')
        return max(self.terms, key=lambda e: e[::-1])

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def swapVariables(self, j: int) -> 'Poly':
        """s_j f: exchange x_j and x_{j+1}"""
        self._checkIndex(j)
        terms = {}
        for e, c in self.terms.items():
            e = list(e)
            e[j - 1], e[j] = e[j], e[j - 1]
            terms[tuple(e)] = c
        return Poly(self.nvars, terms)

    def extend(self, nvars: int) -> 'Poly':
        """The same polynomial viewed in more variables"""
        if nvars < self.nvars:
            raise PolynomialError(f'Cannot shrink {self.nvars} variables to {nvars}')
        padding = (0,) * (nvars - self.nvars)
        return Poly(nvars, {e + padding: c for e, c in self.terms.items()})

    def _checkIndex(self, j: int) -> None:
        if not 1 <= j < self.nvars:
            raise PolynomialError(f'Index {j} is not in 1..{self.nvars - 1}')

# Demazure operators and key polynomials

def demazurePi(j: int, f: Poly) -> Poly:
    """The Demazure operator (x_j f - x_{j+1} s_j f) / (x_j - x_{j+1}),
    evaluated monomial by monomial:

    * if a >= b, x_j^a x_{j+1}^b maps to the sum of x_j^{a-t} x_{j+1}^{b+t}
      for t = 0..a-b;
    * if a < b, it maps to minus the sum of x_j^{a+t} x_{j+1}^{b-t} for
      t = 1..b-a-1.

    >>> str(demazurePi(1, Poly.monomial((2, 0))))
    'x1^2 + x1 x2 + x2^2'
    """
    f._checkIndex(j)
    terms = defaultdict(int)
    for exponent, coefficient in f.terms.items():
        a, b = exponent[j - 1], exponent[j]
        e = list(exponent)
        if a >= b:
            for t in range(a - b + 1):
                e[j - 1], e[j] = a - t, b + t
                terms[tuple(e)] += coefficient
        else:
            for t in range(1, b - a):
                e[j - 1], e[j] = a + t, b - t
                terms[tuple(e)] -= coefficient
    return Poly(f.nvars, terms)

def keyPolynomial(alpha: Sequence[int]) -> Poly:
    """The key polynomial of a weak composition: x^alpha when alpha is
    weakly decreasing, and pi_j applied to the key of alpha with parts j and
    j+1 swapped when alpha_j < alpha_{j+1} (j the first such position)."""
    alpha = tuple(alpha)
    if any(part < 0 for part in alpha):
        raise PolynomialError(f'{alpha} has a negative part')
    return _keyPolynomial(alpha)

@lru_cache(maxsize=None)
def _keyPolynomial(alpha: Exponent) -> Poly:
    for j in range(len(alpha) - 1):
        if alpha[j] < alpha[j + 1]:
            swapped = alpha[:j] + (alpha[j + 1], alpha[j]) + alpha[j + 2:]
            return demazurePi(j + 1, _keyPolynomial(swapped))
    return Poly.monomial(alpha)

def keyViaKohnert(alpha: Sequence[int]) -> Poly:
    """The key polynomial by Kohnert's rule.

    Row i of the starting diagram holds cells in columns 1..alpha_i. A move
    takes the rightmost cell of a row to the nearest empty position above
    it in the same column, jumping over occupied cells. Every reachable
    diagram contributes x^(row counts) once.
    """
    alpha = tuple(alpha)
    n = len(alpha)
    start = frozenset((row, col) for row, a in enumerate(alpha, start=1)
                      for col in range(1, a + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        diagram = queue.popleft()
        rightmost = {}
        for row, col in diagram:
            rightmost[row] = max(col, rightmost.get(row, 0))
        for row, col in rightmost.items():
            target = next((r for r in range(row - 1, 0, -1) if (r, col) not in diagram), None)
            if target is None:
                continue
            moved = (diagram - {(row, col)}) | {(target, col)}
            if moved not in seen:
                seen.add(moved)
                queue.append(moved)

    terms = defaultdict(int)
    for diagram in seen:
        weight = [0] * n
        for row, _ in diagram:
            weight[row - 1] += 1
        terms[tuple(weight)] += 1
    return Poly(n, terms)

def keyExpand(f: Poly) -> Dict[Exponent, int]:
    """Coefficients of f in the basis of key polynomials.

    x^alpha is the largest monomial of the key of alpha when x_n is the most
    significant variable, so peeling off the largest monomial terminates.
    """
    coefficients = {}
    g = f
    while g:
        alpha = g.revlexLeadingExponent()
        c = g.terms[alpha]
        coefficients[alpha] = c
        g = g - c * keyPolynomial(alpha)
    return coefficients

# Schur polynomials

def normalizePartition(lam: Sequence[int], size: int = None) -> Tuple[int, ...]:
    """Strip zeros and, when ``size`` is given, pad with zeros to that length"""
    lam = tuple(lam)
    if not typea.isPartition(lam) or any(p < 0 for p in lam):
        raise PolynomialError(f'{lam} is not a partition')
    parts = tuple(p for p in lam if p > 0)
    if size is None:
        return parts
    if len(parts) > size:
        raise TooManyPartsError(f'{lam} has more than {size} parts')
    return parts + (0,) * (size - len(parts))

def schur(lam: Sequence[int], m: int) -> Poly:
    """The Schur polynomial s_lambda(x_1, ..., x_m)

    >>> schur((2, 1), 3).coefficient((1, 1, 1))
    2
    """
    normalizePartition(lam, m)
    return _schur(normalizePartition(lam), m)

@lru_cache(maxsize=None)
def _schur(lam: Tuple[int, ...], m: int) -> Poly:
    # Branching: remove a horizontal strip filled with m
    if m == 0:
        return Poly.one(0)
    ranges = [range(lam[i + 1] if i + 1 < len(lam) else 0, lam[i] + 1)
              for i in range(min(len(lam), m - 1))]
    terms = defaultdict(int)
    total = sum(lam)
    for mu in product(*ranges):
        mu = tuple(p for p in mu if p > 0)
        sub = _schur(mu, m - 1)
        extra = total - sum(mu)
        for exponent, coefficient in sub.terms.items():
            terms[exponent + (extra,)] += coefficient
    return Poly(m, terms)

# Split-symmetric polynomials

@dataclass(frozen=True)
class SplitSet:
    """A split set D of [n-1], cutting x_1..x_n into consecutive blocks"""
    n: int
    D: Tuple[int, ...] = ()

    def __post_init__(self):
        D = tuple(sorted(set(self.D)))
        if self.n < 1:
            raise PolynomialError(f'Need at least one variable, got n = {self.n}')
        if any(not 1 <= d < self.n for d in D):
            raise PolynomialError(f'Split positions {D} are not inside 1..{self.n - 1}')
        object.__setattr__(self, 'D', D)

    @classmethod
    def full(cls, n: int) -> 'SplitSet':
        return cls(n, tuple(range(1, n)))

    @property
    def cuts(self) -> Tuple[int, ...]:
        return (0,) + self.D + (self.n,)

    @property
    def blocks(self) -> List[Tuple[int, int]]:
        """0-based slices (start, stop) of the variable blocks"""
        cuts = self.cuts
        return list(zip(cuts, cuts[1:]))

    @property
    def blockSizes(self) -> Tuple[int, ...]:
        return tuple(stop - start for start, stop in self.blocks)

def isSplitSymmetric(f: Poly, split: SplitSet) -> bool:
    """True if f is symmetric inside every block of the split"""
    if f.nvars != split.n:
        raise PolynomialError(f'Polynomial in {f.nvars} variables, split of {split.n}')
    return all(f.swapVariables(j) == f for j in range(1, split.n) if j not in split.D)

def dSchur(lambdas: Sequence[Sequence[int]], split: SplitSet) -> Poly:
    """The D-Schur polynomial: one Schur polynomial per block"""
    if len(lambdas) != len(split.blocks):
        raise PolynomialError(f'Expected {len(split.blocks)} partitions, got {len(lambdas)}')
    lambdas = tuple(normalizePartition(lam, size) for lam, size in zip(lambdas, split.blockSizes))
    return _dSchur(lambdas, split)

@lru_cache(maxsize=None)
def _dSchur(lambdas, split):
    terms = {(): 1}
    for lam, size in zip(lambdas, split.blockSizes):
        factor = _schur(normalizePartition(lam), size)
        combined = defaultdict(int)
        for e1, c1 in terms.items():
            for e2, c2 in factor.terms.items():
                combined[e1 + e2] += c1 * c2
        terms = combined
    return Poly(split.n, terms)

@dataclass
class SplitExpansion:
    """Coefficients of a polynomial in the D-Schur basis, keyed by tuples of
    partitions padded to the block sizes"""
    split: SplitSet
    coefficients: Dict[Tuple[Tuple[int, ...], ...], int] = field(default_factory=dict)

    def __post_init__(self):
        self.coefficients = {tuple(tuple(lam) for lam in k): c
                             for k, c in self.coefficients.items() if c != 0}

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, lambdas) -> int:
        key = tuple(normalizePartition(lam, size)
                    for lam, size in zip(lambdas, self.split.blockSizes))
        return self.coefficients.get(key, 0)

    def items(self):
        """Terms sorted by the concatenated partitions, largest first"""
        return sorted(self.coefficients.items(),
                      key=lambda item: sum(item[0], ()), reverse=True)

    def isMultiplicityFree(self) -> bool:
        return all(c in (0, 1) for c in self.coefficients.values())

    def reconstruct(self) -> Poly:
        result = Poly.zero(self.split.n)
        for lambdas, c in self.coefficients.items():
            result = result + c * dSchur(lambdas, self.split)
        return result

    def toObject(self) -> dict:
        return {
            'D': list(self.split.D),
            'n': self.split.n,
            'terms': [{'lambdas': [list(normalizePartition(lam)) for lam in lambdas],
                       'coeff': c} for lambdas, c in self.items()]
        }

    @classmethod
    def fromObject(cls, obj: dict) -> 'SplitExpansion':
        split = SplitSet(obj['n'], tuple(obj['D']))
        coefficients = {}
        for term in obj['terms']:
            key = tuple(normalizePartition(lam, size)
                        for lam, size in zip(term['lambdas'], split.blockSizes))
            coefficients[key] = term['coeff']
        return cls(split, coefficients)

def splitExpand(f: Poly, split: SplitSet) -> SplitExpansion:
    """The D-Schur expansion of a split-symmetric polynomial.

    The lex-largest monomial of a split-symmetric polynomial has weakly
    decreasing exponents inside every block, and it is the leading monomial
    of exactly one D-Schur polynomial, with coefficient one. Peeling it off
    repeatedly gives the expansion.

    Raises:
        NotSplitSymmetricError: if f is not symmetric inside every block
    """
    if not isSplitSymmetric(f, split):
        raise NotSplitSymmetricError(f'Polynomial is not symmetric inside the blocks of D = {list(split.D)}')
    coefficients = {}
    g = f
    while g:
        exponent = g.leadingExponent()
        c = g.terms[exponent]
        lambdas = tuple(exponent[start:stop] for start, stop in split.blocks)
        if not all(typea.isPartition(lam) for lam in lambdas):
            raise PolynomialError(f'Leading exponent {exponent} is not dominant in its blocks')
        coefficients[lambdas] = c
        g = g - c * dSchur(lambdas, split)
    logger.debug('%d D-Schur terms for D = %s', len(coefficients), list(split.D))
    return SplitExpansion(split, coefficients)

def partitionsFitting(total: int, size: int, maxPart: int = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``total`` with at most ``size`` parts, padded to ``size``"""
    if maxPart is None:
        maxPart = total
    if size == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, maxPart), -1, -1):
        if first * size < total:
            break
        for rest in partitionsFitting(total - first, size - 1, first):
            yield (first,) + rest

def splitExpandOracle(f: Poly, split: SplitSet) -> SplitExpansion:
    """The D-Schur expansion by an exact linear solve.

    For every vector of block degrees occurring in f, the candidates are all
    tuples of partitions with those degrees. Rows are indexed by the same
    tuples read as exponents, which makes the system square and
    unitriangular. Exponential; meant for cross-checking
    :func:`splitExpand`.
    """
    if not isSplitSymmetric(f, split):
        raise NotSplitSymmetricError(f'Polynomial is not symmetric inside the blocks of D = {list(split.D)}')
    degreeVectors = {tuple(sum(e[start:stop]) for start, stop in split.blocks) for e in f.terms}
    coefficients = {}
    for degrees in sorted(degreeVectors):
        candidates = list(product(*[list(partitionsFitting(d, size))
                                    for d, size in zip(degrees, split.blockSizes)]))
        exponents = [sum(lambdas, ()) for lambdas in candidates]
        polys = [dSchur(lambdas, split) for lambdas in candidates]
        matrix = sympy.Matrix(len(exponents), len(candidates),
                              lambda r, c: polys[c].coefficient(exponents[r]))
        rhs = sympy.Matrix([f.coefficient(e) for e in exponents])
        solution = matrix.LUsolve(rhs)
        for lambdas, value in zip(candidates, solution):
            if not value.is_integer:
                raise PolynomialError(f'Non-integral coefficient {value} for {lambdas}')
            if value != 0:
                coefficients[lambdas] = int(value)
    expansion = SplitExpansion(split, coefficients)
    if expansion.reconstruct() != f:
        raise PolynomialError('Linear solve does not reconstruct the polynomial')
    return expansion

def isDMultiplicityFree(f: Poly, split: SplitSet) -> bool:
    """True if every D-Schur coefficient of f is 0 or 1"""
    return splitExpand(f, split).isMultiplicityFree()

def staircaseTest(w: Sequence[int], I: Iterable[int]) -> bool:
    """Whether the key polynomial of w(n, n-1, ..., 1) is D-multiplicity-free
    for D = [n-1] - I.

    Raises:
        DescentQueryError: if I is not contained in J(w)
    """
    w = typea.checkPermutation(w)
    n = len(w)
    I = frozenset(I)
    descents = typea.leftDescents(w)
    if not I <= descents:
        raise DescentQueryError(
            f'I = {sorted(I)} is not contained in J(w) = {sorted(descents)}')
    split = SplitSet(n, tuple(d for d in range(1, n) if d not in I))
    alpha = typea.wActOnPartition(w, typea.staircase(n))
    return isDMultiplicityFree(keyPolynomial(alpha), split)
