# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         splitrule.py
# Purpose:      D-Schur expansions of key polynomials by tableau sequences
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
A combinatorial rule for the D-Schur expansion of a key polynomial, used as
an independent check on :func:`coxsph.polyring.splitExpand`.

The coefficient of (lambda^1, ..., lambda^k) in the expansion of the key of
alpha counts the sequences of increasing tableaux (T_1, ..., T_k) such that
T_i has shape lambda^i, every entry of T_i exceeds the cut d_{i-1}, the
concatenated row words form a reduced word of w[alpha], and the
Edelman-Greene column insertion of that word is the tableau T[alpha].

>>> buildTAlpha((0, 0, 0, 2, 1))
IncreasingTableau(rows=((4, 5), (5,)))
>>> egColumnInsert((5, 4, 5))
IncreasingTableau(rows=((4, 5), (5,)))
>>> rowWord(IncreasingTableau(((4, 5), (5,))))
(5, 4, 5)
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from . import typea
from .polyring import SplitExpansion, SplitSet, keyPolynomial, normalizePartition, splitExpand
from .words import NotReducedError

logger = logging.getLogger(__name__)

class SplitRuleError(Exception):
    pass

class DescentOutsideSplitError(SplitRuleError):
    """Raised when the key of alpha is not symmetric in the blocks of D"""
    pass

class TableauDiscrepancyError(SplitRuleError):
    """Raised when T[alpha] does not read back to w[alpha], or when the
    tableau rule disagrees with the polynomial expansion"""
    pass

@dataclass(frozen=True)
class IncreasingTableau:
    """A filling of a Young diagram, strictly increasing along rows and
    down columns. Rows are listed top to bottom."""
    rows: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        for r, row in enumerate(rows):
            if not row:
                raise SplitRuleError('Tableau rows cannot be empty')
            if any(entry < 1 for entry in row):
                raise SplitRuleError(f'Row {row} has a non-positive entry')
            if any(row[c] >= row[c + 1] for c in range(len(row) - 1)):
                raise SplitRuleError(f'Row {row} is not strictly increasing')
            if r > 0:
                above = rows[r - 1]
                if len(row) > len(above):
                    raise SplitRuleError(f'Rows {above} and {row} do not form a partition shape')
                if any(row[c] <= above[c] for c in range(len(row))):
                    raise SplitRuleError(f'Columns of {rows} are not strictly increasing')
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def fromColumns(cls, columns: Sequence[Sequence[int]]) -> 'IncreasingTableau':
        height = max((len(column) for column in columns), default=0)
        return cls(tuple(tuple(column[r] for column in columns if len(column) > r)
                         for r in range(height)))

    @property
    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        width = len(self.rows[0]) if self.rows else 0
        return tuple(tuple(row[c] for row in self.rows if len(row) > c)
                     for c in range(width))

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def __len__(self) -> int:
        return sum(self.shape)

    def __str__(self) -> str:
        if not self.rows:
            return '∅'
        return '/'.join(' '.join(str(entry) for entry in row) for row in self.rows)

    def minimum(self) -> Optional[int]:
        """The smallest entry, or None for the empty tableau"""
        return min((row[0] for row in self.rows), default=None)

    def toObject(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

def buildTAlpha(alpha: Sequence[int]) -> IncreasingTableau:
    """The tableau T[alpha], built column by column from w = w[alpha]:
    i_1 is the largest descent of w, and each following entry is the
    rightmost descent left of the previous one in w s_{i_1} s_{i_2} ...
    The column lists these entries bottom to top. The next column starts
    from the permutation reached, until it is the identity.

    >>> buildTAlpha((2, 1, 0)).rows
    ((1, 2), (2,))
    >>> buildTAlpha((0, 0)).rows
    ()
    """
    alpha = tuple(alpha)
    w = list(typea.permFromCode(alpha))
    columns = []
    while typea.descents(w):
        column = []
        i = max(typea.descents(w))
        while i is not None:
            column.append(i)
            w[i - 1], w[i] = w[i], w[i - 1]
            i = max((d for d in typea.descents(w) if d < i), default=None)
        columns.append(sorted(column))
    tableau = IncreasingTableau.fromColumns(columns)

    expected = typea.permFromCode(alpha)
    if typea.permutationFromWord(columnReadingWord(tableau), len(expected)) != expected:
        logger.warning('T[%s] = %s does not read back to %s', alpha, tableau, expected)
        raise TableauDiscrepancyError(f'T[{alpha}] does not read back to w[alpha] = {expected}')
    return tableau

def columnReadingWord(tableau: IncreasingTableau) -> Tuple[int, ...]:
    """Columns from right to left, each read top to bottom"""
    return tuple(entry for column in reversed(tableau.columns) for entry in column)

def rowWord(tableau: IncreasingTableau) -> Tuple[int, ...]:
    """Rows from top to bottom, each read right to left"""
    return tuple(entry for row in tableau.rows for entry in reversed(row))

def _insertLetter(columns: List[List[int]], x: int) -> None:
    c = 0
    while True:
        if c == len(columns):
            columns.append([x])
            return
        column = columns[c]
        larger = [y for y in column if y > x]
        if not larger:
            if x in column:
                raise NotReducedError(f'Inserting {x} twice into column {column}')
            column.append(x)
            return
        y = min(larger)
        if y == x + 1 and x in column:
            # the column is unchanged and x + 1 moves on
            x = y
        else:
            column[column.index(y)] = x
            x = y
        c += 1

def egColumnInsert(word: Sequence[int]) -> IncreasingTableau:
    """The Edelman-Greene column insertion tableau of a reduced word.

    Inserting x into a column bumps the smallest entry y > x into the next
    column, with y replaced by x; if no such y exists, x is appended. When
    y = x + 1 and x is already present, the column stays as it is and x + 1
    is inserted into the next column.

    >>> egColumnInsert((4, 5, 4)).rows
    ((4, 5), (5,))
    >>> egColumnInsert((1, 3)).rows
    ((1,), (3,))

    Raises:
        NotReducedError: if the word is not reduced
    """
    word = tuple(word)
    if any(letter < 1 for letter in word) or not typea.isReducedWord(word):
        raise NotReducedError(f'{word} is not a reduced word')
    columns = []
    for letter in word:
        _insertLetter(columns, letter)
    return IncreasingTableau.fromColumns(columns)

def _swapValues(v: Tuple[int, ...], x: int) -> Tuple[int, ...]:
    """s_x v: exchange the values x and x + 1"""
    return tuple(x + 1 if value == x else x if value == x + 1 else value for value in v)

def _checkAlpha(alpha: Sequence[int], split: SplitSet) -> Tuple[int, ...]:
    alpha = tuple(alpha)
    if len(alpha) != split.n:
        raise SplitRuleError(f'{alpha} has length {len(alpha)}, the split is of {split.n} variables')
    outside = typea.compositionDescents(alpha) - set(split.D)
    if outside:
        raise DescentOutsideSplitError(
            f'Descents {sorted(outside)} of {alpha} are not in D = {list(split.D)}')
    return alpha

def tableauSequences(alpha: Sequence[int], split: SplitSet,
                     lambdas: Sequence[Sequence[int]] = None) -> Iterator[Tuple[IncreasingTableau, ...]]:
    """Every tableau sequence counted by the rule, one tableau per block.
    With ``lambdas``, only the sequences of those shapes.

    The search builds a reduced word of w[alpha] letter by letter: each
    letter is a left descent of what remains, read into the current row
    from right to left. Edelman-Greene insertion runs alongside, and a
    branch dies as soon as the insertion tableau leaves the shape of
    T[alpha].
    """
    alpha = _checkAlpha(alpha, split)
    if lambdas is not None:
        wanted = tuple(normalizePartition(lam) for lam in lambdas)
        for sequence in tableauSequences(alpha, split):
            if tuple(tableau.shape for tableau in sequence) == wanted:
                yield sequence
        return

    target = buildTAlpha(alpha).columns
    cuts = split.cuts
    sizes = split.blockSizes
    w = typea.permFromCode(alpha)
    identity = tuple(range(1, len(w) + 1))

    def fits(columns):
        return len(columns) <= len(target) and \
            all(len(column) <= len(target[c]) for c, column in enumerate(columns))

    def closeRow(rows, current):
        row = tuple(reversed(current))
        if rows:
            above = rows[-1]
            if len(row) > len(above) or any(row[c] <= above[c] for c in range(len(row))):
                return None
        return rows + (row,)

    def walk(v, b, done, rows, current, columns):
        if v == identity:
            if current:
                rows = closeRow(rows, current)
                if rows is None:
                    return
            if tuple(tuple(column) for column in columns) == target:
                yield done + (IncreasingTableau(rows),) + \
                    (IncreasingTableau(),) * (len(sizes) - b - 1)
            return

        rowFull = rows and len(current) >= len(rows[-1])
        if len(rows) < sizes[b] and not rowFull:
            for x in sorted(typea.leftDescents(v)):
                if x <= cuts[b] or (current and x >= current[-1]):
                    continue
                inserted = [list(column) for column in columns]
                _insertLetter(inserted, x)
                if fits(inserted):
                    yield from walk(_swapValues(v, x), b, done, rows, current + (x,), inserted)

        if current:
            closed = closeRow(rows, current)
            if closed is not None:
                yield from walk(v, b, done, closed, (), columns)
        elif b + 1 < len(sizes):
            yield from walk(v, b + 1, done + (IncreasingTableau(rows),), (), (), columns)

    yield from walk(w, 0, (), (), (), [])

def ryExpand(alpha: Sequence[int], split: SplitSet, crossCheck: bool = False) -> SplitExpansion:
    """The D-Schur expansion of the key of alpha by counting tableau
    sequences.

    >>> expansion = ryExpand((0, 0, 0, 2, 1, 0), SplitSet(6, (1, 2, 4, 5)))
    >>> expansion[(1,), (1,), (1, 0), (0,), (0,)]
    2

    Raises:
        DescentOutsideSplitError: if a descent of alpha is not in D
        TableauDiscrepancyError: with ``crossCheck``, if the polynomial expansion
            disagrees
    """
    alpha = _checkAlpha(alpha, split)
    counts = Counter()
    for sequence in tableauSequences(alpha, split):
        key = tuple(normalizePartition(tableau.shape, size)
                    for tableau, size in zip(sequence, split.blockSizes))
        counts[key] += 1
    expansion = SplitExpansion(split, dict(counts))
    if crossCheck:
        expected = splitExpand(keyPolynomial(alpha), split)
        if expected != expansion:
            logger.warning('Tableau rule and polynomial expansion disagree for %s', alpha)
            raise TableauDiscrepancyError(f'Tableau rule and polynomial expansion disagree for {alpha}')
    return expansion
