# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         harness/consistency.py
# Purpose:      witness search against the staircase key test in S_n
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
For every w in S_n and every I contained in J(w), the witness search and
the staircase key test should agree:

>>> report = verifyConsistency(4)
>>> report.agrees, report.nonMaximallySpherical
(True, [])
"""
import time
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import List

from progress.bar import Bar

from .. import config
from .. import typea
from ..coxeter import EnumerationCapError, buildSystem
from ..notation import formatPermutation
from ..polyring import staircaseTest
from ..spherical import WitnessSearch, isISpherical

logger = logging.getLogger(__name__)

@dataclass
class ConsistencyReport:
    n: int
    checked: int = 0
    disagreements: List[dict] = field(default_factory=list)
    nonMaximallySpherical: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def agrees(self) -> bool:
        return not self.disagreements

    def toObject(self) -> dict:
        return {
            'n': self.n,
            'checked': self.checked,
            'agrees': self.agrees,
            'disagreements': self.disagreements,
            'nonMaximallySpherical': self.nonMaximallySpherical,
            'elapsed': round(self.elapsed, 3)
        }

def subsets(nodes) -> List[frozenset]:
    nodes = sorted(nodes)
    return [frozenset(c) for k in range(len(nodes) + 1) for c in combinations(nodes, k)]

def verifyConsistency(n: int, showProgress: bool = False, cap: int = None) -> ConsistencyReport:
    """Compare the witness search with the staircase test on all of S_n.

    Raises:
        EnumerationCapError: if n exceeds the configured cap
    """
    cap = config.getSettings()['consistencyCap'] if cap is None else cap
    if n > cap:
        raise EnumerationCapError(f'verify-consistency is capped at n = {cap}, got n = {n}')
    start = time.perf_counter()
    report = ConsistencyReport(n)
    if n < 2:
        return report

    system = buildSystem(f'A{n - 1}')
    search = WitnessSearch(system)
    perms = list(typea.permutations(n))
    bar = Bar(f'S_{n}', max=len(perms)) if showProgress else None
    logger.info('Consistency sweep over S_%d started', n)

    for perm in perms:
        w = system.fromOneLine(perm)
        J = system.leftDescents(w)
        for I in subsets(J):
            spherical = isISpherical(system, w, I, search)
            staircase = staircaseTest(perm, I)
            report.checked += 1
            if spherical != staircase:
                report.disagreements.append({
                    'w': formatPermutation(perm), 'I': sorted(I),
                    'spherical': spherical, 'staircase': staircase
                })
                logger.warning('%s with I = %s: search %s, staircase %s',
                               formatPermutation(perm), sorted(I), spherical, staircase)
            if I == J and not spherical:
                report.nonMaximallySpherical.append(formatPermutation(perm))
        if bar is not None:
            bar.next()
    if bar is not None:
        bar.finish()

    report.elapsed = time.perf_counter() - start
    logger.info('Consistency sweep over S_%d finished: %d pairs, %d disagreements (%.1fs)',
                n, report.checked, len(report.disagreements), report.elapsed)
    return report
