# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         harness/census.py
# Purpose:      maximal sphericality censuses of whole groups
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
A census decides maximal sphericality for every element of a group and
compares the number of failures with the known count, if there is one:

>>> report = runCensus('A4')
>>> report.nonspherical
21
>>> report.matchesExpected
True
"""
import time
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .. import config
from .. import typea
from ..coxeter import buildSystem
from ..notation import formatElement
from ..spherical import censusWitnesses, dihedralClassification, isToric
from ..spherical import w0Classification, w0SphericalityClosedForm
from .consistency import subsets

logger = logging.getLogger(__name__)

@dataclass
class CensusReport:
    """The outcome of a census. Every entry holds the element, J(w), the
    verdict and a witness (or None)."""
    cartanType: str
    order: int
    entries: List[dict] = field(default_factory=list)
    expected: Optional[int] = None
    elapsed: float = 0.0
    crossChecks: Dict[str, bool] = field(default_factory=dict)
    disagreements: List[str] = field(default_factory=list)

    @property
    def nonspherical(self) -> int:
        return sum(1 for entry in self.entries if not entry['spherical'])

    @property
    def matchesExpected(self) -> bool:
        return self.expected is None or self.expected == self.nonspherical

    @property
    def agrees(self) -> bool:
        return self.matchesExpected and all(self.crossChecks.values())

    def nonsphericalElements(self) -> List[str]:
        return [entry['element'] for entry in self.entries if not entry['spherical']]

    def toObject(self) -> dict:
        return {
            'type': self.cartanType,
            'order': self.order,
            'nonspherical': self.nonspherical,
            'expected': self.expected,
            'matchesExpected': self.matchesExpected,
            'elapsed': round(self.elapsed, 3),
            'crossChecks': self.crossChecks,
            'disagreements': self.disagreements,
            'elements': self.entries
        }

def closedFormChecks(system, results) -> Dict[str, List[str]]:
    """Compare every closed form that applies to the group with the search.

    ``results`` pairs each element with its J(w)-witness or None, as
    returned by :func:`censusWitnesses`. The result maps the name of each
    check to the elements (or node sets) on which the two disagree.
    """
    checks = {}
    found = set(w0Classification(system))
    checks['longest element'] = [
        '{' + ','.join(map(str, sorted(I))) + '}' for I in subsets(system.nodeLabels)
        if w0SphericalityClosedForm(system, I) != (I in found)]

    if system.rank == 2:
        checks['rank two'] = [formatElement(system, w) for w, witness in results
                              if dihedralClassification(system, w) != (witness is not None)]

    if system.cartanType.family == 'A':
        bigrassmannian = []
        toric = []
        for w, witness in results:
            perm = system.oneLine(w)
            if typea.isBigrassmannian(perm) and \
                    typea.bigrassmannianSpherical(perm) != (witness is not None):
                bigrassmannian.append(formatElement(system, w))
            if typea.isToricPattern(perm) != isToric(system, w):
                toric.append(formatElement(system, w))
        checks['bigrassmannian'] = bigrassmannian
        checks['toric'] = toric
    return checks

def runCensus(cartanType, processes: int = 1, showProgress: bool = False,
              cap: int = None, paranoid: bool = False) -> CensusReport:
    """Decide maximal sphericality for every element of a group.

    Args:
        cartanType (CartanType or str): the group
        processes (int, optional): worker processes, None for one per core.
            Defaults to 1.
        showProgress (bool, optional): show a progress bar
        cap (int, optional): enumeration cap, defaults to the configured one
        paranoid (bool, optional): also compare the closed forms with the
            search, for groups of at most ``paranoidCap`` elements

    Raises:
        EnumerationCapError: if the group is larger than the cap

    Returns:
        CensusReport: the report; a count that differs from the expected
        one is logged as a warning, not raised

    >>> report = runCensus('I2(6)', paranoid=True)
    >>> report.crossChecks
    {'longest element': True, 'rank two': True}
    """
    system = buildSystem(cartanType)
    settings = config.getSettings()
    name = str(system.cartanType)
    start = time.perf_counter()
    logger.info('Census of %s started', name)

    results = censusWitnesses(system, processes, showProgress, cap)
    entries = []
    for w, witness in results:
        entries.append({
            'element': formatElement(system, w),
            'J': sorted(system.leftDescents(w)),
            'spherical': witness is not None,
            'witness': None if witness is None else list(witness)
        })

    expected = settings.get('expected', {}).get('nonspherical', {}).get(name)
    report = CensusReport(name, len(entries), entries, expected)
    if paranoid:
        paranoidCap = settings.get('paranoidCap', 10000)
        if report.order <= paranoidCap:
            for check, failures in closedFormChecks(system, results).items():
                report.crossChecks[check] = not failures
                report.disagreements.extend(f'{check}: {failure}' for failure in failures)
                if failures:
                    logger.warning('Cross-check %s disagrees on %d cases in %s',
                                   check, len(failures), name)
        else:
            logger.warning('%s has %d elements, more than paranoidCap = %d; closed forms not checked',
                           name, report.order, paranoidCap)

    report.elapsed = time.perf_counter() - start
    logger.info('Census of %s finished: %d of %d elements are not maximally spherical (%.1fs)',
                name, report.nonspherical, report.order, report.elapsed)
    if not report.matchesExpected:
        logger.warning('%s: found %d elements that are not maximally spherical, expected %s',
                       name, report.nonspherical, expected)
    return report
