# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         harness/expansion.py
# Purpose:      D-Schur expansions of key polynomials with cross-checks
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
>>> report = expandKey((1, 5, 2, 4, 3), (2, 4))
>>> len(report.expansion), report.multiplicityFree
(17, False)
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence, Tuple

from .. import typea
from ..notation import formatComposition, formatExpansion
from ..polyring import (SplitExpansion, SplitSet, keyPolynomial, keyViaKohnert,
                        splitExpand, splitExpandOracle)
from ..splitrule import DescentOutsideSplitError, ryExpand

logger = logging.getLogger(__name__)

ORACLES = ('peel', 'ry')

@dataclass
class ExpansionReport:
    alpha: Tuple[int, ...]
    expansion: SplitExpansion
    oracle: str = 'peel'
    crossChecks: Dict[str, bool] = field(default_factory=dict)

    @property
    def multiplicityFree(self) -> bool:
        return self.expansion.isMultiplicityFree()

    @property
    def agrees(self) -> bool:
        return all(self.crossChecks.values())

    def toObject(self) -> dict:
        obj = self.expansion.toObject()
        obj.update({
            'alpha': formatComposition(self.alpha),
            'oracle': self.oracle,
            'multiplicityFree': self.multiplicityFree,
            'crossChecked': len(self.crossChecks) > 0,
            'crossChecks': self.crossChecks,
            'agrees': self.agrees,
            'text': formatExpansion(self.expansion)
        })
        return obj

def expandKey(alpha: Sequence[int], D: Iterable[int], oracle: str = 'peel',
              crossCheck: bool = False, paranoid: bool = False) -> ExpansionReport:
    """Expand the key polynomial of alpha in the D-Schur basis.

    Args:
        alpha (sequence): a weak composition of length n
        D (iterable): the split positions, a subset of 1..n-1
        oracle (str, optional): ``'peel'`` (lex-leading peeling) or ``'ry'``
            (tableau sequences). Defaults to 'peel'.
        crossCheck (bool, optional): compute the other oracle as well
        paranoid (bool, optional): also run the linear-solve oracle and
            compare Demazure with Kohnert

    Raises:
        DescentOutsideSplitError: if a descent of alpha is not in D
        ValueError: for an unknown oracle
    """
    alpha = tuple(alpha)
    if oracle not in ORACLES:
        raise ValueError(f'Unknown oracle {oracle!r}; expected one of {", ".join(ORACLES)}')
    split = SplitSet(len(alpha), tuple(D))
    outside = typea.compositionDescents(alpha) - set(split.D)
    if outside:
        raise DescentOutsideSplitError(
            f'Descents {sorted(outside)} of {alpha} are not in D = {list(split.D)}')

    computations = {
        'peel': lambda: splitExpand(keyPolynomial(alpha), split),
        'ry': lambda: ryExpand(alpha, split)
    }
    expansion = computations[oracle]()
    report = ExpansionReport(alpha, expansion, oracle)

    if crossCheck or paranoid:
        other = 'ry' if oracle == 'peel' else 'peel'
        report.crossChecks[other] = computations[other]() == expansion
    if paranoid:
        report.crossChecks['linear solve'] = \
            splitExpandOracle(keyPolynomial(alpha), split) == expansion
        report.crossChecks['kohnert'] = keyViaKohnert(alpha) == keyPolynomial(alpha)

    for name, agrees in report.crossChecks.items():
        if not agrees:
            logger.warning('Cross-check %s disagrees for %s', name, formatComposition(alpha))
    return report
