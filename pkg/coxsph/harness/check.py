# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         harness/check.py
# Purpose:      deciding I-sphericality of a single element
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

from .. import config
from .. import typea
from ..coxeter import buildSystem
from ..notation import formatElement, parseElement
from ..polyring import staircaseTest
from ..spherical import (WitnessSearch, certificate, dihedralClassification, findWitness,
                         verifyWitness, verifyWitnessGL,
                         w0SphericalityClosedForm)

logger = logging.getLogger(__name__)

@dataclass
class CheckReport:
    cartanType: str
    element: str
    length: int
    J: List[int]
    I: List[int]
    witness: Optional[List[int]] = None
    certificate: Optional[dict] = None
    crossChecks: Dict[str, bool] = field(default_factory=dict)

    @property
    def spherical(self) -> bool:
        return self.witness is not None

    @property
    def agrees(self) -> bool:
        return all(self.crossChecks.values())

    def toObject(self) -> dict:
        return {
            'type': self.cartanType,
            'element': self.element,
            'length': self.length,
            'J': self.J,
            'I': self.I,
            'spherical': self.spherical,
            'witness': self.witness,
            'certificate': self.certificate,
            'crossChecks': self.crossChecks
        }

def checkElement(cartanType, element, I: Iterable[int] = None,
                 paranoid: bool = False) -> CheckReport:
    """Decide whether an element is I-spherical.

    Args:
        cartanType (CartanType or str): the group
        element (Element or str): the element, or its text notation
        I (iterable, optional): the node set, defaults to J(w)
        paranoid (bool, optional): also compare with every closed form and
            independent check that applies

    Raises:
        SphericalQueryError: if I is not contained in J(w)

    >>> report = checkElement('A4', '24531')
    >>> report.J, report.spherical
    ([1, 3], False)
    """
    system = buildSystem(cartanType)
    w = parseElement(system, element) if isinstance(element, str) else element
    J = system.leftDescents(w)
    I = J if I is None else frozenset(I)
    search = WitnessSearch(system)
    witness = findWitness(system, w, I, search)

    report = CheckReport(str(system.cartanType), formatElement(system, w),
                         system.length(w), sorted(J), sorted(I))
    if witness is not None:
        report.witness = list(witness)
        report.certificate = certificate(system, w, I, witness).toObject()

    if paranoid:
        spherical = witness is not None
        checks = report.crossChecks
        if witness is not None:
            checks['recount'] = verifyWitness(system, w, I, witness)
        if w == system.longestElement():
            checks['longest element'] = w0SphericalityClosedForm(system, I) == spherical
        if system.rank == 2 and I == J:
            checks['rank two'] = dihedralClassification(system, w) == spherical
        if system.cartanType.family == 'A':
            perm = system.oneLine(w)
            if witness is not None:
                checks['general linear form'] = verifyWitnessGL(perm, I, witness)
            if typea.isBigrassmannian(perm) and I == J:
                checks['bigrassmannian'] = typea.bigrassmannianSpherical(perm) == spherical
            if len(perm) <= config.getSettings()['consistencyCap']:
                checks['staircase'] = staircaseTest(perm, I) == spherical
        for name, agrees in checks.items():
            if not agrees:
                logger.warning('Cross-check %s disagrees for %s in %s', name, report.element, report.cartanType)
    return report
