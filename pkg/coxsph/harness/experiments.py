# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         harness/experiments.py
# Purpose:      empirical checks of open statements about sphericality
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
Experiments collect evidence for statements that are believed but not
proved. Each one returns an :class:`ExperimentReport` with a table and a
``supported`` flag; a report never turns a statement into a theorem, it
only says whether a counterexample was found in the range tried.

The experiments are registered by name in :data:`EXPERIMENTS`; their
default parameters live under ``experiments:`` in ``defaults.yml``.
"""
import math
import inspect
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np

from .. import config
from .. import typea
from ..coxeter import buildSystem
from ..notation import formatComposition, formatPermutation
from ..polyring import SplitSet, isDMultiplicityFree, keyPolynomial
from ..spherical import WitnessSearch, isISpherical, isMaximallySpherical, nonsphericalCensus
from .consistency import subsets

logger = logging.getLogger(__name__)

class ExperimentError(Exception):
    pass

@dataclass
class ExperimentReport:
    name: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    columns: List[str] = field(default_factory=list)
    rows: List[list] = field(default_factory=list)
    supported: bool = True
    notes: List[str] = field(default_factory=list)

    def toObject(self) -> dict:
        return {
            'name': self.name,
            'parameters': self.parameters,
            'columns': self.columns,
            'rows': self.rows,
            'supported': self.supported,
            'notes': self.notes
        }

def _symmetricGroup(n: int):
    return buildSystem(f'A{n - 1}')

def nonsphericalPermutations(n: int) -> List[Tuple[int, ...]]:
    """One-line notation of every w in S_n that is not maximally spherical"""
    if n < 2:
        return []
    system = _symmetricGroup(n)
    return [system.oneLine(w) for w in nonsphericalCensus(system)]

def patternAvoidance(n: int = 6) -> ExperimentReport:
    """Is w in S_n not maximally spherical exactly when it contains one of
    the non-maximally-spherical elements of S_5 as a pattern?"""
    patterns = nonsphericalPermutations(5)
    system = _symmetricGroup(n)
    search = WitnessSearch(system)
    counts = {'both': 0, 'search only': 0, 'pattern only': 0, 'neither': 0}
    mismatches = []
    for perm in typea.permutations(n):
        spherical = isMaximallySpherical(system, system.fromOneLine(perm), search)
        contains = not typea.avoidsPatterns(perm, patterns)
        if not spherical and contains:
            counts['both'] += 1
        elif not spherical:
            counts['search only'] += 1
            mismatches.append(formatPermutation(perm))
        elif contains:
            counts['pattern only'] += 1
            mismatches.append(formatPermutation(perm))
        else:
            counts['neither'] += 1

    report = ExperimentReport('pattern-avoidance', {'n': n, 'patterns': len(patterns)},
                              ['not spherical, contains', 'not spherical, avoids',
                               'spherical, contains', 'spherical, avoids'],
                              [[counts['both'], counts['search only'],
                                counts['pattern only'], counts['neither']]],
                              supported=not mismatches)
    if mismatches:
        report.notes.append('Mismatches: ' + ', '.join(mismatches[:20]))
    return report

def vanishingDensity(minN: int = 2, maxN: int = 6) -> ExperimentReport:
    """The fraction of maximally spherical elements of S_n, which is
    expected to tend to zero"""
    expected = config.getSettings().get('expected', {}).get('nonspherical', {})
    report = ExperimentReport('vanishing-density', {'minN': minN, 'maxN': maxN},
                              ['n', 'n!', 'not spherical', 'expected', 'spherical fraction'])
    for n in range(minN, maxN + 1):
        total = math.factorial(n)
        bad = len(nonsphericalPermutations(n))
        known = expected.get(f'A{n - 1}')
        report.rows.append([n, total, bad, '' if known is None else known,
                            round((total - bad) / total, 4)])
        if known is not None and known != bad:
            report.supported = False
            report.notes.append(f'S_{n}: found {bad}, expected {known}')
            logger.warning('S_%d: found %d non-spherical elements, expected %s', n, bad, known)
    fractions = [row[-1] for row in report.rows if row[0] >= 4]
    if any(b > a for a, b in zip(fractions, fractions[1:])):
        report.notes.append('The spherical fraction is not decreasing from n = 4 on')
    return report

def upOne(n: int = 4, samples: int = 200, maxPart: int = 3, seed: int = 2021) -> ExperimentReport:
    """If the key of alpha is not D-multiplicity-free, neither is the key of
    alpha with one part raised to a new value. D ranges over every split
    containing the descents of alpha, and the raised composition must keep
    its descents inside D."""
    rng = np.random.default_rng(seed)
    tried = splits = tested = 0
    counterexamples = []
    for _ in range(samples):
        alpha = tuple(int(part) for part in rng.integers(0, maxPart + 1, size=n))
        descents = typea.compositionDescents(alpha)
        tried += 1
        key = keyPolynomial(alpha)
        for D in subsets(range(1, n)):
            if not descents <= D:
                continue
            splits += 1
            split = SplitSet(n, tuple(sorted(D)))
            if isDMultiplicityFree(key, split):
                continue
            for _, lifted in typea.upOneCandidates(alpha, D):
                tested += 1
                if isDMultiplicityFree(keyPolynomial(lifted), split):
                    counterexamples.append(f'{formatComposition(alpha)} -> {formatComposition(lifted)}'
                                           f' with D = {sorted(D)}')

    report = ExperimentReport('upone', {'n': n, 'samples': samples, 'maxPart': maxPart, 'seed': seed},
                              ['samples', 'splits', 'pairs tested', 'counterexamples'],
                              [[tried, splits, tested, len(counterexamples)]],
                              supported=not counterexamples)
    report.notes.extend(counterexamples[:20])
    return report

def distinctLambda(n: int = 4, maxPart: int = 5) -> ExperimentReport:
    """If w is not I-spherical, some strictly decreasing lambda makes the key
    of w lambda fail to be D-multiplicity-free, D = [n-1] - I"""
    system = _symmetricGroup(n)
    search = WitnessSearch(system)
    lambdas = list(typea.distinctPartitions(n, maxPart))
    pairs = found = 0
    missing = []
    for perm in typea.permutations(n):
        w = system.fromOneLine(perm)
        for I in subsets(system.leftDescents(w)):
            if isISpherical(system, w, I, search):
                continue
            pairs += 1
            split = SplitSet(n, tuple(d for d in range(1, n) if d not in I))
            if any(not isDMultiplicityFree(keyPolynomial(typea.wActOnPartition(perm, lam)), split)
                   for lam in lambdas):
                found += 1
            else:
                missing.append(f'{formatPermutation(perm)} with I = {sorted(I)}')

    report = ExperimentReport('distinct-lambda', {'n': n, 'maxPart': maxPart},
                              ['non-spherical pairs', 'with a lambda', 'without'],
                              [[pairs, found, len(missing)]],
                              supported=not missing)
    report.notes.extend(missing[:20])
    return report

def bigrassmannian(n: int = 6) -> ExperimentReport:
    """The closed form for bigrassmannian permutations against the search"""
    system = _symmetricGroup(n)
    search = WitnessSearch(system)
    byShape = {}
    for perm in typea.permutations(n):
        if not typea.isBigrassmannian(perm):
            continue
        shape = typea.bigrassmannianShape(perm)
        closed = typea.bigrassmannianSpherical(perm)
        found = isMaximallySpherical(system, system.fromOneLine(perm), search)
        total, agreeing, _ = byShape.get(shape, (0, 0, closed))
        byShape[shape] = (total + 1, agreeing + (closed == found), closed)

    report = ExperimentReport('bigrassmannian', {'n': n},
                              ['rows', 'columns', 'count', 'spherical', 'agreeing'])
    for (a, b), (total, agreeing, closed) in sorted(byShape.items()):
        report.rows.append([a, b, total, closed, agreeing])
        if agreeing != total:
            report.supported = False
    return report

def dominantNonsphericalCodes(n: int) -> List[Tuple[int, ...]]:
    """Codes of the dominant permutations of S_n that are not maximally
    spherical, sorted"""
    return sorted(typea.code(perm) for perm in nonsphericalPermutations(n)
                  if typea.isDominant(perm))

def dominant(n: int = 5) -> ExperimentReport:
    codes = dominantNonsphericalCodes(n)
    report = ExperimentReport('dominant', {'n': n}, ['code', 'permutation'])
    for c in codes:
        report.rows.append([formatComposition(c), formatPermutation(typea.permFromCode(c))])
    report.notes.append(f'{len(codes)} dominant permutations of S_{n} are not maximally spherical')
    return report

EXPERIMENTS = {
    'pattern-avoidance': patternAvoidance,
    'vanishing-density': vanishingDensity,
    'upone': upOne,
    'distinct-lambda': distinctLambda,
    'bigrassmannian': bigrassmannian,
    'dominant': dominant
}

def runExperiment(name: str, **overrides) -> ExperimentReport:
    """Run an experiment with its configured parameters, updated with
    ``overrides`` (None values are ignored). For vanishing-density, ``n``
    sets the largest n.

    Raises:
        ExperimentError: for an unknown name or a parameter the experiment
            does not take
    """
    if name not in EXPERIMENTS:
        raise ExperimentError(f'Unknown experiment {name!r}; expected one of {", ".join(EXPERIMENTS)}')
    accepted = inspect.signature(EXPERIMENTS[name]).parameters
    parameters = dict(config.getSettings().get('experiments', {}).get(name, {}))
    if name == 'vanishing-density' and overrides.get('n') is not None:
        overrides['maxN'] = overrides.pop('n')
    for key, value in overrides.items():
        if value is None:
            continue
        if key not in accepted:
            raise ExperimentError(f'Experiment {name} does not take a parameter {key!r}')
        parameters[key] = value
    logger.info('Experiment %s with %s', name, parameters)
    return EXPERIMENTS[name](**parameters)
