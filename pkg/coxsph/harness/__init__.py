"""Runners behind the ``coxsph`` command: censuses, single checks, key
expansions, the consistency sweep and experiments."""
from .census import CensusReport, runCensus
from .check import CheckReport, checkElement
from .expansion import ExpansionReport, expandKey
from .consistency import ConsistencyReport, verifyConsistency
from .experiments import EXPERIMENTS, ExperimentError, ExperimentReport, runExperiment
