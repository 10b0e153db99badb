# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         __init__.py
# Purpose:      the main file of coxsph
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------

# Get version from _version.py
from ._version import __version__

from .coxeter import CartanType, CoxeterSystem, Element, buildSystem
from .notation import parseCartanType, parseWord, parseElement

