# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         config.py
# Purpose:      loading the coxsph configuration
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
Settings live in the YAML file ``defaults.yml`` next to this module. A
user file can be merged over the defaults, and a few values can be
overridden from the environment:

>>> settings = load()
>>> settings['consistencyCap']
6
"""
import os
import copy
import logging
import yaml

logger = logging.getLogger(__name__)

DEFAULTS_PATH = os.path.join(os.path.dirname(__file__), 'defaults.yml')
ENUM_CAP_VARIABLE = 'COXSPH_ENUM_CAP'

class ConfigError(Exception):
    """Raised for unreadable configuration files or invalid overrides"""
    pass

def readYAML(filepath: str) -> dict:
    if not os.path.exists(filepath):
        raise ConfigError(f'Configuration file ({ filepath }) does not exist')
    with open(filepath, 'r') as stream:
        contents = yaml.safe_load(stream)
    if contents is None:
        return {}
    if not isinstance(contents, dict):
        raise ConfigError(f'Configuration file ({ filepath }) is not a mapping')
    return contents

def merge(base: dict, other: dict) -> dict:
    """Recursively merge ``other`` into a copy of ``base``"""
    merged = copy.deepcopy(base)
    for key, value in other.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge(merged[key], value)
        else:
            merged[key] = value
    return merged

def load(filepath: str = None, environ: dict = None) -> dict:
    """Load the settings.

    Args:
        filepath (str, optional): a YAML file merged over the defaults.
        environ (dict, optional): environment to read overrides from,
            defaults to ``os.environ``.

    Raises:
        ConfigError: if a file is missing or an override is not an integer

    Returns:
        dict: the settings
    """
    settings = readYAML(DEFAULTS_PATH)
    if filepath is not None:
        settings = merge(settings, readYAML(filepath))
        logger.debug('Merged configuration from %s', filepath)

    environ = os.environ if environ is None else environ
    if ENUM_CAP_VARIABLE in environ:
        value = environ[ENUM_CAP_VARIABLE]
        try:
            settings['enumerationCap'] = int(value)
        except ValueError:
            raise ConfigError(f'{ENUM_CAP_VARIABLE} must be an integer, got {value!r}')
    return settings

_SETTINGS = None

def getSettings() -> dict:
    """The process-wide settings, loaded on first use"""
    global _SETTINGS
    if _SETTINGS is None:
        _SETTINGS = load()
    return _SETTINGS

def setSettings(settings: dict) -> None:
    global _SETTINGS
    _SETTINGS = settings
