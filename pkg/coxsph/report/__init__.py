# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
# Name:         report/__init__.py
# Purpose:      rendering harness results as text and HTML
#
# Authors:      coxsph contributors
#
# Copyright:    Copyright © 2026-present coxsph contributors
# License:      see LICENSE
# ------------------------------------------------------------------------------
"""
Results of the harness (censuses, single checks, key expansions,
consistency sweeps and experiments) can be rendered as plain text tables or
as standalone HTML files. The module uses `Jinja <https://palletsprojects.com/p/jinja/>`_
templates stored next to it. Every result object has a ``toObject()`` method
returning plain lists and dicts; that object is what the templates see, and
what ``--json`` writes.

>>> from coxsph.harness.census import runCensus
>>> report = runCensus('A3')
>>> toText('census', report).splitlines()[2]
'Not maximally spherical: 0 (expected 0, ok)'
>>> page = toFile('census', report, html=True)
>>> page.startswith('<!DOCTYPE html>')
True
"""
import jinja2
import os.path as path
from .. import __version__

KINDS = ('census', 'check', 'expansion', 'consistency', 'experiment')

# Paths of the Jinja templates
CUR_DIR = path.dirname(__file__)
TEMPLATE_LOADER = jinja2.FileSystemLoader(searchpath=CUR_DIR)
TEMPLATE_ENV = jinja2.Environment(loader=TEMPLATE_LOADER, trim_blocks=True,
                                  lstrip_blocks=True)
HTML = TEMPLATE_ENV.get_template('report.html')

class ReportError(Exception):
    pass

def _object(result):
    return result.toObject() if hasattr(result, 'toObject') else result

def _template(kind):
    if kind not in KINDS:
        raise ReportError(f'Unknown report kind {kind!r}; expected one of {", ".join(KINDS)}')
    return TEMPLATE_ENV.get_template(f'{kind}.txt')

def toText(kind: str, result) -> str:
    """Render a result as a plain text report.

    Args:
        kind (str): one of ``census``, ``check``, ``expansion``,
            ``consistency`` or ``experiment``
        result: a result object with a ``toObject()`` method, or the
            object itself

    Returns:
        str: the report
    """
    return _template(kind).render(report=_object(result), version=__version__)

def toFile(kind: str, result, filepath: str = None, html: bool = False):
    """Export a result to a text or HTML file.

    Args:
        kind (str): the kind of result, see :func:`toText`
        result: the result object
        filepath (string, optional): If a filepath is passed, the report
            is written to that file, otherwise it is returned.
            Defaults to None.
        html (bool, optional): Write a standalone HTML page instead of
            text. Defaults to False.

    Returns:
        str: The report is returned if no ``filepath`` is specified.
    """
    if html:
        _template(kind)
        body = toText(kind, result)
        output = HTML.render(kind=kind, report=_object(result), body=body,
                             version=__version__)
    else:
        output = toText(kind, result)
    if filepath is None:
        return output
    else:
        with open(filepath, 'w') as handle:
            handle.write(output)
