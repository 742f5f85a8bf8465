# -*- coding: utf-8 -*-
"""
Check records, suite reports and their text and JSON renderings
"""

from __future__ import absolute_import

import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from kenstat.exceptions import ReportError
from kenstat.utils.styles import Style, colored, status_colored


logger = logging.getLogger(__name__)


PASS = 'pass'
FAIL = 'fail'
SKIP = 'skip'


@dataclass(frozen=True)
class CheckRecord:
    """
    One verified claim

    `kind` is 'residual' (pass iff |value| <= tol), 'margin' (pass iff
    value >= -tol) or 'positive' (pass iff value > tol). A skipped record
    has no value.
    """
    name: str
    anchor: str
    value: Optional[float]
    tol: float
    kind: str = 'residual'
    skipped: bool = False
    detail: Dict = field(default_factory=dict)

    @property
    def status(self):
        if self.skipped or self.value is None:
            return SKIP
        if self.kind == 'margin':
            return PASS if self.value >= -self.tol else FAIL
        if self.kind == 'positive':
            return PASS if self.value > self.tol else FAIL
        return PASS if abs(self.value) <= self.tol else FAIL

    def as_dict(self):
        record = {
            'name': self.name,
            'anchor': self.anchor,
            'value': self.value,
            'tol': self.tol,
            'pass': self.status == PASS,
            'status': self.status,
        }
        if self.detail:
            record['detail'] = self.detail
        return record


def residual(name, anchor, value, tol, **detail):
    return CheckRecord(name=name, anchor=anchor, value=float(value), tol=tol, detail=detail)


def margin(name, anchor, value, tol, **detail):
    return CheckRecord(name=name, anchor=anchor, value=float(value), tol=tol, kind='margin', detail=detail)


def positive(name, anchor, value, tol, **detail):
    return CheckRecord(name=name, anchor=anchor, value=float(value), tol=tol, kind='positive', detail=detail)


def skipped(name, anchor, tol, reason):
    return CheckRecord(name=name, anchor=anchor, value=None, tol=tol, skipped=True, detail={'reason': reason})


@dataclass
class SuiteReport:
    config: Dict
    checks: List[CheckRecord] = field(default_factory=list)
    runtime_ms: int = 0

    @property
    def summary(self):
        counts = {PASS: 0, FAIL: 0, SKIP: 0}
        for check in self.checks:
            counts[check.status] += 1
        return {'passed': counts[PASS], 'failed': counts[FAIL], 'skipped': counts[SKIP]}

    @property
    def ok(self):
        return self.summary['failed'] == 0

    def as_dict(self):
        return {
            'config': self.config,
            'checks': [check.as_dict() for check in self.checks],
            'summary': self.summary,
            'runtime_ms': self.runtime_ms,
        }


def format_check(check, color=False):
    value = '-' if check.value is None else '{:.3e}'.format(check.value)
    line = '{status:<4} {name} [{anchor}] value={value} tol={tol:.0e}'.format(
        status=check.status.upper(),
        name=check.name,
        anchor=check.anchor,
        value=value,
        tol=check.tol,
    )
    if check.status == SKIP and 'reason' in check.detail:
        line += ' ({})'.format(check.detail['reason'])
    return status_colored(check.status, line) if color else line


def format_summary(report, color=False):
    summary = report.summary
    line = '{passed} passed, {failed} failed, {skipped} skipped in {ms} ms'.format(ms=report.runtime_ms, **summary)
    return colored(line, Style.BOLD) if color else line


def emit_report(report, fmt='text', color=False):
    """Renders the report as UTF-8 bytes"""
    if fmt == 'json':
        text = json.dumps(report.as_dict(), indent=2, ensure_ascii=False) + '\n'
    elif fmt == 'text':
        lines = [format_check(check, color) for check in report.checks]
        lines.append(format_summary(report, color))
        text = '\n'.join(lines) + '\n'
    else:
        raise ValueError('unknown report format: {}'.format(fmt))
    return text.encode('utf-8')


def write_report(report, path, fmt='json'):
    """
    Writes the rendered report to `path`

    Raises:
        ReportError: the file cannot be written
    """
    try:
        with open(path, 'wb') as handle:
            handle.write(emit_report(report, fmt))
    except OSError as err:
        raise ReportError('cannot write report to {}: {}'.format(path, err.strerror))
    logger.info('report written to %s', path)
