#!/usr/bin/env python3
"""
Report Generation Module

Identity-check records, report assembly and JSON / markdown emission through Jinja2
templates with a plain-text fallback.
"""

import os
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

try:
    from jinja2 import Environment, FileSystemLoader
    JINJA2_AVAILABLE = True
except ImportError:
    JINJA2_AVAILABLE = False
    logging.warning("Jinja2 not available. Install with: pip install Jinja2")

from exceptions import PreconditionError
from utils import ensure_directory, save_json

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'


@dataclass
class CheckResult:
    """Outcome of one identity check; failures carry a witness."""

    id: str
    anchor: str
    status: str
    witness: Optional[str] = None
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self) -> Dict[str, Any]:
        data = {'id': self.id, 'anchor': self.anchor, 'status': self.status}
        if self.witness is not None:
            data['witness'] = self.witness
        if self.detail is not None:
            data['detail'] = self.detail
        return data


def run_check(check_id: str, anchor: str, body: Callable[[], Optional[str]]) -> CheckResult:
    """
    Run a body that returns None on success or a witness description on failure.

    PreconditionErrors raised by the body become "skipped" records.
    """
    try:
        witness = body()
    except PreconditionError as e:
        logger.warning(f"Skipping {check_id}: {e}")
        return CheckResult(check_id, anchor, SKIPPED, detail=f"precondition: {e}")
    if witness is None:
        return CheckResult(check_id, anchor, PASS)
    logger.info(f"Check {check_id} failed: {witness}")
    return CheckResult(check_id, anchor, FAIL, witness=witness)


def classification(result: CheckResult, flag: str) -> CheckResult:
    """
    A property that may be false on a valid instance: a failure becomes a skipped record
    that keeps its witness, so it never fails a report.
    """
    if not result.failed:
        return result
    return CheckResult(result.id, result.anchor, SKIPPED, witness=result.witness,
                       detail=f"{flag} is false")


def first_failure(items, predicate: Callable[[Any], bool],
                  describe: Callable[[Any], str] = repr) -> Optional[str]:
    """Witness for the first item on which ``predicate`` is False."""
    for item in items:
        if not predicate(item):
            return describe(item)
    return None


@dataclass
class Report:
    """
    A machine-readable report with optional tables, rendered as JSON and markdown.
    """

    title: str
    instance: str
    checks: List[CheckResult] = field(default_factory=list)
    tables: Dict[str, Any] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def add(self, result: CheckResult) -> None:
        self.checks.append(result)

    def extend(self, results: List[CheckResult]) -> None:
        self.checks.extend(results)

    def sorted_checks(self) -> List[CheckResult]:
        return sorted(self.checks, key=lambda c: c.id)

    def totals(self) -> Dict[str, int]:
        totals = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for check in self.checks:
            totals[check.status] = totals.get(check.status, 0) + 1
        return totals

    @property
    def ok(self) -> bool:
        return not any(check.failed for check in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'title': self.title,
            'instance': self.instance,
            'ok': self.ok,
            'totals': self.totals(),
            'checks': [check.to_dict() for check in self.sorted_checks()],
            'tables': self.tables,
            'metadata': self.metadata,
        }


class ReportWriter:
    """
    Writes reports to the configured output directory.
    """

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize the ReportWriter.

        Args:
            config: Configuration dictionary with a ``reports`` section
        """
        self.config = config.get('reports', {}) or {}
        self.output_dir = self.config.get('output_dir', './reports')
        self.formats = self.config.get('formats', ['json', 'markdown'])
        self.template_dir = self.config.get('template_dir', './templates')
        self.template_name = self.config.get('template', 'report.md.j2')

        if JINJA2_AVAILABLE and os.path.isdir(self.template_dir):
            self.jinja_env = Environment(
                loader=FileSystemLoader(self.template_dir),
                trim_blocks=True,
                lstrip_blocks=True
            )
        else:
            self.jinja_env = None
            logger.debug("Markdown reports use the plain-text renderer")

    def render_markdown(self, report: Report) -> str:
        context = report.to_dict()
        if self.jinja_env is not None:
            try:
                template = self.jinja_env.get_template(self.template_name)
                return template.render(**context)
            except Exception as e:
                logger.warning(f"Template rendering failed, using plain renderer: {e}")
        return self._render_plain(context)

    @staticmethod
    def _render_plain(context: Dict[str, Any]) -> str:
        lines = [f"# {context['title']}", '', f"Instance: `{context['instance']}`", '']
        totals = context['totals']
        lines.append(f"**{totals['pass']} passed, {totals['fail']} failed, "
                     f"{totals['skipped']} skipped**")
        lines.append('')
        if context['checks']:
            lines.append('| id | status | anchor | witness |')
            lines.append('|----|--------|--------|---------|')
            for check in context['checks']:
                lines.append(f"| {check['id']} | {check['status']} | {check['anchor']} | "
                             f"{check.get('witness', '') or check.get('detail', '')} |")
            lines.append('')
        for name, table in context['tables'].items():
            lines.append(f"## {name}")
            lines.append('')
            lines.append('```')
            lines.append(str(table))
            lines.append('```')
            lines.append('')
        return '\n'.join(lines)

    def write(self, report: Report, stem: str) -> List[str]:
        """
        Write the report in every configured format.

        Returns:
            list: Paths written
        """
        ensure_directory(self.output_dir)
        written = []
        if 'json' in self.formats:
            path = os.path.join(self.output_dir, f"{stem}.json")
            if save_json(report.to_dict(), path):
                written.append(path)
        if 'markdown' in self.formats:
            path = os.path.join(self.output_dir, f"{stem}.md")
            with open(path, 'w', encoding='utf-8') as f:
                f.write(self.render_markdown(report))
                f.write('\n')
            written.append(path)
        logger.info(f"Report written: {', '.join(written)}")
        return written
